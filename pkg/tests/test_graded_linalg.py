import random
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from pck.graded_linalg import (
    GradedSubspace,
    NonHomogeneousError,
    annihilator_solve,
    complement_within,
    contains,
    dim,
    rref,
    span_of,
    subspace_eq,
    subspace_intersection,
    subspace_sum,
)
from pck.scalars import Cyc
from pck.workbench.corpus import zero_algebra

FLAT = zero_algebra(5, "flat")  # one five-dimensional component
KEY = next(iter(FLAT.components))


def v(A, **coeffs):
    return {A.index_of[k]: A.scalar(c) for k, c in coeffs.items()}


def flat_vec(cs):
    return {i: FLAT.scalar(c) for i, c in enumerate(cs) if c}


def sympy_rank(vectors, n=5):
    if not vectors:
        return 0
    return sympy.Matrix([[sympy.Rational(vec.get(i, FLAT.zero).coeffs[0]) for i in range(n)] for vec in vectors]).rank()


def test_span_examples(corpus):
    S = corpus["sl2"]
    sp = span_of(S, [v(S, e=1), v(S, e=2)])
    assert sp.dim == 1 and list(sp.components) == [S.key_of(S.index_of["e"])]
    assert span_of(S, []).is_zero()
    with pytest.raises(NonHomogeneousError):
        span_of(S, [v(S, h=1), v(S, e=1, h=1)])
    assert span_of(S, [v(S, e=1, h=1)], split=True).dim == 2


def test_contains_examples(corpus):
    S = corpus["sl2"]
    H = span_of(S, [v(S, h=1)])
    assert contains(H, v(S, h=3))
    assert not contains(H, v(S, e=1))
    W = GradedSubspace.whole(S)
    assert contains(W, v(S, e=1, f=-2, h=5))
    assert contains(H, {})


def test_sum_eq_dim_examples(corpus):
    S = corpus["sl2"]
    E, F = span_of(S, [v(S, e=1)]), span_of(S, [v(S, f=1)])
    assert subspace_sum(E, F).dim == 2
    assert subspace_eq(E + E, E)
    assert dim(GradedSubspace.zero(S)) == 0
    with pytest.raises(ValueError):
        subspace_sum(E, GradedSubspace.zero(FLAT))


def test_complement_examples():
    A = zero_algebra(2, "plane")
    key = next(iter(A.components))
    assert complement_within(GradedSubspace.zero(A), key) == GradedSubspace.whole(A)
    assert complement_within(GradedSubspace.whole(A), key).is_zero()
    line = span_of(A, [v(A, c0=1, c1=1)])
    assert line.pivots(key) == [0]
    assert complement_within(line, key) == span_of(A, [v(A, c1=1)])


def test_annihilator_examples(corpus):
    assert annihilator_solve(corpus["group_algebra_z3"]).is_zero()
    Z = corpus["zero_line"]
    assert annihilator_solve(Z) == GradedSubspace.whole(Z)
    assert annihilator_solve(corpus["sl2"]).is_zero()
    # restricting the constraints enlarges the solution: only {x, P} = 0 in F[Z_3]
    F = corpus["group_algebra_z3"]
    assert annihilator_solve(F, ("bracket",)) == GradedSubspace.whole(F)


def test_rref_is_canonical():
    one, zero = Cyc.one(1), Cyc.zero(1)
    rows = [[Cyc.rational(1, x) for x in r] for r in ([2, 4, 0], [1, 2, 1], [3, 6, 1])]
    red, piv = rref(rows, 3, zero)
    assert piv == [0, 2]
    assert red == [(one, Cyc.rational(1, 2), zero), (zero, zero, one)]


vectors5 = st.lists(st.lists(st.integers(-3, 3), min_size=5, max_size=5).map(flat_vec), max_size=5)


@settings(max_examples=80, deadline=None)
@given(vectors5, st.randoms(use_true_random=False))
def test_span_matches_sympy_rank_and_is_order_independent(vecs, rnd):
    S = span_of(FLAT, vecs)
    assert S.dim == sympy_rank(vecs)
    shuffled = list(vecs)
    rnd.shuffle(shuffled)
    assert span_of(FLAT, shuffled).components == S.components
    for x in vecs:
        assert contains(S, x)


@settings(max_examples=80, deadline=None)
@given(vectors5, vectors5)
def test_dimension_formula(a, b):
    S, T = span_of(FLAT, a), span_of(FLAT, b)
    meet = subspace_intersection(S, T)
    assert (S + T).dim + meet.dim == S.dim + T.dim
    assert (S + T).dim == sympy_rank(a + b)
    for x in meet.vectors():
        assert contains(S, x) and contains(T, x)


@settings(max_examples=60, deadline=None)
@given(vectors5)
def test_complement_is_complementary(vecs):
    S = span_of(FLAT, vecs)
    C = complement_within(S, KEY)
    assert S.dim + C.dim == 5
    assert S + C == GradedSubspace.whole(FLAT)
    assert subspace_intersection(S, C).is_zero()


def test_cyclotomic_coefficients(corpus):
    T = corpus["color_torus_z3xz3"]
    z = Cyc(3, (0, 1))
    i = T.index_of["t11"]
    S = span_of(T, [{i: z}])
    assert contains(S, {i: Cyc.one(3)})
    assert S.coordinates({i: z * z}) == [z * z]


def test_coordinates_roundtrip():
    rnd = random.Random(3)
    vecs = [flat_vec([rnd.randint(-2, 2) for _ in range(5)]) for _ in range(3)]
    S = span_of(FLAT, vecs)
    basis = S.vectors()
    for x in vecs:
        coords = S.coordinates(x)
        rebuilt = {}
        for c, b in zip(coords, basis):
            for k, val in b.items():
                rebuilt[k] = rebuilt.get(k, FLAT.zero) + c * val
        assert {k: c for k, c in rebuilt.items() if c} == x
    with pytest.raises(ValueError):
        GradedSubspace.zero(FLAT).coordinates(flat_vec([1, 0, 0, 0, 0]))


def test_fraction_entries():
    S = span_of(FLAT, [{0: FLAT.scalar(Fraction(1, 3)), 1: FLAT.scalar(Fraction(2, 7))}])
    assert S.vectors() == [{0: FLAT.one, 1: FLAT.scalar(Fraction(6, 7))}]
