import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pck.grading import (
    BiCharacter,
    GroupSpec,
    bichar_eval,
    bichar_validate,
    element_key,
    group_compose,
    group_inverse,
)
from pck.scalars import Cyc, root_of_unity

Z = GroupSpec(1, ())
Z3 = GroupSpec(0, (3,))
ZxZ2 = GroupSpec(1, (2,))


def test_compose_examples():
    assert group_compose(Z, (1,), (1,)) == (2,)
    assert group_compose(Z3, (2,), (2,)) == (1,)
    assert group_compose(ZxZ2, (1, 1), (2, 1)) == (3, 0)


def test_inverse_examples():
    assert group_inverse(Z, (1,)) == (-1,)
    assert group_inverse(Z3, (1,)) == (2,)
    assert group_inverse(ZxZ2, (0, 0)) == (0, 0)


def test_canonical_and_length_checks():
    assert Z3.canonical([5]) == (2,)
    assert Z3.canonical([-1]) == (2,)
    with pytest.raises(ValueError):
        Z3.compose((1,), (1, 0))
    with pytest.raises(ValueError):
        GroupSpec(0, (1,))
    with pytest.raises(ValueError):
        GroupSpec(-1, ())


def test_bichar_eval_examples():
    sup = BiCharacter(2, ((1,),))
    assert bichar_eval(sup, (1,), (1,)) == -1
    col = BiCharacter(3, ((0, 1), (-1, 0)))
    assert bichar_eval(col, (1, 0), (0, 1)) == root_of_unity(3, 1)
    for b, spec in ((sup, GroupSpec(0, (2,))), (col, GroupSpec(0, (3, 3)))):
        for g in spec.window():
            assert bichar_eval(b, g, spec.identity) == 1 == bichar_eval(b, spec.identity, g)


def test_validate_examples():
    assert bichar_validate(GroupSpec(0, ()), BiCharacter(1)).valid
    assert bichar_validate(Z, BiCharacter(1, ((0,),))).valid
    bad = bichar_validate(Z3, BiCharacter(3, ((1,),)))
    assert not bad.valid and any("B+B^T" in f for f in bad.failures)
    assert bichar_validate(GroupSpec(0, (2,)), BiCharacter(2, ((1,),))).valid


def test_validate_torsion_congruence():
    # skew matrix but 2 * 1 is not 0 mod 3 on a Z_2 generator: not well defined
    spec = GroupSpec(0, (2, 2))
    report = bichar_validate(spec, BiCharacter(3, ((0, 1), (-1, 0))))
    assert not report.valid
    assert any("2*B" in f for f in report.failures)


def test_validate_size_mismatch():
    assert not bichar_validate(GroupSpec(0, (2, 2)), BiCharacter(2, ((1,),))).valid


def test_format_and_parse_mult():
    L = GroupSpec(0, (3, 3), ("a", "b"))
    for g in L.window():
        assert L.parse_mult(L.format_mult(g)) == g
    assert L.format_mult((0, 0)) == "1"
    assert L.format_mult((2, 1)) == "a^2*b"
    zs = GroupSpec(1, (), ("z",))
    assert zs.format_mult((-1,)) == "z^-1"
    assert zs.parse_mult("[3]") == (3,)
    with pytest.raises(ValueError):
        zs.parse_mult("w")


def test_element_key_orders_small_before_large():
    elems = [(-1,), (2,), (1,), (0,)]
    assert sorted(elems, key=element_key) == [(0,), (1,), (-1,), (2,)]


skew_matrices = st.integers(1, 2).flatmap(
    lambda n: st.lists(st.integers(-4, 4), min_size=n * (n - 1) // 2, max_size=n * (n - 1) // 2).map(
        lambda upper: (n, upper)
    )
)


@settings(max_examples=30, deadline=None)
@given(skew_matrices, st.sampled_from([1, 2, 3, 4, 6]), st.lists(st.booleans(), min_size=3, max_size=3))
def test_skew_bicharacters_satisfy_axioms(data, N, diag_half):
    n, upper = data
    B = [[0] * n for _ in range(n)]
    it = iter(upper)
    for i in range(n):
        for j in range(i + 1, n):
            B[i][j] = next(it)
            B[j][i] = -B[i][j]
        if N % 2 == 0 and diag_half[i]:
            B[i][i] = N // 2
    spec = GroupSpec(n, ())
    b = BiCharacter(N, tuple(tuple(r) for r in B))
    assert bichar_validate(spec, b, radius=1).valid
    elems = spec.window(1)
    one = Cyc.one(N)
    for g, h in itertools.product(elems, repeat=2):
        assert bichar_eval(b, g, h) * bichar_eval(b, h, g) == one
        assert bichar_eval(b, g, g) in (one, -one)
    for g, h, f in itertools.product(elems[:9], repeat=3):
        gh = spec.compose(g, h)
        assert bichar_eval(b, gh, f) == bichar_eval(b, g, f) * bichar_eval(b, h, f)
        assert bichar_eval(b, f, gh) == bichar_eval(b, f, g) * bichar_eval(b, f, h)


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2), st.lists(st.integers(2, 6), max_size=2), st.data())
def test_group_laws(free, torsion, data):
    spec = GroupSpec(free, tuple(torsion))
    coords = st.lists(st.integers(-10, 10), min_size=spec.ngens, max_size=spec.ngens).map(spec.canonical)
    a, b, c = data.draw(coords), data.draw(coords), data.draw(coords)
    assert spec.compose(spec.compose(a, b), c) == spec.compose(a, spec.compose(b, c))
    assert spec.compose(a, b) == spec.compose(b, a)
    assert spec.compose(a, spec.inverse(a)) == spec.identity
    assert spec.compose(a, spec.identity) == a
