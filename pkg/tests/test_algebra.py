import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pck.algebra import (
    AlgebraStructureError,
    PoissonColorAlgebra,
    bracket,
    check_associativity,
    check_bigrading,
    check_epsilon_commutativity,
    check_jacobi,
    check_leibniz,
    check_skew_symmetry,
    mul,
    validate_all,
)
from pck.grading import BiCharacter, GroupSpec
from pck.scalars import Cyc
from pck.workbench.corpus import construct, group_algebra

from oracles import DenseAlgebra

TRIV = GroupSpec(0, ())
ZL = GroupSpec(1, (), ("z",))


def vec(A, **coeffs):
    return {A.index_of[k]: A.scalar(c) for k, c in coeffs.items()}


def test_mul_examples(corpus):
    F = corpus["group_algebra_z3"]
    assert mul(F, vec(F, t1=1), vec(F, t2=1)) == vec(F, t0=1)
    assert mul(F, {}, vec(F, t1=5)) == {}
    S = corpus["sl2"]
    assert mul(S, vec(S, e=1), vec(S, f=1)) == {}


def test_bracket_examples(corpus):
    S = corpus["sl2"]
    assert bracket(S, vec(S, h=1), vec(S, e=1)) == vec(S, e=2)
    assert bracket(S, vec(S, h=1, e=3), {}) == {}
    G = corpus["grassmann_clifford"]
    assert bracket(G, vec(G, xi=1), vec(G, xi=1)) == vec(G, **{"1": 1})


def test_bilinearity(corpus):
    S = corpus["sl2"]
    x, y = vec(S, e=2, h=-1), vec(S, f=3, e=1)
    expected = {}
    for i, a in x.items():
        for j, b in y.items():
            for k, c in bracket(S, {i: S.one}, {j: S.one}).items():
                expected[k] = expected.get(k, S.zero) + a * b * c
    assert bracket(S, x, y) == {k: c for k, c in expected.items() if c}


def test_bigrading_examples(corpus):
    assert check_bigrading(corpus["sl2"]).passed
    bad = PoissonColorAlgebra(
        "bad", 1, TRIV, ZL, BiCharacter(1), [("a", (), (1,))], product={(0, 0): {0: Cyc.one(1)}}
    )
    r = check_bigrading(bad)
    assert not r.passed and r.counterexamples[0].basis == ("a", "a", "a")
    empty = PoissonColorAlgebra("empty", 1, TRIV, ZL, BiCharacter(1), [("a", (), (1,))])
    assert check_bigrading(empty).passed


def test_associativity_examples(corpus):
    assert check_associativity(corpus["group_algebra_z3"]).passed
    assert check_associativity(corpus["sl2"]).passed
    F = corpus["group_algebra_z3"]
    table = {k: dict(v) for k, v in F.product_table.items()}
    i1, i2 = F.index_of["t1"], F.index_of["t2"]
    table[(i1, i1)] = {i2: F.scalar(2)}
    M = PoissonColorAlgebra("m", 1, F.g_spec, F.lambda_spec, F.bichar, [(b.name, b.gdeg, b.ldeg) for b in F.basis], table)
    r = check_associativity(M)
    assert not r.passed
    # (t1 t1) t2 = 2 t1 but t1 (t1 t2) = t1
    bad = {cx.basis for cx in r.counterexamples}
    assert ("t1", "t1", "t2") in bad
    assert "associativity" in DenseAlgebra(M).failures()


def upper_triangular(flag=True):
    basis = [("e11", (), ()), ("e12", (), ()), ("e22", (), ())]
    product = {
        ("e11", "e11"): {"e11": 1},
        ("e11", "e12"): {"e12": 1},
        ("e12", "e22"): {"e12": 1},
        ("e22", "e22"): {"e22": 1},
    }
    return construct("upper", 1, TRIV, TRIV, BiCharacter(1), basis, product, check_commutative=flag, validate=False)


def test_epsilon_commutativity_examples(corpus):
    assert check_epsilon_commutativity(corpus["group_algebra_z3"]).passed
    assert check_epsilon_commutativity(corpus["sl2"]).passed
    U = upper_triangular()
    assert check_associativity(U).passed
    r = check_epsilon_commutativity(U)
    assert not r.passed and ("e11", "e12") in {cx.basis for cx in r.counterexamples}
    assert "epsilon_commutativity" in DenseAlgebra(U).failures()
    # only checked when flagged
    assert validate_all(upper_triangular(False)).passed
    assert validate_all(upper_triangular(False)).results["epsilon_commutativity"].status == "skipped"


def test_color_torus_is_epsilon_commutative_but_not_commutative(corpus):
    T = corpus["color_torus_z3xz3"]
    assert check_epsilon_commutativity(T).passed
    a, b = vec(T, t10=1), vec(T, t01=1)
    assert mul(T, a, b) != mul(T, b, a)


def test_skew_examples(corpus):
    assert check_skew_symmetry(corpus["sl2"]).passed
    assert check_skew_symmetry(corpus["grassmann_clifford"]).passed
    assert check_skew_symmetry(corpus["group_algebra_z3"]).passed
    S = corpus["sl2"]
    table = {k: dict(v) for k, v in S.bracket_table.items()}
    del table[(S.index_of["f"], S.index_of["e"])]
    M = PoissonColorAlgebra("m", 1, S.g_spec, S.lambda_spec, S.bichar, [(b.name, b.gdeg, b.ldeg) for b in S.basis], None, table)
    assert not check_skew_symmetry(M).passed


def test_jacobi_examples(corpus):
    assert check_jacobi(corpus["sl2"]).passed
    assert check_jacobi(corpus["group_algebra_z3"]).passed
    assert check_jacobi(corpus["grassmann_clifford"]).passed


def test_leibniz_examples(corpus):
    for name in ("group_algebra_z3", "sl2", "grassmann_clifford", "quantum_torus_z3xz3"):
        assert check_leibniz(corpus[name]).passed


def test_leibniz_failure_detected():
    # unital algebra with a bracket that is not a derivation of the product
    basis = [("1", (), (0,)), ("x", (), (1,)), ("y", (), (-1,))]
    product = {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}, ("1", "y"): {"y": 1}, ("y", "1"): {"y": 1}}
    bracket_ = {("x", "y"): {"1": 1}, ("y", "x"): {"1": -1}}
    A = construct("bad_leibniz", 1, TRIV, ZL, BiCharacter(1), basis, product, bracket_, validate=False)
    r = check_leibniz(A)
    assert not r.passed
    assert "leibniz" in DenseAlgebra(A).failures()


def test_validate_all_matches_dense_oracle(corpus):
    for A in corpus.values():
        assert validate_all(A).passed
        assert DenseAlgebra(A).failures() == set()


def test_threads_do_not_change_results(corpus):
    U = upper_triangular()
    one = validate_all(U, threads=1)
    four = validate_all(U, threads=4)
    for name in one.results:
        assert one.results[name].status == four.results[name].status
        assert [c.basis for c in one.results[name].counterexamples] == [c.basis for c in four.results[name].counterexamples]


def test_counterexamples_capped():
    # t_a t_b = (a + 1) t_(a+b): associative only when a = 0
    F = group_algebra(5)
    table = {(i, j): {k: c * (i + 1) for k, c in v.items()} for (i, j), v in F.product_table.items()}
    M = PoissonColorAlgebra("skewed", 1, F.g_spec, F.lambda_spec, F.bichar, [(b.name, b.gdeg, b.ldeg) for b in F.basis], table)
    r = check_associativity(M)
    brute = sum(1 for a in range(5) for b in range(5) for c in range(5) if (a + 1) * ((a + b) % 5 + 1) != (b + 1) * (a + 1))
    assert r.failures == brute > 20
    assert len(r.counterexamples) == 20


def test_structure_errors():
    with pytest.raises(AlgebraStructureError):
        PoissonColorAlgebra("dup", 1, TRIV, TRIV, BiCharacter(1), [("a", (), ()), ("a", (), ())])
    with pytest.raises(AlgebraStructureError):
        PoissonColorAlgebra("n", 2, GroupSpec(0, (2,)), TRIV, BiCharacter(2, ((1, 0), (0, 1))), [])
    with pytest.raises(AlgebraStructureError):
        PoissonColorAlgebra("n", 2, TRIV, TRIV, BiCharacter(1), [("a", (), ())], product={(0, 5): {0: 1}})


def test_components_grouped_by_bidegree(corpus):
    A = corpus["group_algebra_z6_mod3"]
    assert sorted(len(v) for v in A.components.values()) == [2, 2, 2]


@settings(max_examples=40, deadline=None)
@given(st.lists(st.integers(-3, 3), min_size=9, max_size=9), st.lists(st.integers(-3, 3), min_size=9, max_size=9))
def test_color_torus_identities_on_random_vectors(xs, ys):
    from tests_support import color_torus_cached

    T = color_torus_cached()
    x = {i: T.scalar(c) for i, c in enumerate(xs) if c}
    y = {i: T.scalar(c) for i, c in enumerate(ys) if c}
    # associativity with a fixed third element
    z = {4: T.one, 7: T.scalar(2)}
    assert mul(T, mul(T, x, y), z) == mul(T, x, mul(T, y, z))
