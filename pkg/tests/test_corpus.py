import pytest

from pck.algebra import validate_all
from pck.connections import check_symmetric_support, compute_supports, connection_classes
from pck.grading import bichar_validate
from pck.scalars import ScalarOrderError
from pck.workbench.corpus import (
    CORPUS_NAMES,
    REFUSAL_CASES,
    builtin_corpus,
    color_torus,
    construct_direct_sum,
    construct_from_associative,
    construct_from_lie_color,
    corpus_member,
    group_algebra,
    sl2,
    zero_algebra,
)
from pck.grading import BiCharacter, GroupSpec
from pck.workbench.fileformat import AxiomFailure


def test_corpus_size_and_validity():
    members = builtin_corpus()
    assert len(members) >= 9
    for A in members:
        assert validate_all(A).passed
        assert bichar_validate(A.g_spec, A.bichar).valid
        symmetric = check_symmetric_support(compute_supports(A))
        assert symmetric == (A.name not in REFUSAL_CASES)


def test_required_members_present():
    for name in ("sl2", "group_algebra_z3", "group_algebra_z5", "grassmann_clifford", "color_torus_z3xz3",
                 "two_block", "three_block", "central_line", "dual_numbers_z"):
        assert name in CORPUS_NAMES


def test_grassmann_clifford_sign_rule(corpus):
    G = corpus["grassmann_clifford"]
    xi = G.index_of["xi"]
    assert G.eps(xi, xi) == -1
    assert G.bracket_table[(xi, xi)] == {G.index_of["1"]: G.one}


def test_color_example_has_cube_root_values(corpus):
    T = corpus["color_torus_z3xz3"]
    values = {T.eps(i, j) for i in range(T.dim) for j in range(T.dim)}
    assert any(not x.is_rational() for x in values)


def test_direct_sum_examples(corpus):
    D = construct_direct_sum(group_algebra(3), group_algebra(3, "s"))
    assert D.dim == 6
    assert len(connection_classes(compute_supports(D)).classes) == 2
    A = sl2()
    Z = construct_direct_sum(A, zero_algebra(1, "u"))
    assert len(compute_supports(Z).sigma_lambda) == len(compute_supports(A).sigma_lambda)
    M = construct_direct_sum(sl2(), group_algebra(3))
    names = [[M.lambda_spec.format_mult(x) for x in c] for c in connection_classes(compute_supports(M)).sorted_classes()]
    assert names == [["z", "z^-1"], ["t", "t^2"]]
    with pytest.raises(ScalarOrderError):
        construct_direct_sum(sl2(), color_torus())


def test_direct_sum_renames_collisions():
    D = construct_direct_sum(group_algebra(3), group_algebra(3))
    assert D.lambda_spec.gen_names == ("t", "t'")
    assert len({b.name for b in D.basis}) == 6


def test_lie_color_constructor():
    basis = [("a", (), ())]
    A = construct_from_lie_color("abelian", 1, GroupSpec(), GroupSpec(), BiCharacter(1), basis, {})
    assert A.dim == 1 and not A.product_table
    bad = {("e", "f"): {"h": 1}, ("f", "e"): {"h": -1}, ("h", "e"): {"e": 2}, ("e", "h"): {"e": -2},
           ("h", "f"): {"f": 2}, ("f", "h"): {"f": -2}}
    with pytest.raises(AxiomFailure):
        construct_from_lie_color("bad_sl2", 1, GroupSpec(), GroupSpec(1, ()), BiCharacter(1),
                                 [("e", (), (1,)), ("f", (), (-1,)), ("h", (), (0,))], bad)


def test_associative_constructor():
    L = GroupSpec(0, (3,))
    basis = [(f"t{a}", (), (a,)) for a in range(3)]
    zero = construct_from_associative("zero", 1, GroupSpec(), L, BiCharacter(1), basis, {})
    assert not zero.bracket_table
    bad = {(f"t{a}", f"t{b}"): {f"t{(a + b) % 3}": 1} for a in range(3) for b in range(3)}
    bad[("t1", "t1")] = {"t2": 2}
    with pytest.raises(AxiomFailure):
        construct_from_associative("bad", 1, GroupSpec(), L, BiCharacter(1), basis, bad)


def test_unknown_member():
    with pytest.raises(KeyError):
        corpus_member("nope")
