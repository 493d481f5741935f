import itertools

import pytest

from pck.connections import (
    AsymmetricSupportError,
    WitnessChain,
    check_symmetric_support,
    compute_supports,
    connection_classes,
    is_connected,
    reachable,
)
from pck.grading import GroupSpec
from pck.workbench.corpus import REFUSAL_CASES

from oracles import connected_by_chains


def names(A, elems):
    return sorted(A.lambda_spec.format_mult(x) for x in elems)


def test_supports_examples(corpus):
    S = compute_supports(corpus["sl2"])
    assert names(corpus["sl2"], S.sigma_lambda) == ["z", "z^-1"]
    F = corpus["group_algebra_z3"]
    assert compute_supports(F).sigma_lambda == {(1,), (2,)}
    assert compute_supports(corpus["zero_line"]).sigma_lambda == frozenset()


def test_supports_of_g_and_lambda_g(corpus):
    G = corpus["grassmann_clifford"]
    S = compute_supports(G)
    assert S.sigma_g == {(1,)}
    assert S.lambda_g == {(1,): frozenset({(1,)})}


def test_symmetric_support_examples(corpus):
    assert check_symmetric_support(compute_supports(corpus["sl2"]))
    assert not check_symmetric_support(compute_supports(corpus["dual_numbers_z"]))
    assert check_symmetric_support(compute_supports(corpus["grassmann_clifford"]))  # s^2 = 1


def test_is_connected_examples(corpus):
    S = compute_supports(corpus["sl2"])
    chain = is_connected(S, (1,), (-1,))
    assert chain.elements == ((1,),)
    F = compute_supports(corpus["group_algebra_z3"])
    chain = is_connected(F, (1,), (2,))
    assert chain.elements in (((1,),), ((1,), (1,)))
    assert chain.is_valid(F, (1,), (2,))
    T = corpus["two_block"]
    TS = compute_supports(T)
    assert is_connected(TS, (1, 0), (0, 1)) is None


def test_is_connected_rejects_outside_support(corpus):
    S = compute_supports(corpus["sl2"])
    with pytest.raises(ValueError):
        is_connected(S, (2,), (1,))


def test_classes_examples(corpus):
    A = corpus["sl2"]
    assert [names(A, c) for c in connection_classes(compute_supports(A)).classes] == [["z", "z^-1"]]
    T = corpus["two_block"]
    cls = connection_classes(compute_supports(T)).classes
    assert sorted(map(sorted, cls)) == [[(0, 1), (0, 2)], [(1, 0), (2, 0)]]
    assert connection_classes(compute_supports(corpus["zero_line"])).classes == []


def test_refusal_on_asymmetric_support(corpus):
    with pytest.raises(AsymmetricSupportError):
        connection_classes(compute_supports(corpus["dual_numbers_z"]))


def test_witness_chain_format():
    L = GroupSpec(1, (), ("z",))
    chain = WitnessChain(((1,), (1,), (-3,)))
    assert chain.partial_products(L) == [(1,), (2,), (-1,)]
    assert chain.format(L) == "z -> z^2 -> z^-1"


def test_relation_matches_chain_enumeration(symmetric_corpus):
    for name, A in symmetric_corpus.items():
        S = compute_supports(A)
        if not check_symmetric_support(S):
            continue
        cc = connection_classes(S)
        for lam, mu in itertools.product(S.sigma_lambda, repeat=2):
            chain = is_connected(S, lam, mu)
            assert (chain is not None) == connected_by_chains(S.lambda_spec, S.sigma_lambda, lam, mu), (name, lam, mu)
            assert (chain is not None) == (mu in cc.class_of(lam))
            if chain is not None:
                assert chain.is_valid(S, lam, mu)


def test_classes_are_inverse_closed_and_partition(symmetric_corpus):
    for A in symmetric_corpus.values():
        S = compute_supports(A)
        cc = connection_classes(S)
        union = set()
        for c in cc.classes:
            assert not (union & c)
            union |= c
            assert all(S.lambda_spec.inverse(x) in c for x in c)
        assert union == S.sigma_lambda
        assert connection_classes(S).classes == cc.classes


def test_reachable_stays_in_support(corpus):
    S = compute_supports(corpus["color_torus_z3xz3"])
    for lam in S.sigma_lambda:
        assert reachable(S, lam) <= S.sigma_lambda


def test_witness_pairs_recorded(corpus):
    S = compute_supports(corpus["three_block"])
    cc = connection_classes(S, witness_pairs=[((1, 0, 0), (-1, 0, 0))])
    assert list(cc.witnesses) == [((1, 0, 0), (-1, 0, 0))]
