"""Constructors and the built-in example algebras.

The corpus covers the special cases the theory is meant to unify (a Lie
algebra with zero product, commutative group algebras with zero bracket, a
superalgebra, genuinely colored examples) plus direct sums that exercise
several connection classes, an algebra with a nonzero center, and one whose
Lambda-support is not symmetric.
"""

from __future__ import annotations

from typing import Iterable, Mapping

from ..algebra import PoissonColorAlgebra
from ..grading import BiCharacter, GroupSpec
from ..scalars import ScalarOrderError, parse_scalar
from .fileformat import AxiomFailure, check_algebra

__all__ = [
    "construct",
    "construct_from_lie_color",
    "construct_from_associative",
    "construct_direct_sum",
    "sl2",
    "group_algebra",
    "grassmann_clifford",
    "color_torus",
    "quantum_torus",
    "zero_algebra",
    "builtin_corpus",
    "corpus_member",
    "CORPUS_NAMES",
    "REFUSAL_CASES",
]

BasisSpec = Iterable[tuple[str, Iterable[int], Iterable[int]]]
EntrySpec = Mapping[tuple[str, str], Mapping[str, object]]


def _table(names: dict[str, int], entries: EntrySpec | None, order: int) -> dict:
    out: dict = {}
    for (left, right), row in (entries or {}).items():
        out[(names[left], names[right])] = {names[k]: parse_scalar(c, order) for k, c in row.items()}
    return out


def construct(
    name: str,
    order: int,
    g_spec: GroupSpec,
    lambda_spec: GroupSpec,
    bichar: BiCharacter,
    basis: BasisSpec,
    product: EntrySpec | None = None,
    bracket: EntrySpec | None = None,
    check_commutative: bool = False,
    validate: bool = True,
) -> PoissonColorAlgebra:
    """Build from name-keyed tables, e.g. ``{("e", "f"): {"h": 1}}``."""
    basis = list(basis)
    names = {b[0]: n for n, b in enumerate(basis)}
    A = PoissonColorAlgebra(
        name,
        order,
        g_spec,
        lambda_spec,
        bichar,
        basis,
        _table(names, product, order),
        _table(names, bracket, order),
        check_commutative,
    )
    if validate:
        check_algebra(A)
    return A


def construct_from_lie_color(name, order, g_spec, lambda_spec, bichar, basis, bracket, **kw) -> PoissonColorAlgebra:
    """A Lie color algebra viewed as a Poisson color algebra with zero product."""
    return construct(name, order, g_spec, lambda_spec, bichar, basis, None, bracket, **kw)


def construct_from_associative(name, order, g_spec, lambda_spec, bichar, basis, product, **kw) -> PoissonColorAlgebra:
    """An associative color algebra viewed as a Poisson color algebra with zero bracket."""
    return construct(name, order, g_spec, lambda_spec, bichar, basis, product, None, **kw)


def _unique(existing: set[str], name: str) -> str:
    while name in existing:
        name += "'"
    existing.add(name)
    return name


def _product_group(a: GroupSpec, b: GroupSpec) -> tuple[GroupSpec, list[int], list[int]]:
    # Free coordinates first, then torsion; returns where each factor's coordinates land.
    free = a.free_rank + b.free_rank
    names_seen: set[str] = set()
    a_names = [_unique(names_seen, n) for n in a.gen_names]
    b_names = [_unique(names_seen, n) for n in b.gen_names]
    a_pos = list(range(a.free_rank)) + [free + t for t in range(len(a.torsion))]
    b_pos = [a.free_rank + t for t in range(b.free_rank)] + [
        free + len(a.torsion) + t for t in range(len(b.torsion))
    ]
    names = [""] * (a.ngens + b.ngens)
    for p, n in zip(a_pos, a_names):
        names[p] = n
    for p, n in zip(b_pos, b_names):
        names[p] = n
    spec = GroupSpec(free, a.torsion + b.torsion, tuple(names))
    return spec, a_pos, b_pos


def _embed(coords, pos: list[int], size: int) -> tuple[int, ...]:
    out = [0] * size
    for p, c in zip(pos, coords):
        out[p] = c
    return tuple(out)


def construct_direct_sum(A: PoissonColorAlgebra, B: PoissonColorAlgebra, name: str | None = None) -> PoissonColorAlgebra:
    """Block-diagonal sum; both gradings become product groups so the supports stay apart."""
    if A.order != B.order:
        raise ScalarOrderError(f"scalar orders differ: {A.order} vs {B.order}")
    G, ga, gb = _product_group(A.g_spec, B.g_spec)
    L, la, lb = _product_group(A.lambda_spec, B.lambda_spec)
    n = G.ngens
    N = A.bichar.order * B.bichar.order // _gcd(A.bichar.order, B.bichar.order)
    matrix = [[0] * n for _ in range(n)]
    for bc, pos in ((A.bichar, ga), (B.bichar, gb)):
        scale = N // bc.order
        for r, row in enumerate(bc.matrix):
            for c, x in enumerate(row):
                matrix[pos[r]][pos[c]] = x * scale
    bichar = BiCharacter(N, tuple(tuple(r) for r in matrix))

    seen: set[str] = set()
    basis = []
    for alg, gpos, lpos in ((A, ga, la), (B, gb, lb)):
        for b in alg.basis:
            basis.append(
                (_unique(seen, b.name), _embed(b.gdeg, gpos, G.ngens), _embed(b.ldeg, lpos, L.ngens))
            )
    shift = A.dim

    def merged(ta, tb):
        out = {k: dict(v) for k, v in ta.items()}
        for (i, j), row in tb.items():
            out[(i + shift, j + shift)] = {k + shift: c for k, c in row.items()}
        return out

    return PoissonColorAlgebra(
        name or f"{A.name}+{B.name}",
        A.order,
        G,
        L,
        bichar,
        basis,
        merged(A.product_table, B.product_table),
        merged(A.bracket_table, B.bracket_table),
        check_commutative=A.check_commutative and B.check_commutative,
    )


def _gcd(a: int, b: int) -> int:
    from math import gcd

    return gcd(a, b)


# -- named examples ---------------------------------------------------------------

_TRIVIAL_G = GroupSpec(0, ())


def sl2() -> PoissonColorAlgebra:
    """sl_2 graded by Z through the eigenvalues of ad h; zero product, trivial epsilon."""
    basis = [("e", (), (1,)), ("f", (), (-1,)), ("h", (), (0,))]
    bracket = {
        ("e", "f"): {"h": 1},
        ("f", "e"): {"h": -1},
        ("h", "e"): {"e": 2},
        ("e", "h"): {"e": -2},
        ("h", "f"): {"f": -2},
        ("f", "h"): {"f": 2},
    }
    return construct_from_lie_color(
        "sl2", 1, _TRIVIAL_G, GroupSpec(1, (), ("z",)), BiCharacter(1), basis, bracket,
        check_commutative=True,
    )


def group_algebra(n: int, symbol: str = "t", name: str | None = None) -> PoissonColorAlgebra:
    """F[Z_n] graded by Z_n, basis ``t0 .. t{n-1}``, zero bracket."""
    basis = [(f"{symbol}{a}", (), (a,)) for a in range(n)]
    product = {(f"{symbol}{a}", f"{symbol}{b}"): {f"{symbol}{(a + b) % n}": 1} for a in range(n) for b in range(n)}
    return construct_from_associative(
        name or f"group_algebra_z{n}", 1, _TRIVIAL_G, GroupSpec(0, (n,), (symbol,)), BiCharacter(1),
        basis, product, check_commutative=True,
    )


def grassmann_clifford() -> PoissonColorAlgebra:
    """Superalgebra spanned by 1 (even) and xi (odd): xi*xi = 0, {xi, xi} = 1."""
    basis = [("1", (0,), (0,)), ("xi", (1,), (1,))]
    product = {("1", "1"): {"1": 1}, ("1", "xi"): {"xi": 1}, ("xi", "1"): {"xi": 1}}
    bracket = {("xi", "xi"): {"1": 1}}
    return construct(
        "grassmann_clifford", 2, GroupSpec(0, (2,)), GroupSpec(0, (2,), ("s",)),
        BiCharacter(2, ((1,),)), basis, product, bracket, check_commutative=False,
    )


def color_torus() -> PoissonColorAlgebra:
    """Twisted group algebra of Z_3 x Z_3 with t_a t_b = zeta^(a1 b2) t_(a+b).

    It is epsilon-commutative for epsilon(a, b) = zeta^(a1 b2 - a2 b1), a
    genuinely colored bi-character with values in the cube roots of unity.
    """
    elems = [(a, b) for a in range(3) for b in range(3)]
    basis = [(f"t{a}{b}", (a, b), (a, b)) for a, b in elems]
    product = {}
    for a in elems:
        for b in elems:
            k = (a[0] * b[1]) % 3
            product[(f"t{a[0]}{a[1]}", f"t{b[0]}{b[1]}")] = {
                f"t{(a[0] + b[0]) % 3}{(a[1] + b[1]) % 3}": "1" if k == 0 else f"z^{k}"
            }
    return construct_from_associative(
        "color_torus_z3xz3", 3, GroupSpec(0, (3, 3)), GroupSpec(0, (3, 3), ("a", "b")),
        BiCharacter(3, ((0, 1), (-1, 0))), basis, product, check_commutative=True,
    )


def quantum_torus() -> PoissonColorAlgebra:
    """Noncommutative twisted group algebra of Z_3 x Z_3 with the commutator bracket."""
    elems = [(a, b) for a in range(3) for b in range(3)]
    basis = [(f"u{a}{b}", (), (a, b)) for a, b in elems]
    product, bracket = {}, {}
    for a in elems:
        for b in elems:
            target = f"u{(a[0] + b[0]) % 3}{(a[1] + b[1]) % 3}"
            key = (f"u{a[0]}{a[1]}", f"u{b[0]}{b[1]}")
            ab, ba = (a[0] * b[1]) % 3, (b[0] * a[1]) % 3
            product[key] = {target: f"z^{ab}"}
            if ab != ba:
                bracket[key] = {target: f"z^{ab} - z^{ba}"}
    return construct(
        "quantum_torus_z3xz3", 3, _TRIVIAL_G, GroupSpec(0, (3, 3), ("u", "v")), BiCharacter(1),
        basis, product, bracket,
    )


def zero_algebra(dim: int = 1, name: str = "zero_line") -> PoissonColorAlgebra:
    """``dim`` basis vectors in degree 1 with all products and brackets zero."""
    basis = [(f"c{i}", (), ()) for i in range(dim)]
    return construct(name, 1, _TRIVIAL_G, GroupSpec(0, ()), BiCharacter(1), basis, check_commutative=True)


def dual_numbers_z() -> PoissonColorAlgebra:
    """Unital algebra 1, x with x^2 = 0, x in Lambda-degree z: the support {z} is not symmetric."""
    basis = [("1", (), (0,)), ("x", (), (1,))]
    product = {("1", "1"): {"1": 1}, ("1", "x"): {"x": 1}, ("x", "1"): {"x": 1}}
    return construct_from_associative(
        "dual_numbers_z", 1, _TRIVIAL_G, GroupSpec(1, (), ("z",)), BiCharacter(1), basis, product,
        check_commutative=True,
    )


def group_algebra_z6_mod3() -> PoissonColorAlgebra:
    """F[Z_6] graded only by Z_3 (degree k mod 3): two-dimensional components."""
    basis = [(f"t{k}", (), (k % 3,)) for k in range(6)]
    product = {(f"t{a}", f"t{b}"): {f"t{(a + b) % 6}": 1} for a in range(6) for b in range(6)}
    return construct_from_associative(
        "group_algebra_z6_mod3", 1, _TRIVIAL_G, GroupSpec(0, (3,), ("t",)), BiCharacter(1), basis, product,
        check_commutative=True,
    )


def _two_block():
    return construct_direct_sum(group_algebra(3, "t"), group_algebra(3, "s"), name="two_block")


def _three_block():
    inner = construct_direct_sum(sl2(), group_algebra(3, "t"))
    return construct_direct_sum(inner, group_algebra(5, "s"), name="three_block")


def _central_line():
    return construct_direct_sum(group_algebra(3, "t"), zero_algebra(1, "u"), name="central_line")


_BUILDERS = {
    "sl2": sl2,
    "group_algebra_z3": lambda: group_algebra(3),
    "group_algebra_z5": lambda: group_algebra(5),
    "grassmann_clifford": grassmann_clifford,
    "color_torus_z3xz3": color_torus,
    "quantum_torus_z3xz3": quantum_torus,
    "two_block": _two_block,
    "three_block": _three_block,
    "central_line": _central_line,
    "group_algebra_z6_mod3": group_algebra_z6_mod3,
    "zero_line": zero_algebra,
    "dual_numbers_z": dual_numbers_z,
}

CORPUS_NAMES = tuple(_BUILDERS)
REFUSAL_CASES = frozenset({"dual_numbers_z"})


def corpus_member(name: str) -> PoissonColorAlgebra:
    try:
        builder = _BUILDERS[name]
    except KeyError:
        raise KeyError(f"no corpus algebra named {name!r}; choose from {', '.join(CORPUS_NAMES)}") from None
    A = builder()
    check_algebra(A)
    return A


def builtin_corpus() -> list[PoissonColorAlgebra]:
    return [corpus_member(n) for n in CORPUS_NAMES]


__all__ += ["AxiomFailure", "dual_numbers_z", "group_algebra_z6_mod3"]
