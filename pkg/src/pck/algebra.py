"""Bigraded algebras with two structure-constant products, and their axiom checks.

A :class:`PoissonColorAlgebra` is a finite basis, each element homogeneous for
both the color grading ``G`` and the coarser grading ``Lambda``, together with
sparse tables for the associative product and the bracket.  Vectors are plain
``dict[int, Cyc]`` maps from basis index to nonzero coefficient.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Mapping

from .errors import InputError
from .grading import BiCharacter, GroupElement, GroupSpec, element_key
from .scalars import Cyc

__all__ = [
    "BasisElement",
    "PoissonColorAlgebra",
    "Vector",
    "Counterexample",
    "AxiomResult",
    "AxiomReport",
    "AlgebraStructureError",
    "add_into",
    "scale",
    "vec_add",
    "vec_sub",
    "mul",
    "bracket",
    "check_bigrading",
    "check_associativity",
    "check_epsilon_commutativity",
    "check_skew_symmetry",
    "check_jacobi",
    "check_leibniz",
    "validate_all",
    "AXIOMS",
    "COUNTEREXAMPLE_CAP",
]

Vector = dict  # basis index -> nonzero Cyc
Table = Mapping[tuple[int, int], Mapping[int, Cyc]]
ComponentKey = tuple[GroupElement, GroupElement]  # (ldeg, gdeg)

COUNTEREXAMPLE_CAP = 20


class AlgebraStructureError(InputError):
    """The basis or a structure table is malformed (bad index, mixed scalars, ...)."""


@dataclass(frozen=True)
class BasisElement:
    index: int
    name: str
    gdeg: GroupElement
    ldeg: GroupElement


def add_into(acc: dict, v: Mapping[int, Cyc], c: Cyc | int = 1) -> dict:
    """acc += c * v, dropping zeros.  Mutates and returns ``acc``."""
    for k, x in v.items():
        y = acc.get(k)
        y = x * c if y is None else y + x * c
        if y:
            acc[k] = y
        else:
            acc.pop(k, None)
    return acc


def scale(v: Mapping[int, Cyc], c) -> Vector:
    if not c:
        return {}
    return {k: x * c for k, x in v.items()}


def vec_add(u: Mapping[int, Cyc], v: Mapping[int, Cyc]) -> Vector:
    return add_into(dict(u), v)


def vec_sub(u: Mapping[int, Cyc], v: Mapping[int, Cyc]) -> Vector:
    return add_into(dict(u), v, -1)


def _clean_table(table, dim: int, order: int, label: str) -> dict[tuple[int, int], dict[int, Cyc]]:
    out: dict[tuple[int, int], dict[int, Cyc]] = {}
    for (i, j), row in table.items():
        for idx in (i, j):
            if not 0 <= idx < dim:
                raise AlgebraStructureError(f"{label}: basis index {idx} out of range")
        clean = {}
        for k, c in row.items():
            if not 0 <= k < dim:
                raise AlgebraStructureError(f"{label}: basis index {k} out of range")
            if not isinstance(c, Cyc) or c.order != order:
                raise AlgebraStructureError(f"{label}: coefficient {c!r} is not in Q(zeta_{order})")
            if c:
                clean[k] = c
        if clean:
            out[(i, j)] = clean
    return out


class PoissonColorAlgebra:
    """Finite-dimensional bigraded algebra given by structure constants.

    Instances are treated as immutable once built.  Construction checks only
    well-formedness; use :func:`validate_all` for the defining identities.
    """

    def __init__(
        self,
        name: str,
        order: int,
        g_spec: GroupSpec,
        lambda_spec: GroupSpec,
        bichar: BiCharacter,
        basis: Iterable[tuple[str, Iterable[int], Iterable[int]]],
        product: Table | None = None,
        bracket: Table | None = None,
        check_commutative: bool = False,
    ):
        self.name = name
        self.order = order
        self.g_spec = g_spec
        self.lambda_spec = lambda_spec
        self.bichar = bichar
        if bichar.size != g_spec.ngens:
            raise AlgebraStructureError("bi-character size does not match the color group")
        if order % bichar.order:
            raise AlgebraStructureError(
                f"bi-character values zeta_{bichar.order} do not live in Q(zeta_{order})"
            )
        elems = []
        for i, (bname, gdeg, ldeg) in enumerate(basis):
            elems.append(BasisElement(i, bname, g_spec.canonical(gdeg), lambda_spec.canonical(ldeg)))
        names = [b.name for b in elems]
        if len(set(names)) != len(names):
            raise AlgebraStructureError(f"basis names must be unique: {names}")
        self.basis: tuple[BasisElement, ...] = tuple(elems)
        self.product_table = _clean_table(product or {}, len(elems), order, "product")
        self.bracket_table = _clean_table(bracket or {}, len(elems), order, "bracket")
        self.check_commutative = check_commutative

    def __repr__(self) -> str:
        return f"<PoissonColorAlgebra {self.name!r} dim={self.dim} N={self.order}>"

    # -- basic data -------------------------------------------------------

    @property
    def dim(self) -> int:
        return len(self.basis)

    @cached_property
    def index_of(self) -> dict[str, int]:
        return {b.name: b.index for b in self.basis}

    @cached_property
    def zero(self) -> Cyc:
        return Cyc.zero(self.order)

    @cached_property
    def one(self) -> Cyc:
        return Cyc.one(self.order)

    def scalar(self, value) -> Cyc:
        from .scalars import parse_scalar

        return parse_scalar(value, self.order)

    def basis_vector(self, i: int) -> Vector:
        return {i: self.one}

    def key_of(self, i: int) -> ComponentKey:
        b = self.basis[i]
        return (b.ldeg, b.gdeg)

    @cached_property
    def components(self) -> dict[ComponentKey, tuple[int, ...]]:
        """Bigraded components, each a sorted tuple of basis indices, in sorted key order."""
        comps: dict[ComponentKey, list[int]] = {}
        for b in self.basis:
            comps.setdefault((b.ldeg, b.gdeg), []).append(b.index)
        keys = sorted(comps, key=component_sort_key)
        return {k: tuple(comps[k]) for k in keys}

    @cached_property
    def _eps_cache(self) -> dict[tuple[GroupElement, GroupElement], Cyc]:
        gdegs = sorted({b.gdeg for b in self.basis})
        return {(g, h): self.bichar.value(g, h, self.order) for g in gdegs for h in gdegs}

    def eps_deg(self, g: GroupElement, h: GroupElement) -> Cyc:
        try:
            return self._eps_cache[g, h]
        except KeyError:
            return self.bichar.value(g, h, self.order)

    def eps(self, i: int, j: int) -> Cyc:
        """epsilon on the color degrees of basis elements ``i`` and ``j``."""
        return self.eps_deg(self.basis[i].gdeg, self.basis[j].gdeg)

    # -- products ---------------------------------------------------------

    def _apply(self, table, x: Mapping[int, Cyc], y: Mapping[int, Cyc]) -> Vector:
        out: Vector = {}
        for i, a in x.items():
            for j, b in y.items():
                row = table.get((i, j))
                if row:
                    add_into(out, row, a * b)
        return out

    def mul(self, x: Mapping[int, Cyc], y: Mapping[int, Cyc]) -> Vector:
        return self._apply(self.product_table, x, y)

    def bracket(self, x: Mapping[int, Cyc], y: Mapping[int, Cyc]) -> Vector:
        return self._apply(self.bracket_table, x, y)

    def homogeneous_key(self, v: Mapping[int, Cyc]) -> ComponentKey | None:
        """Component of ``v`` if it is bihomogeneous and nonzero, else None."""
        keys = {self.key_of(i) for i in v}
        return keys.pop() if len(keys) == 1 else None

    def split(self, v: Mapping[int, Cyc]) -> dict[ComponentKey, Vector]:
        parts: dict[ComponentKey, Vector] = {}
        for i, c in v.items():
            if c:
                parts.setdefault(self.key_of(i), {})[i] = c
        return parts

    def format_vector(self, v: Mapping[int, Cyc]) -> str:
        if not v:
            return "0"
        terms = []
        for i in sorted(v):
            c = v[i]
            name = self.basis[i].name
            if c == 1:
                terms.append(name)
            elif c == -1:
                terms.append(f"-{name}")
            elif c.is_rational():
                terms.append(f"{c}*{name}")
            else:
                terms.append(f"({c})*{name}")
        out = terms[0]
        for t in terms[1:]:
            out += f" - {t[1:]}" if t.startswith("-") else f" + {t}"
        return out


def component_sort_key(key: ComponentKey):
    ldeg, gdeg = key
    return (element_key(ldeg), element_key(gdeg))


def mul(A: PoissonColorAlgebra, x: Mapping[int, Cyc], y: Mapping[int, Cyc]) -> Vector:
    return A.mul(x, y)


def bracket(A: PoissonColorAlgebra, x: Mapping[int, Cyc], y: Mapping[int, Cyc]) -> Vector:
    return A.bracket(x, y)


# -- axiom reports ------------------------------------------------------------


@dataclass
class Counterexample:
    basis: tuple[str, ...]
    lhs: Vector
    rhs: Vector
    detail: str = ""


@dataclass
class AxiomResult:
    axiom: str
    checked: bool = True
    counterexamples: list[Counterexample] = field(default_factory=list)
    failures: int = 0

    @property
    def passed(self) -> bool:
        return self.failures == 0

    @property
    def status(self) -> str:
        if not self.checked:
            return "skipped"
        return "pass" if self.passed else "fail"


@dataclass
class AxiomReport:
    results: dict[str, AxiomResult] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results.values())

    def failed_axioms(self) -> list[str]:
        return [name for name, r in self.results.items() if not r.passed]

    def first_counterexample(self) -> tuple[str, Counterexample] | None:
        for name, r in self.results.items():
            if r.counterexamples:
                return name, r.counterexamples[0]
        return None

    def __bool__(self) -> bool:
        return self.passed


# A triple check returns (lhs, rhs) for basis indices (i, j, k).
TripleCheck = Callable[[PoissonColorAlgebra, int, int, int], tuple[Vector, Vector]]


def _run_checks(
    A: PoissonColorAlgebra, axiom: str, arity: int, check, threads: int = 1
) -> AxiomResult:
    result = AxiomResult(axiom)
    n = A.dim

    def chunk(i: int) -> list[Counterexample]:
        found = []
        for rest in itertools.product(range(n), repeat=arity - 1):
            idx = (i,) + rest
            lhs, rhs = check(A, *idx)
            if lhs != rhs:
                found.append(Counterexample(tuple(A.basis[t].name for t in idx), lhs, rhs))
        return found

    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            chunks = list(pool.map(chunk, range(n)))
    else:
        chunks = [chunk(i) for i in range(n)]
    for found in chunks:  # merged in triple order whatever the thread count
        result.failures += len(found)
        room = COUNTEREXAMPLE_CAP - len(result.counterexamples)
        result.counterexamples.extend(found[:room])
    return result


def _e(A: PoissonColorAlgebra, i: int) -> Vector:
    return {i: A.one}


def check_bigrading(A: PoissonColorAlgebra, threads: int = 1) -> AxiomResult:
    """Every table entry (i, j) -> k must land in degree ldeg(i)ldeg(j), gdeg(i)+gdeg(j)."""
    result = AxiomResult("bigrading")
    L, G = A.lambda_spec, A.g_spec
    for label, table in (("product", A.product_table), ("bracket", A.bracket_table)):
        for (i, j) in sorted(table):
            bi, bj = A.basis[i], A.basis[j]
            want = (L.compose(bi.ldeg, bj.ldeg), G.compose(bi.gdeg, bj.gdeg))
            for k in sorted(table[(i, j)]):
                if A.key_of(k) != want:
                    result.failures += 1
                    if len(result.counterexamples) < COUNTEREXAMPLE_CAP:
                        result.counterexamples.append(
                            Counterexample(
                                (bi.name, bj.name, A.basis[k].name),
                                {k: table[(i, j)][k]},
                                {},
                                detail=(
                                    f"{label} entry {bi.name},{bj.name} -> {A.basis[k].name}: "
                                    f"expected degree ({L.format_mult(want[0])}, {list(want[1])})"
                                ),
                            )
                        )
    return result


def _assoc(A, i, j, k):
    ei, ej, ek = _e(A, i), _e(A, j), _e(A, k)
    return A.mul(A.mul(ei, ej), ek), A.mul(ei, A.mul(ej, ek))


def _comm(A, i, j):
    ei, ej = _e(A, i), _e(A, j)
    return A.mul(ei, ej), scale(A.mul(ej, ei), A.eps(i, j))


def _skew(A, i, j):
    ei, ej = _e(A, i), _e(A, j)
    return A.bracket(ei, ej), scale(A.bracket(ej, ei), -A.eps(i, j))


def _jacobi(A, i, j, k):
    # [x,[y,z]] = [[x,y],z] + eps(x,y) [y,[x,z]]
    x, y, z = _e(A, i), _e(A, j), _e(A, k)
    lhs = A.bracket(x, A.bracket(y, z))
    rhs = A.bracket(A.bracket(x, y), z)
    add_into(rhs, A.bracket(y, A.bracket(x, z)), A.eps(i, j))
    return lhs, rhs


def _leibniz(A, i, j, k):
    # {xy, z} = x{y,z} + eps(y,z) {x,z} y
    x, y, z = _e(A, i), _e(A, j), _e(A, k)
    lhs = A.bracket(A.mul(x, y), z)
    rhs = A.mul(x, A.bracket(y, z))
    add_into(rhs, A.mul(A.bracket(x, z), y), A.eps(j, k))
    return lhs, rhs


def check_associativity(A: PoissonColorAlgebra, threads: int = 1) -> AxiomResult:
    return _run_checks(A, "associativity", 3, _assoc, threads)


def check_epsilon_commutativity(A: PoissonColorAlgebra, threads: int = 1) -> AxiomResult:
    return _run_checks(A, "epsilon_commutativity", 2, _comm, threads)


def check_skew_symmetry(A: PoissonColorAlgebra, threads: int = 1) -> AxiomResult:
    return _run_checks(A, "skew_symmetry", 2, _skew, threads)


def check_jacobi(A: PoissonColorAlgebra, threads: int = 1) -> AxiomResult:
    return _run_checks(A, "jacobi", 3, _jacobi, threads)


def check_leibniz(A: PoissonColorAlgebra, threads: int = 1) -> AxiomResult:
    return _run_checks(A, "leibniz", 3, _leibniz, threads)


AXIOMS = {
    "bigrading": check_bigrading,
    "associativity": check_associativity,
    "skew_symmetry": check_skew_symmetry,
    "jacobi": check_jacobi,
    "leibniz": check_leibniz,
    "epsilon_commutativity": check_epsilon_commutativity,
}


def validate_all(A: PoissonColorAlgebra, threads: int = 1) -> AxiomReport:
    """Run every defining identity; epsilon-commutativity only when flagged."""
    report = AxiomReport()
    for name, check in AXIOMS.items():
        if name == "epsilon_commutativity" and not A.check_commutative:
            report.results[name] = AxiomResult(name, checked=False)
            continue
        report.results[name] = check(A, threads=threads)
    return report
