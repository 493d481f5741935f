"""Exact linear algebra on bigraded subspaces.

A :class:`GradedSubspace` stores, for each bigraded component ``(ldeg, gdeg)``
of its ambient algebra, a reduced row echelon matrix whose columns are the
basis indices of that component in ascending order.  Because every operation
here preserves the component structure, all work is done one component at a
time.
"""

from __future__ import annotations

from typing import Callable, Iterable, Mapping, Sequence

from .algebra import ComponentKey, PoissonColorAlgebra, Vector
from .scalars import Cyc

__all__ = [
    "GradedSubspace",
    "NonHomogeneousError",
    "rref",
    "nullspace",
    "span_of",
    "contains",
    "subspace_sum",
    "subspace_eq",
    "subspace_intersection",
    "dim",
    "complement_within",
    "annihilator_solve",
    "kernel_within",
]

Row = tuple[Cyc, ...]


class NonHomogeneousError(ValueError):
    """A vector that must be bihomogeneous has parts in several components."""


def rref(rows: Iterable[Sequence[Cyc]], ncols: int, zero: Cyc) -> tuple[list[Row], list[int]]:
    """Reduced row echelon form; returns the nonzero rows and their pivot columns."""
    m = [list(r) for r in rows if any(r)]
    pivots: list[int] = []
    r = 0
    for col in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][col]), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        inv = m[r][col].inverse()
        m[r] = [x * inv if x else zero for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][col]:
                f = m[i][col]
                m[i] = [a - f * b if b else a for a, b in zip(m[i], m[r])]
        pivots.append(col)
        r += 1
    return [tuple(row) for row in m[:r]], pivots


def nullspace(matrix: Sequence[Sequence[Cyc]], ncols: int, zero: Cyc, one: Cyc) -> list[Row]:
    """Basis of {x : M x = 0}, one vector per free column."""
    red, pivots = rref(matrix, ncols, zero)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [zero] * ncols
        v[f] = one
        for row, p in zip(red, pivots):
            if row[f]:
                v[p] = -row[f]
        basis.append(tuple(v))
    return basis


class GradedSubspace:
    """A subspace spanned by bihomogeneous vectors, kept in canonical form."""

    __slots__ = ("algebra", "components", "_pivots")

    def __init__(self, algebra: PoissonColorAlgebra, components: Mapping[ComponentKey, Iterable[Sequence[Cyc]]] = ()):
        self.algebra = algebra
        comps: dict[ComponentKey, tuple[Row, ...]] = {}
        pivots: dict[ComponentKey, list[int]] = {}
        amb = algebra.components
        for key, rows in dict(components).items():
            if key not in amb:
                rows = [r for r in rows if any(r)]
                if rows:
                    raise ValueError(f"component {key} does not exist in {algebra.name}")
                continue
            red, piv = rref(rows, len(amb[key]), algebra.zero)
            if red:
                comps[key] = tuple(red)
                pivots[key] = piv
        self.components = {k: comps[k] for k in amb if k in comps}
        self._pivots = pivots

    # -- construction helpers ----------------------------------------------

    @classmethod
    def zero(cls, A: PoissonColorAlgebra) -> GradedSubspace:
        return cls(A)

    @classmethod
    def whole(cls, A: PoissonColorAlgebra, keys: Iterable[ComponentKey] | None = None) -> GradedSubspace:
        comps = {}
        for key in (A.components if keys is None else keys):
            n = len(A.components[key])
            comps[key] = [tuple(A.one if c == r else A.zero for c in range(n)) for r in range(n)]
        return cls(A, comps)

    # -- views ----------------------------------------------------------------

    @property
    def dim(self) -> int:
        return sum(len(rows) for rows in self.components.values())

    def component_dim(self, key: ComponentKey) -> int:
        return len(self.components.get(key, ()))

    def pivots(self, key: ComponentKey) -> list[int]:
        return self._pivots.get(key, [])

    def vectors(self) -> list[Vector]:
        """Spanning (and independent) vectors, in component then row order."""
        out = []
        amb = self.algebra.components
        for key, rows in self.components.items():
            idx = amb[key]
            for row in rows:
                out.append({idx[c]: x for c, x in enumerate(row) if x})
        return out

    def restrict(self, keys: Iterable[ComponentKey]) -> GradedSubspace:
        keys = set(keys)
        return GradedSubspace(self.algebra, {k: v for k, v in self.components.items() if k in keys})

    def is_zero(self) -> bool:
        return not self.components

    def __eq__(self, other) -> bool:
        if not isinstance(other, GradedSubspace):
            return NotImplemented
        return subspace_eq(self, other)

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"<GradedSubspace dim={self.dim} in {self.algebra.name}>"

    def __add__(self, other: GradedSubspace) -> GradedSubspace:
        return subspace_sum(self, other)

    def __contains__(self, v: Mapping[int, Cyc]) -> bool:
        return contains(self, v)

    # -- reduction ------------------------------------------------------------

    def reduce(self, key: ComponentKey, row: Sequence[Cyc]) -> list[Cyc]:
        """Residue of a dense component row modulo this subspace's component."""
        row = list(row)
        for basis_row, p in zip(self.components.get(key, ()), self.pivots(key)):
            f = row[p]
            if f:
                row = [a - f * b if b else a for a, b in zip(row, basis_row)]
        return row

    def coordinates(self, v: Mapping[int, Cyc]) -> list[Cyc]:
        """Coefficients of ``v`` on :meth:`vectors`; raises if ``v`` is not inside."""
        A = self.algebra
        parts = A.split(v)
        coords: list[Cyc] = []
        for key, rows in self.components.items():
            dense = _dense(A, key, parts.pop(key, {}))
            if any(self.reduce(key, dense)):
                raise ValueError("vector is not in the subspace")
            coords.extend(dense[p] for p in self.pivots(key))
        if any(parts.values()):
            raise ValueError("vector is not in the subspace")
        return coords


def _dense(A: PoissonColorAlgebra, key: ComponentKey, v: Mapping[int, Cyc]) -> list[Cyc]:
    idx = A.components[key]
    return [v.get(i, A.zero) for i in idx]


def _sparse(A: PoissonColorAlgebra, key: ComponentKey, row: Sequence[Cyc]) -> Vector:
    idx = A.components[key]
    return {idx[c]: x for c, x in enumerate(row) if x}


def span_of(A: PoissonColorAlgebra, vectors: Iterable[Mapping[int, Cyc]], *, split: bool = False) -> GradedSubspace:
    """Graded span of bihomogeneous vectors.

    With ``split=True`` mixed vectors are first broken into homogeneous parts
    (the span then generally grows); otherwise they are rejected.
    """
    rows: dict[ComponentKey, list[list[Cyc]]] = {}
    for v in vectors:
        parts = A.split(v)
        if len(parts) > 1 and not split:
            raise NonHomogeneousError(f"vector {A.format_vector(v)} is not bihomogeneous")
        for key, part in parts.items():
            rows.setdefault(key, []).append(_dense(A, key, part))
    return GradedSubspace(A, rows)


def contains(S: GradedSubspace, v: Mapping[int, Cyc]) -> bool:
    A = S.algebra
    for key, part in A.split(v).items():
        if key not in S.components:
            return False
        if any(S.reduce(key, _dense(A, key, part))):
            return False
    return True


def _check_ambient(S: GradedSubspace, T: GradedSubspace) -> None:
    if S.algebra is not T.algebra:
        raise ValueError("subspaces live in different algebras")


def subspace_sum(S: GradedSubspace, T: GradedSubspace) -> GradedSubspace:
    _check_ambient(S, T)
    comps: dict[ComponentKey, list] = {k: list(v) for k, v in S.components.items()}
    for k, rows in T.components.items():
        comps.setdefault(k, []).extend(rows)
    return GradedSubspace(S.algebra, comps)


def subspace_eq(S: GradedSubspace, T: GradedSubspace) -> bool:
    _check_ambient(S, T)
    return S.components == T.components


def dim(S: GradedSubspace) -> int:
    return S.dim


def subspace_intersection(S: GradedSubspace, T: GradedSubspace) -> GradedSubspace:
    """S ∩ T by the Zassenhaus double-width row reduction, per component."""
    _check_ambient(S, T)
    A = S.algebra
    comps = {}
    for key in S.components.keys() & T.components.keys():
        n = len(A.components[key])
        zeros = (A.zero,) * n
        block = [tuple(r) + tuple(r) for r in S.components[key]]
        block += [tuple(r) + zeros for r in T.components[key]]
        red, piv = rref(block, 2 * n, A.zero)
        comps[key] = [row[n:] for row, p in zip(red, piv) if p >= n]
    return GradedSubspace(A, comps)


def complement_within(S: GradedSubspace, key: ComponentKey) -> GradedSubspace:
    """Standard basis vectors at the non-pivot columns of S's component ``key``."""
    A = S.algebra
    n = len(A.components.get(key, ()))
    piv = set(S.pivots(key))
    rows = [tuple(A.one if c == f else A.zero for c in range(n)) for f in range(n) if f not in piv]
    return GradedSubspace(A, {key: rows})


def kernel_within(
    S: GradedSubspace,
    images: Callable[[Vector], list[tuple[ComponentKey, Vector]]],
    modulo: GradedSubspace | None = None,
) -> GradedSubspace:
    """{x in S : every image of x vanishes (modulo ``modulo``)}.

    ``images(x)`` returns a list of (target component, vector) pairs that must
    depend linearly on ``x``; entries with the same position in the list are
    compared across the spanning vectors of each component of S.
    """
    A = S.algebra
    out = {}
    for key, rows in S.components.items():
        spanning = [_sparse(A, key, r) for r in rows]
        columns = []  # one column per spanning vector
        for v in spanning:
            col: list[Cyc] = []
            for tkey, w in images(v):
                dense = _dense(A, tkey, w) if tkey in A.components else []
                if modulo is not None and dense:
                    dense = modulo.reduce(tkey, dense)
                col.extend(dense)
            columns.append(col)
        height = len(columns[0]) if columns else 0
        if any(len(c) != height for c in columns):
            raise ValueError("image layout must not depend on the vector")
        matrix = [[columns[j][i] for j in range(len(columns))] for i in range(height)]
        coeffs = nullspace(matrix, len(spanning), A.zero, A.one)
        kept = []
        for c in coeffs:
            combo = [A.zero] * len(rows[0])
            for f, row in zip(c, rows):
                if f:
                    combo = [a + f * b if b else a for a, b in zip(combo, row)]
            kept.append(combo)
        out[key] = kept
    return GradedSubspace(A, out)


def image_layout(A: PoissonColorAlgebra, key: ComponentKey, families: Sequence[str], targets: Iterable[int]):
    """Build an ``images`` callback for :func:`kernel_within` from product families.

    ``families`` draws from ``"bracket"`` ({x, e_j}), ``"left"`` (x e_j) and
    ``"right"`` (e_j x); ``targets`` are the basis indices ``j``.
    """
    L, G = A.lambda_spec, A.g_spec
    ldeg, gdeg = key
    plan = []
    for j in targets:
        b = A.basis[j]
        tkey = (L.compose(ldeg, b.ldeg), G.compose(gdeg, b.gdeg))
        for fam in families:
            plan.append((fam, j, tkey))

    def images(x: Vector) -> list[tuple[ComponentKey, Vector]]:
        out = []
        for fam, j, tkey in plan:
            ej = {j: A.one}
            if fam == "bracket":
                w = A.bracket(x, ej)
            elif fam == "left":
                w = A.mul(x, ej)
            else:
                w = A.mul(ej, x)
            if tkey not in A.components and w:
                # Only possible when the tables break the grading.
                raise ValueError("product leaves the graded components")
            out.append((tkey, w))
        return out

    return images


def annihilator_solve(
    A: PoissonColorAlgebra,
    families: Sequence[str] = ("bracket", "left", "right"),
    targets: Iterable[int] | None = None,
    within: GradedSubspace | None = None,
) -> GradedSubspace:
    """{x : {x, e_j} = x e_j = e_j x = 0 for the chosen families and targets}.

    Solved component by component over ``within`` (default: the whole algebra);
    the constraints respect the bigrading, so the answer is graded.
    """
    targets = list(range(A.dim)) if targets is None else list(targets)
    space = GradedSubspace.whole(A) if within is None else within
    out = GradedSubspace.zero(A)
    for key in space.components:
        part = space.restrict([key])
        out = out + kernel_within(part, image_layout(A, key, families, targets))
    return out
