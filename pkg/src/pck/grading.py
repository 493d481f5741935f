"""Finitely generated abelian groups and exponent-matrix bi-characters.

One representation serves both gradings: ``G`` is written additively and
``Lambda`` multiplicatively, but both are Z^r x Z_m1 x ... x Z_ms with elements
stored as canonical integer tuples.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from functools import cached_property

from .scalars import Cyc, root_of_unity

__all__ = [
    "GroupSpec",
    "BiCharacter",
    "ValidationReport",
    "group_compose",
    "group_inverse",
    "bichar_eval",
    "bichar_validate",
    "element_key",
    "FREE_WINDOW",
]

GroupElement = tuple[int, ...]

FREE_WINDOW = range(-2, 3)
_TRIPLE_LIMIT = 30_000


@dataclass(frozen=True)
class GroupSpec:
    free_rank: int = 0
    torsion: tuple[int, ...] = ()
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        if self.free_rank < 0:
            raise ValueError("free_rank must be nonnegative")
        object.__setattr__(self, "torsion", tuple(int(m) for m in self.torsion))
        if any(m < 2 for m in self.torsion):
            raise ValueError(f"torsion orders must be >= 2, got {list(self.torsion)}")
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != self.ngens:
                raise ValueError(f"expected {self.ngens} generator names, got {len(names)}")
            if len(set(names)) != len(names):
                raise ValueError(f"generator names must be distinct: {list(names)}")
            for n in names:
                if not re.fullmatch(r"[A-Za-z_][A-Za-z0-9_']*", n):
                    raise ValueError(f"bad generator name {n!r}")
            object.__setattr__(self, "names", names)

    @property
    def ngens(self) -> int:
        return self.free_rank + len(self.torsion)

    @property
    def moduli(self) -> tuple[int, ...]:
        """Per-coordinate modulus, 0 meaning free."""
        return (0,) * self.free_rank + self.torsion

    @cached_property
    def gen_names(self) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        if self.ngens == 1:
            return ("z",)
        return tuple(f"z{i + 1}" for i in range(self.ngens))

    @property
    def identity(self) -> GroupElement:
        return (0,) * self.ngens

    @property
    def is_finite(self) -> bool:
        return self.free_rank == 0

    def canonical(self, coords) -> GroupElement:
        coords = tuple(int(c) for c in coords)
        if len(coords) != self.ngens:
            raise ValueError(f"element {list(coords)} has {len(coords)} coordinates, expected {self.ngens}")
        return tuple(c % m if m else c for c, m in zip(coords, self.moduli))

    def compose(self, a: GroupElement, b: GroupElement) -> GroupElement:
        if len(a) != self.ngens or len(b) != self.ngens:
            raise ValueError("coordinate length mismatch")
        return tuple((x + y) % m if m else x + y for x, y, m in zip(a, b, self.moduli))

    def inverse(self, a: GroupElement) -> GroupElement:
        return self.canonical(-c for c in a)

    def window(self, radius: int = 2):
        """Every torsion element combined with free coordinates in [-radius, radius]."""
        ranges = [range(-radius, radius + 1)] * self.free_rank + [range(m) for m in self.torsion]
        return [tuple(t) for t in itertools.product(*ranges)]

    def format_mult(self, a: GroupElement) -> str:
        parts = []
        for name, c in zip(self.gen_names, a):
            if c == 0:
                continue
            parts.append(name if c == 1 else f"{name}^{c}")
        return "*".join(parts) if parts else "1"

    def parse_mult(self, text: str) -> GroupElement:
        """Inverse of :meth:`format_mult`; also accepts a JSON-style ``[c1, ...]``."""
        s = text.strip()
        if s.startswith("["):
            body = s.strip("[]").strip()
            return self.canonical(int(x) for x in body.split(",")) if body else self.canonical(())
        coords = [0] * self.ngens
        if s == "1":
            return self.canonical(coords)
        index = {n: i for i, n in enumerate(self.gen_names)}
        for factor in s.split("*"):
            m = re.fullmatch(r"\s*([A-Za-z_][A-Za-z0-9_']*)\s*(?:\^\s*(-?\d+))?\s*", factor)
            if not m or m[1] not in index:
                raise ValueError(f"cannot parse group element {text!r}")
            coords[index[m[1]]] += int(m[2]) if m[2] else 1
        return self.canonical(coords)

    def to_json(self) -> dict:
        out: dict = {"free_rank": self.free_rank, "torsion": list(self.torsion)}
        if self.names is not None:
            out["names"] = list(self.names)
        return out


def group_compose(spec: GroupSpec, a: GroupElement, b: GroupElement) -> GroupElement:
    return spec.compose(a, b)


def group_inverse(spec: GroupSpec, a: GroupElement) -> GroupElement:
    return spec.inverse(a)


def element_key(a: GroupElement):
    """Sort key: shorter elements first, positive exponents before negative."""
    return (sum(abs(c) for c in a), tuple((-abs(c), c < 0) for c in a))


@dataclass(frozen=True)
class BiCharacter:
    """epsilon(g, h) = zeta_N ** (g^T B h)."""

    order: int
    matrix: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("cyclotomic order must be positive")
        object.__setattr__(self, "matrix", tuple(tuple(int(x) for x in row) for row in self.matrix))
        n = len(self.matrix)
        if any(len(row) != n for row in self.matrix):
            raise ValueError("bi-character matrix must be square")

    @classmethod
    def trivial(cls, ngens: int, order: int = 1) -> BiCharacter:
        return cls(order, tuple((0,) * ngens for _ in range(ngens)))

    @property
    def size(self) -> int:
        return len(self.matrix)

    def exponent(self, g: GroupElement, h: GroupElement) -> int:
        total = 0
        for gi, row in zip(g, self.matrix):
            if gi:
                total += gi * sum(b * hj for b, hj in zip(row, h))
        return total % self.order

    def value(self, g: GroupElement, h: GroupElement, field_order: int | None = None) -> Cyc:
        """epsilon(g, h) as an element of Q(zeta_field_order) (default: own order)."""
        n = field_order or self.order
        if n % self.order:
            raise ValueError(f"Q(zeta_{n}) does not contain zeta_{self.order}")
        return root_of_unity(n, self.exponent(g, h) * (n // self.order))

    __call__ = value

    def to_json(self) -> dict:
        return {"cyclotomic_order": self.order, "matrix": [list(r) for r in self.matrix]}


def bichar_eval(b: BiCharacter, g: GroupElement, h: GroupElement) -> Cyc:
    return b.value(g, h)


@dataclass
class ValidationReport:
    failures: list[str] = field(default_factory=list)

    @property
    def valid(self) -> bool:
        return not self.failures

    def __bool__(self) -> bool:
        return self.valid


def bichar_validate(spec: GroupSpec, b: BiCharacter, radius: int = 2) -> ValidationReport:
    report = ValidationReport()
    n, N = spec.ngens, b.order
    if b.size != n:
        report.failures.append(f"matrix is {b.size}x{b.size} but the group has {n} generators")
        return report
    B = b.matrix
    for i in range(n):
        for j in range(i, n):
            if (B[i][j] + B[j][i]) % N:
                report.failures.append(
                    f"(B+B^T)[{i}][{j}] = {B[i][j] + B[j][i]} is not 0 mod {N}"
                )
    for i, m in enumerate(spec.moduli):
        if not m:
            continue
        for j in range(n):
            if (m * B[i][j]) % N:
                report.failures.append(f"{m}*B[{i}][{j}] = {m * B[i][j]} is not 0 mod {N}")
            if j != i and (m * B[j][i]) % N:
                report.failures.append(f"{m}*B[{j}][{i}] = {m * B[j][i]} is not 0 mod {N}")
    if report.failures:
        return report

    # Spot checks of the three axioms on a finite window; these only guard
    # against implementation slips since the exponent form is bilinear.
    # Values repeat with the exponent, so products of values are memoized.
    elems = spec.window(radius)
    roots = [root_of_unity(N, k) for k in range(N)]
    index = {r: k for k, r in enumerate(roots)}
    times = {(a, c): index[roots[a] * roots[c]] for a in range(N) for c in range(N)}

    def eps(g, h) -> int:
        # position of epsilon(g, h) in ``roots``
        return index[roots[b.exponent(g, h)]]

    zero = index[Cyc.one(N)]
    for g in elems:
        for h in elems:
            if times[eps(g, h), eps(h, g)] != zero:
                report.failures.append(f"eps({list(g)},{list(h)}) eps({list(h)},{list(g)}) != 1")
                return report
    # Full triples when the window is small; otherwise f runs over the
    # generators and the identity, which already pins down a character.
    probes = elems
    if len(elems) ** 3 > _TRIPLE_LIMIT:
        probes = [spec.identity] + [spec.canonical([int(i == k) for i in range(n)]) for k in range(n)]
    for g, h in itertools.product(elems, repeat=2):
        gh = spec.compose(g, h)
        for f in probes:
            if eps(gh, f) != times[eps(g, f), eps(h, f)]:
                report.failures.append(f"eps(g+h, f) != eps(g,f) eps(h,f) at {list(g)},{list(h)},{list(f)}")
                return report
            if eps(f, gh) != times[eps(f, g), eps(f, h)]:
                report.failures.append(f"eps(f, g+h) != eps(f,g) eps(f,h) at {list(g)},{list(h)},{list(f)}")
                return report
    return report
