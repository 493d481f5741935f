"""Supports of the two gradings and connection classes of the Lambda-support.

Two support degrees are connected when a chain of support elements, starting
at the first, keeps every partial product inside the support and ends at the
second degree or its inverse.  Reachability is found by breadth-first search,
classes by union-find.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

from .algebra import PoissonColorAlgebra
from .errors import PreconditionError
from .grading import GroupElement, GroupSpec, element_key

__all__ = [
    "SupportData",
    "WitnessChain",
    "ConnectionClasses",
    "UnionFind",
    "AsymmetricSupportError",
    "compute_supports",
    "check_symmetric_support",
    "is_connected",
    "reachable",
    "connection_classes",
]


class AsymmetricSupportError(PreconditionError):
    """The Lambda-support is not closed under inverses."""


@dataclass(frozen=True)
class SupportData:
    lambda_spec: GroupSpec
    g_spec: GroupSpec
    sigma_lambda: frozenset[GroupElement]
    sigma_g: frozenset[GroupElement]
    lambda_g: dict[GroupElement, frozenset[GroupElement]]

    def sorted_lambda(self) -> list[GroupElement]:
        return sorted(self.sigma_lambda, key=element_key)


def compute_supports(A: PoissonColorAlgebra) -> SupportData:
    one_l, zero_g = A.lambda_spec.identity, A.g_spec.identity
    sig_l, sig_g = set(), set()
    lam_g: dict[GroupElement, set] = {}
    for b in A.basis:
        if b.ldeg != one_l:
            sig_l.add(b.ldeg)
            lam_g.setdefault(b.gdeg, set()).add(b.ldeg)
        if b.gdeg != zero_g:
            sig_g.add(b.gdeg)
    return SupportData(
        A.lambda_spec,
        A.g_spec,
        frozenset(sig_l),
        frozenset(sig_g),
        {g: frozenset(v) for g, v in sorted(lam_g.items())},
    )


def check_symmetric_support(S: SupportData) -> bool:
    inv = S.lambda_spec.inverse
    return all(inv(lam) in S.sigma_lambda for lam in S.sigma_lambda)


@dataclass(frozen=True)
class WitnessChain:
    elements: tuple[GroupElement, ...]

    def partial_products(self, spec: GroupSpec) -> list[GroupElement]:
        out, acc = [], spec.identity
        for lam in self.elements:
            acc = spec.compose(acc, lam)
            out.append(acc)
        return out

    def is_valid(self, S: SupportData, source: GroupElement, target: GroupElement) -> bool:
        spec = S.lambda_spec
        if not self.elements or self.elements[0] != source:
            return False
        if not all(lam in S.sigma_lambda for lam in self.elements):
            return False
        prods = self.partial_products(spec)
        if not all(p in S.sigma_lambda for p in prods):
            return False
        return prods[-1] in (target, spec.inverse(target))

    def format(self, spec: GroupSpec) -> str:
        return " -> ".join(spec.format_mult(p) for p in self.partial_products(spec))


def _bfs(S: SupportData, source: GroupElement) -> dict[GroupElement, GroupElement | None]:
    # parent pointers over partial products; edge sigma -> sigma*tau for tau in the support
    spec = S.lambda_spec
    order = S.sorted_lambda()
    parent: dict[GroupElement, GroupElement | None] = {source: None}
    queue = deque([source])
    while queue:
        node = queue.popleft()
        for tau in order:
            nxt = spec.compose(node, tau)
            if nxt in S.sigma_lambda and nxt not in parent:
                parent[nxt] = node
                queue.append(nxt)
    return parent


def reachable(S: SupportData, source: GroupElement) -> set[GroupElement]:
    """Every partial product reachable from ``source`` along valid chains."""
    return set(_bfs(S, source))


def is_connected(S: SupportData, source: GroupElement, target: GroupElement) -> WitnessChain | None:
    """A shortest connection from ``source`` to ``target``, or None."""
    for lam in (source, target):
        if lam not in S.sigma_lambda:
            raise ValueError(f"{S.lambda_spec.format_mult(lam)} is not in the Lambda-support")
    spec = S.lambda_spec
    parent = _bfs(S, source)
    ends = [t for t in (target, spec.inverse(target)) if t in parent]
    if not ends:
        return None

    def depth(node):
        d = 0
        while parent[node] is not None:
            node, d = parent[node], d + 1
        return d

    end = min(ends, key=lambda t: (depth(t), element_key(t)))
    path = [end]
    while parent[path[-1]] is not None:
        path.append(parent[path[-1]])
    path.reverse()
    # chain elements: first the source, then the successive quotients
    elems = [path[0]] + [spec.compose(b, spec.inverse(a)) for a, b in zip(path, path[1:])]
    return WitnessChain(tuple(elems))


class UnionFind:
    def __init__(self, items):
        self.parent = {x: x for x in items}

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, a, b) -> None:
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            # smaller key wins, keeps representatives deterministic
            if element_key(rb) < element_key(ra):
                ra, rb = rb, ra
            self.parent[rb] = ra


@dataclass
class ConnectionClasses:
    classes: list[frozenset[GroupElement]]
    witnesses: dict[tuple[GroupElement, GroupElement], WitnessChain] = field(default_factory=dict)

    def class_of(self, lam: GroupElement) -> frozenset[GroupElement]:
        for c in self.classes:
            if lam in c:
                return c
        raise KeyError(lam)

    def sorted_classes(self) -> list[list[GroupElement]]:
        return [sorted(c, key=element_key) for c in self.classes]


def connection_classes(S: SupportData, witness_pairs=()) -> ConnectionClasses:
    """Partition the Lambda-support into connection classes.

    ``witness_pairs`` lists (source, target) pairs whose witness chains should
    be recorded; only those are stored.
    """
    if not check_symmetric_support(S):
        raise AsymmetricSupportError("connection classes need a symmetric Lambda-support")
    spec = S.lambda_spec
    uf = UnionFind(S.sorted_lambda())
    for lam in S.sorted_lambda():
        for mu in reachable(S, lam):
            uf.union(lam, mu)
            uf.union(lam, spec.inverse(mu))
    groups: dict[GroupElement, set] = {}
    for lam in S.sorted_lambda():
        groups.setdefault(uf.find(lam), set()).add(lam)
    classes = [frozenset(groups[r]) for r in sorted(groups, key=element_key)]
    witnesses = {}
    for src, dst in witness_pairs:
        chain = is_connected(S, src, dst)
        if chain is not None:
            witnesses[(src, dst)] = chain
    return ConnectionClasses(classes, witnesses)
