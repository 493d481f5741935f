"""Ideals attached to connection classes, and the resulting decomposition.

For a class ``C`` of the Lambda-support, the ideal ``I_C`` is the sum of

* its degree-one part: the span of all products and brackets between
  ``P_mu`` and ``P_mu^-1`` for ``mu`` in ``C`` (it lies in degree (1, 0)), and
* ``V_C``: every component whose Lambda-degree lies in ``C``.

The algebra is then ``U + sum of I_C`` where ``U`` complements the degree-one
parts inside ``P_1``.  Every structural claim is re-verified computationally.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .algebra import PoissonColorAlgebra, Vector
from .connections import (
    AsymmetricSupportError,
    ConnectionClasses,
    check_symmetric_support,
    compute_supports,
    connection_classes,
)
from .graded_linalg import (
    GradedSubspace,
    annihilator_solve,
    complement_within,
    contains,
    span_of,
    subspace_intersection,
)
from .grading import GroupElement

__all__ = [
    "IdealDescriptor",
    "DecompositionReport",
    "ideal_one_part",
    "build_ideal",
    "is_subalgebra",
    "is_graded_ideal",
    "orthogonality_check",
    "compute_center",
    "degree_one_space",
    "p1_condition_check",
    "decompose",
    "restrict_to",
]


@dataclass
class IdealDescriptor:
    class_rep: GroupElement
    members: frozenset[GroupElement]
    one_part: GradedSubspace
    vee_part: GradedSubspace
    total: GradedSubspace


@dataclass
class DecompositionReport:
    classes: ConnectionClasses
    u_complement: GradedSubspace
    ideals: list[IdealDescriptor]
    orthogonality: list[list[bool | None]]
    covers: bool
    is_direct: bool
    center_dim: int
    p1_condition: bool
    notes: list[str] = field(default_factory=list)


def ideal_one_part(A: PoissonColorAlgebra, cls) -> GradedSubspace:
    """Span of P_mu P_mu^-1 + {P_mu, P_mu^-1} over mu in ``cls``."""
    spec = A.lambda_spec
    cls = frozenset(cls)
    if any(spec.inverse(mu) not in cls for mu in cls):
        raise AsymmetricSupportError("class is not closed under inverses")
    by_deg: dict[GroupElement, list[int]] = {}
    for b in A.basis:
        by_deg.setdefault(b.ldeg, []).append(b.index)
    vectors: list[Vector] = []
    for mu in sorted(cls):
        for i in by_deg.get(mu, ()):
            for j in by_deg.get(spec.inverse(mu), ()):
                ei, ej = A.basis_vector(i), A.basis_vector(j)
                for w in (A.mul(ei, ej), A.bracket(ei, ej)):
                    if w:
                        vectors.append(w)
    return span_of(A, vectors)


def build_ideal(A: PoissonColorAlgebra, cls) -> IdealDescriptor:
    from .grading import element_key

    cls = frozenset(cls)
    one = ideal_one_part(A, cls)
    vee = GradedSubspace.whole(A, [k for k in A.components if k[0] in cls])
    rep = min(cls, key=element_key)
    return IdealDescriptor(rep, cls, one, vee, one + vee)


def _closed(S: GradedSubspace, pairs) -> bool:
    A = S.algebra
    for u, v in pairs:
        if not contains(S, A.mul(u, v)) or not contains(S, A.bracket(u, v)):
            return False
    return True


def is_subalgebra(A: PoissonColorAlgebra, S: GradedSubspace) -> bool:
    vecs = S.vectors()
    return _closed(S, itertools.product(vecs, repeat=2))


def is_graded_ideal(A: PoissonColorAlgebra, S: GradedSubspace) -> bool:
    # S is graded by construction; check closure against the whole algebra.
    vecs = S.vectors()
    for u in vecs:
        for j in range(A.dim):
            ej = A.basis_vector(j)
            for w in (A.bracket(u, ej), A.mul(u, ej), A.mul(ej, u)):
                if not contains(S, w):
                    return False
    return True


def orthogonality_check(A: PoissonColorAlgebra, I: IdealDescriptor, J: IdealDescriptor) -> bool:
    """All products and brackets between the two ideals vanish (both orders)."""
    if I.members == J.members:
        raise ValueError("orthogonality is only defined for distinct classes")
    for u in I.total.vectors():
        for v in J.total.vectors():
            if A.mul(u, v) or A.mul(v, u) or A.bracket(u, v) or A.bracket(v, u):
                return False
    return True


def compute_center(A: PoissonColorAlgebra) -> GradedSubspace:
    return annihilator_solve(A, ("bracket", "left", "right"))


def degree_one_space(A: PoissonColorAlgebra) -> GradedSubspace:
    one = A.lambda_spec.identity
    return GradedSubspace.whole(A, [k for k in A.components if k[0] == one])


def _sum(A: PoissonColorAlgebra, spaces) -> GradedSubspace:
    total = GradedSubspace.zero(A)
    for s in spaces:
        total = total + s
    return total


def p1_condition_check(A: PoissonColorAlgebra, classes: ConnectionClasses | None = None) -> bool:
    """Is P_1 the sum of the degree-one parts over all classes?"""
    if classes is None:
        classes = connection_classes(compute_supports(A))
    ones = _sum(A, (ideal_one_part(A, c) for c in classes.classes))
    return ones == degree_one_space(A)


def decompose(A: PoissonColorAlgebra) -> DecompositionReport:
    supports = compute_supports(A)
    if not check_symmetric_support(supports):
        raise AsymmetricSupportError(f"{A.name}: the Lambda-support is not symmetric")
    classes = connection_classes(supports)
    ideals = [build_ideal(A, c) for c in classes.classes]
    ones = _sum(A, (I.one_part for I in ideals))

    # Complement of the degree-one parts inside every degree-one component.
    u = GradedSubspace.zero(A)
    for key in degree_one_space(A).components:
        u = u + complement_within(ones, key)

    whole = GradedSubspace.whole(A)
    covers = (u + _sum(A, (I.total for I in ideals))) == whole

    n = len(ideals)
    ortho: list[list[bool | None]] = [[None] * n for _ in range(n)]
    for a, b in itertools.combinations(range(n), 2):
        ortho[a][b] = ortho[b][a] = orthogonality_check(A, ideals[a], ideals[b])

    dims_add_up = u.dim + sum(I.total.dim for I in ideals) == A.dim
    pairwise_zero = all(
        subspace_intersection(ideals[a].total, ideals[b].total).is_zero()
        for a, b in itertools.combinations(range(n), 2)
    )
    center = compute_center(A)
    p1 = ones == degree_one_space(A)
    return DecompositionReport(
        classes=classes,
        u_complement=u,
        ideals=ideals,
        orthogonality=ortho,
        covers=covers,
        is_direct=covers and dims_add_up and pairwise_zero,
        center_dim=center.dim,
        p1_condition=p1,
    )


def restrict_to(A: PoissonColorAlgebra, S: GradedSubspace, name: str | None = None) -> PoissonColorAlgebra:
    """The algebra structure induced on a subalgebra ``S``, in the basis S.vectors()."""
    vecs = S.vectors()
    basis = []
    for v in vecs:
        if len(v) == 1 and next(iter(v.values())) == 1:
            label = A.basis[next(iter(v))].name
        else:
            label = f"[{A.format_vector(v)}]"
        key = A.homogeneous_key(v)
        basis.append((label, key[1], key[0]))

    def table(op):
        out = {}
        for a, u in enumerate(vecs):
            for b, v in enumerate(vecs):
                w = op(u, v)
                if w:
                    coords = S.coordinates(w)  # raises if S is not closed
                    out[(a, b)] = {k: c for k, c in enumerate(coords) if c}
        return out

    return PoissonColorAlgebra(
        name or f"{A.name}|sub",
        A.order,
        A.g_spec,
        A.lambda_spec,
        A.bichar,
        basis,
        table(A.mul),
        table(A.bracket),
        check_commutative=A.check_commutative,
    )
