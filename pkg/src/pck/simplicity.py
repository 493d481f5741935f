"""Graded simplicity, decided two ways.

The criterion route applies to algebras of maximal length that are
Sigma-multiplicative: such an algebra is gr-simple exactly when its center is
zero, ``P_1`` is spanned by the products and brackets of opposite-degree
components, and the Lambda-support forms a single connection class.

The oracle route never uses that characterization.  It generates ideals
directly: every nonzero graded ideal either meets a one-dimensional component
(and then contains its basis vector) or lies in ``P_1``.  So closing each
such basis vector and computing the largest ideal inside ``P_1`` settles the
question whenever all non-identity components are one-dimensional.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field

from .algebra import ComponentKey, PoissonColorAlgebra, Vector
from .connections import compute_supports, connection_classes
from .decomposition import (
    DecompositionReport,
    compute_center,
    decompose,
    degree_one_space,
    p1_condition_check,
    restrict_to,
)
from .errors import PreconditionError
from .graded_linalg import (
    GradedSubspace,
    annihilator_solve,
    contains,
    image_layout,
    kernel_within,
    span_of,
)

__all__ = [
    "MultiplicativityResult",
    "CriterionResult",
    "OracleResult",
    "SimplicityVerdict",
    "SimpleDecomposition",
    "maximal_length_check",
    "sigma_multiplicativity_check",
    "ideal_closure",
    "largest_ideal_in_p1",
    "gr_simple_criterion",
    "gr_simple_oracle",
    "simplicity_verdict",
    "simple_decomposition",
    "SAMPLES_PER_COMPONENT",
]

SAMPLES_PER_COMPONENT = 50
_ALL = ("bracket", "left", "right")


def maximal_length_check(A: PoissonColorAlgebra) -> bool:
    L, G = A.lambda_spec, A.g_spec
    comps = A.components
    for (lam, g), idx in comps.items():
        if lam == L.identity:
            continue
        opposite = comps.get((L.inverse(lam), G.inverse(g)), ())
        if len(idx) != 1 or len(opposite) != 1:
            return False
    return True


@dataclass
class MultiplicativityResult:
    holds: bool
    counterexamples: list[tuple[ComponentKey, ComponentKey]] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.holds


def _pair_nonzero(A: PoissonColorAlgebra, left: tuple[int, ...], right: tuple[int, ...]) -> bool:
    for i in left:
        for j in right:
            if (i, j) in A.product_table or (i, j) in A.bracket_table:
                return True
    return False


def sigma_multiplicativity_check(A: PoissonColorAlgebra) -> MultiplicativityResult:
    """Components of non-identity degrees whose Lambda-product is in the support must interact."""
    L = A.lambda_spec
    sigma = compute_supports(A).sigma_lambda
    keys = [k for k in A.components if k[0] != L.identity]
    bad = []
    for a, b in itertools.product(keys, repeat=2):
        if L.compose(a[0], b[0]) not in sigma:
            continue
        if not _pair_nonzero(A, A.components[a], A.components[b]):
            bad.append((a, b))
    return MultiplicativityResult(not bad, bad)


def _images(A: PoissonColorAlgebra, u: Vector) -> list[Vector]:
    out = []
    for j in range(A.dim):
        ej = A.basis_vector(j)
        for w in (A.bracket(u, ej), A.mul(u, ej), A.mul(ej, u)):
            if w:
                out.append(w)
    return out


def ideal_closure(A: PoissonColorAlgebra, generators) -> GradedSubspace:
    """Smallest graded ideal containing the (bihomogeneous) generators."""
    S = span_of(A, generators)
    fresh = S.vectors()
    rounds = 0
    while fresh:
        rounds += 1
        assert rounds <= A.dim + 1, "closure failed to stabilize"
        new: list[Vector] = []
        for u in fresh:
            for w in _images(A, u):
                if not contains(S, w):
                    S = S + span_of(A, [w])
                    new.append(w)
        fresh = new
    return S


def _refine(A: PoissonColorAlgebra, W: GradedSubspace, targets: list[int]) -> GradedSubspace:
    out = GradedSubspace.zero(A)
    for key in W.components:
        part = W.restrict([key])
        out = out + kernel_within(part, image_layout(A, key, _ALL, targets), modulo=W)
    return out


def largest_ideal_in_p1(A: PoissonColorAlgebra) -> GradedSubspace:
    """The largest graded ideal of the algebra contained in ``P_1``."""
    one = A.lambda_spec.identity
    outside = [b.index for b in A.basis if b.ldeg != one]
    inside = [b.index for b in A.basis if b.ldeg == one]
    # An ideal inside P_1 must kill every non-identity component outright.
    W = annihilator_solve(A, _ALL, outside, within=degree_one_space(A))
    rounds = 0
    while True:
        rounds += 1
        assert rounds <= A.dim + 1, "refinement failed to stabilize"
        nxt = _refine(A, W, inside)
        if nxt.dim == W.dim:
            return W
        W = nxt


@dataclass
class CriterionResult:
    applicable: bool
    result: bool | None
    maximal_length: bool
    multiplicative: bool
    nonempty_support: bool
    center_zero: bool
    p1_condition: bool
    class_count: int

    @property
    def reasons(self) -> dict[str, bool | int]:
        return {
            "maximal_length": self.maximal_length,
            "sigma_multiplicative": self.multiplicative,
            "nonempty_support": self.nonempty_support,
            "center_zero": self.center_zero,
            "p1_condition": self.p1_condition,
            "class_count": self.class_count,
        }


def gr_simple_criterion(A: PoissonColorAlgebra) -> CriterionResult:
    ml = maximal_length_check(A)
    sm = bool(sigma_multiplicativity_check(A))
    supports = compute_supports(A)
    nonempty = bool(supports.sigma_lambda)
    applicable = ml and sm and nonempty
    center_zero = compute_center(A).is_zero()
    # maximal length forces a symmetric support; otherwise classes are undefined
    classes = connection_classes(supports) if applicable else None
    p1 = p1_condition_check(A, classes) if classes is not None else False
    count = len(classes.classes) if classes is not None else 0
    result = (center_zero and p1 and count == 1) if applicable else None
    return CriterionResult(applicable, result, ml, sm, nonempty, center_zero, p1, count)


@dataclass
class OracleResult:
    simple: bool
    exact: bool
    reason: str
    proper_ideal: GradedSubspace | None = None

    def __iter__(self):
        return iter((self.simple, self.exact))


def _random_vector(A: PoissonColorAlgebra, idx: tuple[int, ...], rng: random.Random) -> Vector:
    while True:
        v = {i: A.scalar(rng.randint(-3, 3)) for i in idx}
        v = {i: c for i, c in v.items() if c}
        if v:
            return v


def gr_simple_oracle(A: PoissonColorAlgebra, seed: int = 0) -> OracleResult:
    """Decide gr-simplicity by generating ideals.

    Exact under maximal length; otherwise multi-dimensional components are
    probed with seeded random vectors and the answer is marked inexact.
    """
    whole = GradedSubspace.whole(A)
    if not A.product_table and not A.bracket_table:
        return OracleResult(False, True, "all products and brackets vanish")
    exact = maximal_length_check(A)
    one = A.lambda_spec.identity
    rng = random.Random(seed)

    # Generators: basis vectors of one-dimensional components; random samples of larger
    # non-identity components when maximal length fails.
    gens: list[tuple[str, Vector]] = []
    for (lam, g), idx in A.components.items():
        if len(idx) == 1 and lam != one:
            gens.append((A.basis[idx[0]].name, A.basis_vector(idx[0])))
        elif lam != one:
            for _ in range(SAMPLES_PER_COMPONENT):
                v = _random_vector(A, idx, rng)
                gens.append((A.format_vector(v), v))
    for label, v in gens:
        closure = ideal_closure(A, [v])
        if closure != whole:
            return OracleResult(False, True, f"ideal generated by {label} is proper", closure)

    W = largest_ideal_in_p1(A)
    if W.is_zero():
        return OracleResult(True, exact, "every generated ideal is the whole algebra")
    if W != whole:
        return OracleResult(False, True, "a nonzero proper ideal lies inside P_1", W)

    # The whole algebra sits in degree one: probe P_1 itself.
    for (lam, g), idx in A.components.items():
        samples = [A.basis_vector(idx[0])] if len(idx) == 1 else [
            _random_vector(A, idx, rng) for _ in range(SAMPLES_PER_COMPONENT)
        ]
        for v in samples:
            closure = ideal_closure(A, [v])
            if closure != whole:
                return OracleResult(False, True, f"ideal generated by {A.format_vector(v)} is proper", closure)
    exact_here = all(len(idx) == 1 for idx in A.components.values())
    return OracleResult(True, exact_here, "every sampled ideal inside P_1 is the whole algebra")


@dataclass
class SimplicityVerdict:
    criterion: CriterionResult
    oracle: OracleResult | None

    @property
    def criterion_result(self) -> bool | None:
        return self.criterion.result

    @property
    def oracle_result(self) -> bool | None:
        return None if self.oracle is None else self.oracle.simple

    @property
    def oracle_exact(self) -> bool:
        return self.oracle is not None and self.oracle.exact

    @property
    def agreement(self) -> bool | None:
        if self.criterion.result is None or self.oracle is None or not self.oracle.exact:
            return None
        return self.criterion.result == self.oracle.simple


def simplicity_verdict(A: PoissonColorAlgebra, seed: int = 0, run_oracle: bool = True) -> SimplicityVerdict:
    return SimplicityVerdict(gr_simple_criterion(A), gr_simple_oracle(A, seed) if run_oracle else None)


@dataclass
class SimpleDecomposition:
    report: DecompositionReport
    restrictions: list[PoissonColorAlgebra]
    verdicts: list[SimplicityVerdict]

    @property
    def all_simple(self) -> bool:
        return all(v.oracle_result and v.criterion_result for v in self.verdicts)


def simple_decomposition(A: PoissonColorAlgebra, seed: int = 0) -> SimpleDecomposition:
    """Split into the class ideals and check each one is gr-simple by both routes."""
    problems = []
    if not maximal_length_check(A):
        problems.append("not of maximal length")
    if not sigma_multiplicativity_check(A):
        problems.append("not Sigma-multiplicative")
    if not compute_center(A).is_zero():
        problems.append("nonzero center")
    if problems:
        raise PreconditionError(f"{A.name}: " + ", ".join(problems))
    if not p1_condition_check(A):
        raise PreconditionError(f"{A.name}: P_1 is not spanned by opposite-degree products")
    report = decompose(A)
    restrictions, verdicts = [], []
    for n, ideal in enumerate(report.ideals):
        sub = restrict_to(A, ideal.total, name=f"{A.name}|I{n}")
        restrictions.append(sub)
        verdicts.append(simplicity_verdict(sub, seed))
    return SimpleDecomposition(report, restrictions, verdicts)
