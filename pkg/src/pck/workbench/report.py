"""Analysis reports and their JSON / text rendering.

A report is a plain dict of sections.  JSON output uses sorted keys and a
fixed indent, so identical inputs give byte-identical text.  Lambda-degrees
are written multiplicatively (``z^-1``, ``a*b^2``), G-degrees as integer
arrays, vectors through ``PoissonColorAlgebra.format_vector``.

Sections: ``algebra``, ``bicharacter``, ``axioms``, ``support``,
``symmetric_support``, ``classes``, ``witnesses``, ``center``,
``decomposition``, ``simplicity``, ``simple_decomposition``, ``notes``.
``classes`` and ``decomposition`` are omitted when the support is not
symmetric.
"""

from __future__ import annotations

import json

from ..algebra import AxiomReport, PoissonColorAlgebra, validate_all
from ..connections import (
    ConnectionClasses,
    SupportData,
    check_symmetric_support,
    compute_supports,
    connection_classes,
    is_connected,
)
from ..decomposition import compute_center, decompose, is_graded_ideal, is_subalgebra
from ..errors import PreconditionError
from ..graded_linalg import GradedSubspace
from ..grading import GroupElement, bichar_validate, element_key
from ..simplicity import simple_decomposition, simplicity_verdict

__all__ = [
    "REPORT_VERSION",
    "analyze",
    "emit_report",
    "axioms_section",
    "support_section",
    "classes_section",
    "witness_entry",
    "center_section",
    "decomposition_section",
    "simplicity_section",
]

REPORT_VERSION = 1


def _lam(A: PoissonColorAlgebra, x: GroupElement) -> str:
    return A.lambda_spec.format_mult(x)


def _subspace(S: GradedSubspace) -> dict:
    A = S.algebra
    return {"dim": S.dim, "basis": [A.format_vector(v) for v in S.vectors()]}


def header(A: PoissonColorAlgebra) -> dict:
    return {
        "report_version": REPORT_VERSION,
        "algebra": {
            "name": A.name,
            "dim": A.dim,
            "scalar_order": A.order,
            "check_commutative": A.check_commutative,
        },
    }


def axioms_section(A: PoissonColorAlgebra, threads: int = 1) -> tuple[dict, AxiomReport]:
    bv = bichar_validate(A.g_spec, A.bichar)
    report = validate_all(A, threads=threads)
    results = {}
    for name, r in report.results.items():
        results[name] = {
            "status": r.status,
            "failures": r.failures,
            "counterexamples": [
                {
                    "basis": list(cx.basis),
                    "lhs": A.format_vector(cx.lhs),
                    "rhs": A.format_vector(cx.rhs),
                    **({"detail": cx.detail} if cx.detail else {}),
                }
                for cx in r.counterexamples
            ],
        }
    section = {
        "bicharacter": {"valid": bv.valid, "failures": list(bv.failures)},
        "axioms": {"valid": report.passed and bv.valid, "results": results},
    }
    return section, report


def support_section(A: PoissonColorAlgebra, S: SupportData | None = None) -> dict:
    S = S or compute_supports(A)
    return {
        "support": {
            "sigma_lambda": [_lam(A, x) for x in S.sorted_lambda()],
            "sigma_g": [list(g) for g in sorted(S.sigma_g, key=element_key)],
            "lambda_g": [
                {"g": list(g), "lambda": [_lam(A, x) for x in sorted(v, key=element_key)]}
                for g, v in sorted(S.lambda_g.items(), key=lambda kv: element_key(kv[0]))
            ],
        },
        "symmetric_support": check_symmetric_support(S),
    }


def witness_entry(A: PoissonColorAlgebra, S: SupportData, source, target) -> dict:
    chain = is_connected(S, source, target)
    entry = {"source": _lam(A, source), "target": _lam(A, target), "connected": chain is not None}
    if chain is not None:
        entry["chain"] = [_lam(A, x) for x in chain.elements]
        entry["partial_products"] = [_lam(A, p) for p in chain.partial_products(A.lambda_spec)]
    return entry


def classes_section(A: PoissonColorAlgebra, S: SupportData | None = None) -> tuple[dict, ConnectionClasses]:
    """Classes plus one witness chain from each class representative to every member."""
    S = S or compute_supports(A)
    cc = connection_classes(S)
    witnesses = []
    for members in cc.sorted_classes():
        rep = members[0]
        witnesses.extend(witness_entry(A, S, rep, mu) for mu in members)
    return {
        "classes": [[_lam(A, x) for x in c] for c in cc.sorted_classes()],
        "witnesses": witnesses,
    }, cc


def center_section(A: PoissonColorAlgebra) -> dict:
    return {"center": _subspace(compute_center(A))}


def decomposition_section(A: PoissonColorAlgebra) -> dict:
    rep = decompose(A)
    ideals = []
    for I in rep.ideals:
        ideals.append(
            {
                "class": [_lam(A, x) for x in sorted(I.members, key=element_key)],
                "one_part": _subspace(I.one_part),
                "vee_dim": I.vee_part.dim,
                "dim": I.total.dim,
                "basis": [A.format_vector(v) for v in I.total.vectors()],
                "is_subalgebra": is_subalgebra(A, I.total),
                "is_graded_ideal": is_graded_ideal(A, I.total),
            }
        )
    n = len(rep.ideals)
    return {
        "decomposition": {
            "u_complement": _subspace(rep.u_complement),
            "ideals": ideals,
            "pairwise_orthogonal": all(rep.orthogonality[a][b] for a in range(n) for b in range(n) if a != b),
            "covers": rep.covers,
            "is_direct": rep.is_direct,
            "dim_sum": rep.u_complement.dim + sum(I.total.dim for I in rep.ideals),
            "center_dim": rep.center_dim,
            "p1_condition": rep.p1_condition,
        }
    }


def simplicity_section(A: PoissonColorAlgebra, seed: int = 0) -> dict:
    v = simplicity_verdict(A, seed)
    section = {
        "simplicity": {
            "criterion": {"applicable": v.criterion.applicable, "result": v.criterion_result, **v.criterion.reasons},
            "oracle": {"simple": v.oracle.simple, "exact": v.oracle.exact, "reason": v.oracle.reason},
            "agreement": v.agreement,
        }
    }
    try:
        sd = simple_decomposition(A, seed)
    except PreconditionError as exc:
        section["simple_decomposition"] = {"available": False, "reason": str(exc)}
    else:
        section["simple_decomposition"] = {
            "available": True,
            "ideals": [
                {
                    "dim": sub.dim,
                    "criterion": sv.criterion_result,
                    "oracle": sv.oracle_result,
                    "oracle_exact": sv.oracle_exact,
                }
                for sub, sv in zip(sd.restrictions, sd.verdicts)
            ],
            "dim_sum": sum(sub.dim for sub in sd.restrictions),
            "all_simple": sd.all_simple,
        }
    return section


def _notes(report: dict) -> list[str]:
    notes = [
        "Sigma-multiplicativity is tested only on pairs of non-identity components "
        "whose Lambda-degree product lies in the support",
        "U complements the degree-one ideal parts inside every component of Lambda-degree 1",
        "the P_1 condition uses P_mu P_mu^-1 + {P_mu, P_mu^-1}, summed over the whole support",
    ]
    simp = report.get("simplicity")
    if simp is not None:
        crit = simp["criterion"]
        if crit["maximal_length"] and crit["sigma_multiplicative"] and not crit["nonempty_support"]:
            notes.append("criterion not applied: the Lambda-support is empty")
        if not simp["oracle"]["exact"]:
            notes.append("oracle verdict relies on seeded random sampling of multi-dimensional components")
    if report.get("symmetric_support") is False:
        notes.append("Lambda-support is not symmetric: classes and decomposition are undefined")
    return notes


def analyze(A: PoissonColorAlgebra, seed: int = 0, threads: int = 1) -> dict:
    """Full report.  Stops after the axiom section if any identity fails."""
    report = header(A)
    section, axioms = axioms_section(A, threads)
    report.update(section)
    if not report["axioms"]["valid"]:
        return report
    S = compute_supports(A)
    report.update(support_section(A, S))
    report.update(center_section(A))
    if report["symmetric_support"]:
        report.update(classes_section(A, S)[0])
        report.update(decomposition_section(A))
    report.update(simplicity_section(A, seed))
    report["notes"] = _notes(report)
    return report


# -- rendering ---------------------------------------------------------------------


def emit_report(report: dict, fmt: str = "json") -> str:
    if fmt == "json":
        return json.dumps(report, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
    if fmt == "text":
        return _text(report)
    raise ValueError(f"unknown format {fmt!r}")


def _yn(flag) -> str:
    return {True: "yes", False: "no", None: "n/a"}[flag]


def _text(r: dict) -> str:
    out: list[str] = []
    put = out.append
    if "algebra" in r:
        a = r["algebra"]
        put(f"algebra {a['name']}: dim {a['dim']}, scalars Q(zeta_{a['scalar_order']})")
    if "bicharacter" in r:
        b = r["bicharacter"]
        put(f"bi-character: {'valid' if b['valid'] else 'INVALID'}")
        out.extend(f"  {f}" for f in b["failures"])
    if "axioms" in r:
        put("axioms:")
        for name in sorted(r["axioms"]["results"]):
            res = r["axioms"]["results"][name]
            put(f"  {name:<22} {res['status']}")
            for cx in res["counterexamples"]:
                what = cx.get("detail") or f"{cx['lhs']} != {cx['rhs']}"
                put(f"    ({', '.join(cx['basis'])}): {what}")
    if "support" in r:
        s = r["support"]
        put("Lambda-support: {" + ", ".join(s["sigma_lambda"]) + "}")
        put(f"symmetric: {_yn(r['symmetric_support'])}")
    if "classes" in r:
        put(f"connection classes ({len(r['classes'])}):")
        for c in r["classes"]:
            put("  [" + ", ".join(c) + "]")
    if "witnesses" in r:
        put("witness chains:")
        for w in r["witnesses"]:
            put("  " + _witness_line(w))
    if "witness" in r:
        put("witness: " + _witness_line(r["witness"]))
    if "center" in r:
        c = r["center"]
        put(f"center: dim {c['dim']}" + (" spanned by " + ", ".join(c["basis"]) if c["basis"] else ""))
    if "decomposition" in r:
        d = r["decomposition"]
        put("decomposition:")
        put(f"  U: dim {d['u_complement']['dim']}")
        for n, I in enumerate(d["ideals"]):
            put(
                f"  I{n} [{', '.join(I['class'])}]: dim {I['dim']} "
                f"(degree-one part {I['one_part']['dim']}, V {I['vee_dim']})"
            )
        put(f"  covers: {_yn(d['covers'])}, direct: {_yn(d['is_direct'])}, orthogonal: {_yn(d['pairwise_orthogonal'])}")
        put(f"  P_1 condition: {_yn(d['p1_condition'])}")
    if "simplicity" in r:
        s = r["simplicity"]
        crit, orc = s["criterion"], s["oracle"]
        if crit["applicable"]:
            put(f"criterion: {'gr-simple' if crit['result'] else 'not gr-simple'}")
        else:
            put("criterion: not applicable")
        put(
            f"oracle: {'gr-simple' if orc['simple'] else 'not gr-simple'}"
            f" ({'exact' if orc['exact'] else 'sampled'}; {orc['reason']})"
        )
        put(f"agreement: {_yn(s['agreement'])}")
    if "simple_decomposition" in r:
        sd = r["simple_decomposition"]
        if sd["available"]:
            dims = " + ".join(str(i["dim"]) for i in sd["ideals"])
            put(f"simple decomposition: {len(sd['ideals'])} ideals, dims {dims} = {sd['dim_sum']}")
        else:
            put(f"simple decomposition unavailable: {sd['reason']}")
    if "corpus" in r:
        out.extend(r["corpus"])
    for note in r.get("notes", []):
        put(f"note: {note}")
    return "\n".join(out) + "\n"


def _witness_line(w: dict) -> str:
    if not w["connected"]:
        return f"{w['source']} ~ {w['target']}: not connected"
    return f"{w['source']} ~ {w['target']}: " + " → ".join(w["partial_products"])
