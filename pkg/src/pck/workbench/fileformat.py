"""JSON algebra files (``"pck_format": 1``).

Schema::

    {
      "pck_format": 1,
      "name": "sl2",
      "scalar_order": 1,                       # N: scalars live in Q(zeta_N)
      "group_g":      {"free_rank": 0, "torsion": []},
      "group_lambda": {"free_rank": 1, "torsion": [], "names": ["z"]},
      "bicharacter":  {"cyclotomic_order": 1, "matrix": []},
      "basis":   [{"name": "e", "gdeg": [], "ldeg": [1]}, ...],
      "product": [{"left": "e", "right": "f", "result": [{"basis": "h", "coeff": "1"}]}, ...],
      "bracket": [...same shape...],
      "flags":   {"check_commutative": false}
    }

``names`` is optional and only affects how Lambda-degrees are printed.
Coefficients are scalar literals such as ``"-1/2 + 3*z^2"`` (``z`` = zeta_N);
plain JSON integers are accepted too.
"""

from __future__ import annotations

import json
from typing import Any

from ..algebra import AxiomReport, PoissonColorAlgebra, validate_all
from ..errors import InputError
from ..grading import BiCharacter, GroupSpec, bichar_validate
from ..scalars import parse_scalar

__all__ = [
    "FORMAT_VERSION",
    "AlgebraFormatError",
    "AxiomFailure",
    "parse_algebra",
    "parse_algebra_unchecked",
    "algebra_to_dict",
    "dump_algebra",
    "load_algebra",
]

FORMAT_VERSION = 1


class AlgebraFormatError(InputError):
    def __init__(self, message: str, location: str = "$"):
        super().__init__(f"{location}: {message}")
        self.location = location


class AxiomFailure(InputError):
    """The file parsed but the algebra breaks a defining identity."""

    def __init__(self, message: str, report: AxiomReport | None = None, failures: list[str] | None = None):
        super().__init__(message)
        self.report = report
        self.failures = failures or []


def _need(obj: dict, key: str, kind, loc: str):
    if key not in obj:
        raise AlgebraFormatError(f"missing field {key!r}", loc)
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool) and kind is not bool:
        raise AlgebraFormatError(f"field {key!r} has the wrong type", f"{loc}.{key}")
    return val


def _group(obj: Any, loc: str) -> GroupSpec:
    if not isinstance(obj, dict):
        raise AlgebraFormatError("group spec must be an object", loc)
    try:
        return GroupSpec(
            int(_need(obj, "free_rank", int, loc)),
            tuple(_need(obj, "torsion", list, loc)),
            tuple(obj["names"]) if obj.get("names") is not None else None,
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, AlgebraFormatError):
            raise
        raise AlgebraFormatError(str(exc), loc) from None


def _element(spec: GroupSpec, value: Any, loc: str):
    if not isinstance(value, list) or not all(isinstance(c, int) and not isinstance(c, bool) for c in value):
        raise AlgebraFormatError("group element must be an integer array", loc)
    if len(value) != spec.ngens:
        raise AlgebraFormatError(f"expected {spec.ngens} coordinates, got {len(value)}", loc)
    return spec.canonical(value)


def parse_algebra_unchecked(text: str | dict) -> PoissonColorAlgebra:
    """Parse and build the algebra without checking the defining identities."""
    if isinstance(text, dict):
        data = text
    else:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise AlgebraFormatError(f"JSON syntax error: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None
    if not isinstance(data, dict):
        raise AlgebraFormatError("top level must be an object")
    version = data.get("pck_format")
    if version != FORMAT_VERSION:
        raise AlgebraFormatError(f"unsupported pck_format {version!r}", "$.pck_format")
    name = _need(data, "name", str, "$")
    order = _need(data, "scalar_order", int, "$")
    if order < 1:
        raise AlgebraFormatError("scalar_order must be positive", "$.scalar_order")
    g_spec = _group(_need(data, "group_g", dict, "$"), "$.group_g")
    l_spec = _group(_need(data, "group_lambda", dict, "$"), "$.group_lambda")

    bc = _need(data, "bicharacter", dict, "$")
    try:
        bichar = BiCharacter(
            int(_need(bc, "cyclotomic_order", int, "$.bicharacter")),
            tuple(tuple(r) for r in _need(bc, "matrix", list, "$.bicharacter")),
        )
    except (TypeError, ValueError) as exc:
        if isinstance(exc, AlgebraFormatError):
            raise
        raise AlgebraFormatError(str(exc), "$.bicharacter") from None
    if bichar.size != g_spec.ngens:
        raise AlgebraFormatError(
            f"matrix must be {g_spec.ngens}x{g_spec.ngens} to match group_g", "$.bicharacter.matrix"
        )
    if order % bichar.order:
        raise AlgebraFormatError(
            f"cyclotomic_order {bichar.order} must divide scalar_order {order}", "$.bicharacter"
        )

    basis = []
    seen: dict[str, int] = {}
    for n, item in enumerate(_need(data, "basis", list, "$")):
        loc = f"$.basis[{n}]"
        if not isinstance(item, dict):
            raise AlgebraFormatError("basis entry must be an object", loc)
        bname = _need(item, "name", str, loc)
        if bname in seen:
            raise AlgebraFormatError(f"duplicate basis name {bname!r}", f"{loc}.name")
        seen[bname] = n
        gdeg = _element(g_spec, _need(item, "gdeg", list, loc), f"{loc}.gdeg")
        ldeg = _element(l_spec, _need(item, "ldeg", list, loc), f"{loc}.ldeg")
        basis.append((bname, gdeg, ldeg))

    def table(key: str) -> dict:
        out: dict = {}
        for n, entry in enumerate(data.get(key, [])):
            loc = f"$.{key}[{n}]"
            if not isinstance(entry, dict):
                raise AlgebraFormatError("table entry must be an object", loc)
            i = _resolve(seen, _need(entry, "left", str, loc), f"{loc}.left")
            j = _resolve(seen, _need(entry, "right", str, loc), f"{loc}.right")
            if (i, j) in out:
                raise AlgebraFormatError(f"duplicate entry for ({entry['left']}, {entry['right']})", loc)
            row: dict = {}
            for m, term in enumerate(_need(entry, "result", list, loc)):
                tloc = f"{loc}.result[{m}]"
                if not isinstance(term, dict):
                    raise AlgebraFormatError("result term must be an object", tloc)
                k = _resolve(seen, _need(term, "basis", str, tloc), f"{tloc}.basis")
                if k in row:
                    raise AlgebraFormatError("basis element repeated within one result", tloc)
                raw = term.get("coeff")
                if isinstance(raw, bool) or not isinstance(raw, (str, int)):
                    raise AlgebraFormatError("coefficient must be a scalar literal", f"{tloc}.coeff")
                try:
                    row[k] = parse_scalar(raw, order)
                except ValueError as exc:
                    raise AlgebraFormatError(str(exc), f"{tloc}.coeff") from None
            out[(i, j)] = row
        return out

    flags = data.get("flags", {}) or {}
    if not isinstance(flags, dict):
        raise AlgebraFormatError("flags must be an object", "$.flags")
    return PoissonColorAlgebra(
        name,
        order,
        g_spec,
        l_spec,
        bichar,
        basis,
        table("product"),
        table("bracket"),
        check_commutative=bool(flags.get("check_commutative", False)),
    )


def _resolve(names: dict[str, int], name: str, loc: str) -> int:
    try:
        return names[name]
    except KeyError:
        raise AlgebraFormatError(f"unknown basis name {name!r}", loc) from None


def check_algebra(A: PoissonColorAlgebra, threads: int = 1) -> AxiomReport:
    """Raise :class:`AxiomFailure` unless the bi-character and every identity check out."""
    bv = bichar_validate(A.g_spec, A.bichar)
    if not bv.valid:
        raise AxiomFailure(f"{A.name}: invalid bi-character: {bv.failures[0]}", failures=bv.failures)
    report = validate_all(A, threads=threads)
    if not report.passed:
        axiom, cx = report.first_counterexample()
        what = cx.detail or (
            f"at ({', '.join(cx.basis)}): {A.format_vector(cx.lhs)} != {A.format_vector(cx.rhs)}"
        )
        raise AxiomFailure(f"{A.name}: {axiom} fails {what}", report=report)
    return report


def parse_algebra(text: str | dict, threads: int = 1) -> PoissonColorAlgebra:
    """Parse a file and require every defining identity to hold."""
    A = parse_algebra_unchecked(text)
    check_algebra(A, threads)
    return A


def load_algebra(path, threads: int = 1, check: bool = True) -> PoissonColorAlgebra:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    return parse_algebra(text, threads) if check else parse_algebra_unchecked(text)


def _table_json(A: PoissonColorAlgebra, table) -> list[dict]:
    out = []
    for (i, j) in sorted(table):
        row = table[(i, j)]
        out.append(
            {
                "left": A.basis[i].name,
                "right": A.basis[j].name,
                "result": [{"basis": A.basis[k].name, "coeff": str(row[k])} for k in sorted(row)],
            }
        )
    return out


def algebra_to_dict(A: PoissonColorAlgebra) -> dict:
    return {
        "pck_format": FORMAT_VERSION,
        "name": A.name,
        "scalar_order": A.order,
        "group_g": A.g_spec.to_json(),
        "group_lambda": A.lambda_spec.to_json(),
        "bicharacter": A.bichar.to_json(),
        "basis": [{"name": b.name, "gdeg": list(b.gdeg), "ldeg": list(b.ldeg)} for b in A.basis],
        "product": _table_json(A, A.product_table),
        "bracket": _table_json(A, A.bracket_table),
        "flags": {"check_commutative": A.check_commutative},
    }


def dump_algebra(A: PoissonColorAlgebra) -> str:
    return json.dumps(algebra_to_dict(A), indent=2, sort_keys=True, ensure_ascii=False) + "\n"
