"""Single-entry mutations of a structure-constant table.

Used to measure how sharp the axiom checker is: every mutant changes exactly
one coefficient of the product or the bracket.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from ..algebra import PoissonColorAlgebra

__all__ = ["Mutation", "mutations", "apply_mutation"]

KINDS = ("negate", "double", "delete")


@dataclass(frozen=True)
class Mutation:
    table: str  # "product" or "bracket"
    left: int
    right: int
    target: int
    kind: str

    def describe(self, A: PoissonColorAlgebra) -> str:
        op = "*" if self.table == "product" else ","
        l, r, t = (A.basis[i].name for i in (self.left, self.right, self.target))
        return f"{self.kind} coefficient of {t} in ({l}{op}{r}) [{self.table}]"


def mutations(A: PoissonColorAlgebra, kinds=KINDS) -> Iterator[Mutation]:
    for table in ("product", "bracket"):
        entries = A.product_table if table == "product" else A.bracket_table
        for (i, j) in sorted(entries):
            for k in sorted(entries[(i, j)]):
                for kind in kinds:
                    yield Mutation(table, i, j, k, kind)


def apply_mutation(A: PoissonColorAlgebra, m: Mutation) -> PoissonColorAlgebra:
    tables = {
        "product": {key: dict(row) for key, row in A.product_table.items()},
        "bracket": {key: dict(row) for key, row in A.bracket_table.items()},
    }
    row = tables[m.table][(m.left, m.right)]
    if m.kind == "negate":
        row[m.target] = -row[m.target]
    elif m.kind == "double":
        row[m.target] = row[m.target] * 2
    elif m.kind == "delete":
        del row[m.target]
    else:
        raise ValueError(f"unknown mutation kind {m.kind!r}")
    return PoissonColorAlgebra(
        f"{A.name}~{m.kind}",
        A.order,
        A.g_spec,
        A.lambda_spec,
        A.bichar,
        [(b.name, b.gdeg, b.ldeg) for b in A.basis],
        tables["product"],
        tables["bracket"],
        check_commutative=A.check_commutative,
    )
