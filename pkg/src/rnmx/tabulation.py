"""Initial truth-table generation over a subformula closure, and the
row-count bounds.

Rows are produced by tree expansion: atom columns branch over the allowed
atom values, every later column branches over its table cell.  Columns are
visited in closure order (increasing complexity), so the expansion emits
rows in lexicographic value order directly.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass

from .formula import (
    And,
    Atom,
    Box,
    Formula,
    Imp,
    Neg,
    Or,
    SubformulaClosure,
    atoms,
    pretty,
    subformula_closure,
)
from .nmatrix import AND, BOX, IMP, M_IPL, NEG, OR, Nmatrix, branching_factor

_TAG = {Neg: NEG, Box: BOX, And: AND, Or: OR, Imp: IMP}


@dataclass(frozen=True)
class Row:
    """One partial valuation: ``values[i]`` is the value of closure column i.
    The id is assigned at generation time and survives refinement."""

    id: int
    values: tuple


@dataclass(frozen=True)
class Table:
    closure: SubformulaClosure
    matrix: Nmatrix
    rows: tuple


def _column_plans(closure: SubformulaClosure, matrix: Nmatrix):
    """For each column: None for an atom, else (connective, arg indices)."""
    index = {f: i for i, f in enumerate(closure.formulas)}
    plans = []
    for f in closure.formulas:
        match f:
            case Atom():
                plans.append(None)
            case Neg(arg) | Box(arg):
                plans.append((_TAG[type(f)], (index[arg],)))
            case _:
                plans.append((_TAG[type(f)], (index[f.left], index[f.right])))
    for plan in plans:
        if plan is not None and plan[0] not in matrix.ops:
            raise ValueError(f"{matrix.name} does not interpret {plan[0]!r}")
    return plans


def generate_table(closure: SubformulaClosure, matrix: Nmatrix) -> Table:
    """All locally consistent rows over ``closure``, sorted lexicographically
    with ids 1..n."""
    plans = _column_plans(closure, matrix)
    rank = matrix.rank
    atom_choices = tuple(sorted(matrix.atom_values, key=rank))
    # branch in increasing value order so the expansion is already sorted
    cells = {
        conn: {args: tuple(sorted(cell, key=rank)) for args, cell in table.items()}
        for conn, table in matrix.ops.items()
    }
    rows = [()]
    for plan in plans:
        extended = []
        if plan is None:
            for prefix in rows:
                for v in atom_choices:
                    extended.append(prefix + (v,))
        else:
            conn, arg_idx = plan
            table = cells[conn]
            if len(arg_idx) == 1:
                i = arg_idx[0]
                for prefix in rows:
                    for v in table[(prefix[i],)]:
                        extended.append(prefix + (v,))
            else:
                i, j = arg_idx
                for prefix in rows:
                    for v in table[(prefix[i], prefix[j])]:
                        extended.append(prefix + (v,))
        rows = extended
    rows.sort(key=lambda values: tuple(rank(v) for v in values))
    return Table(
        closure=closure,
        matrix=matrix,
        rows=tuple(Row(id=i, values=values) for i, values in enumerate(rows, start=1)),
    )


def closure_bounds(closure: SubformulaClosure, matrix: Nmatrix) -> tuple:
    """(lower, upper) bounds on the initial row count of a table over
    ``closure``: every atom assignment extends to at least one row, and every
    non-atom column multiplies the count by at most the branching factor."""
    n_atoms = closure.atom_count
    base = len(matrix.atom_values)
    kappa = branching_factor(matrix)
    lower = base**n_atoms
    upper = kappa ** (len(closure) - n_atoms) * base**n_atoms
    return lower, upper


def lower_bound(f: Formula, matrix: Nmatrix) -> int:
    return len(matrix.atom_values) ** len(atoms(f))


def upper_bound(f: Formula, matrix: Nmatrix) -> int:
    return closure_bounds(subformula_closure([f]), matrix)[1]


# --- serialization ----------------------------------------------------------


def _caption_cells(table: Table, style: str):
    return [pretty(f, style) for f in table.closure.formulas]


def table_to_markdown(table: Table, style: str = "unicode") -> str:
    header = ["Row (ID)"] + _caption_cells(table, style)
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + " --- |" * len(header))
    for row in table.rows:
        cells = [f"({row.id})"] + [f"**{v}**" for v in row.values]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def table_to_csv(table: Table, style: str = "unicode") -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["id"] + _caption_cells(table, style))
    for row in table.rows:
        writer.writerow([row.id] + [str(v) for v in row.values])
    return buf.getvalue()


def table_to_json(table: Table, style: str = "unicode") -> dict:
    return {
        "matrix": table.matrix.name,
        "closure": _caption_cells(table, style),
        "rows": [
            {"id": row.id, "values": [str(v) for v in row.values]}
            for row in table.rows
        ],
    }
