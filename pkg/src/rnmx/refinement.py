"""Refinement of a truth table to its stable rows.

A row is supported when every cell holding the middle value (U, or 1 on the
S4 side) has a witness row assigning the bottom value in that column while
preserving all of the row's top values.  Each cycle computes supports
against the table as it stood at cycle start and removes every unsupported
row at once; the fixpoint is reached when a cycle removes nothing.  The
final cycle record is the validators table: every mark in it is either a
skip or a non-empty witness list.
"""

from __future__ import annotations

from dataclasses import dataclass

from .tabulation import Row, Table


@dataclass(frozen=True)
class CycleRecord:
    """Per surviving row id, one mark per column: None when the cell does not
    hold the middle value, otherwise the tuple of witness row ids (empty
    means unsupported, and the row appears in ``removed``)."""

    marks: dict
    removed: tuple


@dataclass(frozen=True)
class ValidatorsTrace:
    cycles: tuple


def is_compatible(v: Row, w: Row, top) -> bool:
    """True iff every column where v holds ``top`` also holds it in w."""
    return all(b == top for a, b in zip(v.values, w.values) if a == top)


def find_validators(table: Table, row: Row, column: int) -> list:
    """Ids of all rows assigning bottom in ``column`` and compatible with
    ``row``.  The row's own value there must be the middle one."""
    m = table.matrix
    if row.values[column] != m.values[1]:
        raise ValueError(
            f"column {column} of row {row.id} holds {row.values[column]!r}, "
            f"not {m.values[1]!r}"
        )
    bottom, top = m.bottom, m.top
    return [
        w.id
        for w in table.rows
        if w.values[column] == bottom and is_compatible(row, w, top)
    ]


def _top_masks(rows, top):
    masks = []
    for row in rows:
        mask = 0
        for i, v in enumerate(row.values):
            if v == top:
                mask |= 1 << i
        masks.append(mask)
    return masks


def _run_cycle(table: Table, want_marks: bool):
    bottom, mid, top = table.matrix.values
    rows = table.rows
    masks = _top_masks(rows, top)
    ncols = len(table.closure)
    bottom_at = [[] for _ in range(ncols)]
    for pos, row in enumerate(rows):
        for c, v in enumerate(row.values):
            if v == bottom:
                bottom_at[c].append(pos)

    marks = {}
    removed = []
    for pos, row in enumerate(rows):
        mask = masks[pos]
        row_marks = []
        supported = True
        for c, v in enumerate(row.values):
            if v != mid:
                row_marks.append(None)
                continue
            if want_marks:
                witnesses = tuple(
                    rows[q].id for q in bottom_at[c] if mask & ~masks[q] == 0
                )
                row_marks.append(witnesses)
                if not witnesses:
                    supported = False
            else:
                if not any(mask & ~masks[q] == 0 for q in bottom_at[c]):
                    supported = False
                    break
        if want_marks:
            marks[row.id] = tuple(row_marks)
        if not supported:
            removed.append(row.id)

    removed_set = set(removed)
    survivors = tuple(r for r in rows if r.id not in removed_set)
    new_table = Table(closure=table.closure, matrix=table.matrix, rows=survivors)
    return new_table, CycleRecord(marks=marks, removed=tuple(removed))


def refine_cycle(table: Table) -> tuple:
    """One batch cycle: supports are computed against ``table`` unchanged,
    then every unsupported row is dropped."""
    return _run_cycle(table, want_marks=True)


def refine_fixpoint(table: Table) -> tuple:
    """Iterate cycles to stability.  The trace always ends with the cycle
    that removed nothing."""
    cycles = []
    current = table
    while True:
        current, record = refine_cycle(current)
        cycles.append(record)
        if not record.removed:
            return current, ValidatorsTrace(cycles=tuple(cycles))


def refine(table: Table) -> tuple:
    """Fast path: (fixpoint table, cycle count) without witness lists."""
    count = 0
    current = table
    while True:
        current, record = _run_cycle(current, want_marks=False)
        count += 1
        if not record.removed:
            return current, count


# --- serialization ----------------------------------------------------------

SKIP_MARK = "×"
EMPTY_MARK = "∅"


def _mark_cell(mark) -> str:
    if mark is None:
        return SKIP_MARK
    if not mark:
        return EMPTY_MARK
    return ", ".join(str(i) for i in mark)


def cycle_to_markdown(stage: Table, record: CycleRecord, style: str = "unicode") -> str:
    """The marks of one cycle, in the layout of the value tables: x for
    not-applicable cells, witness id lists, and the empty-set sign for
    unsupported cells."""
    from .formula import pretty

    header = ["Row (ID)"] + [pretty(f, style) for f in stage.closure.formulas]
    lines = ["| " + " | ".join(header) + " |"]
    lines.append("|" + " --- |" * len(header))
    for row in stage.rows:
        cells = [f"({row.id})"] + [_mark_cell(m) for m in record.marks[row.id]]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def trace_to_json(trace: ValidatorsTrace) -> dict:
    cycles = []
    for record in trace.cycles:
        rows = {
            str(row_id): ["x" if m is None else list(m) for m in marks]
            for row_id, marks in record.marks.items()
        }
        cycles.append({"rows": rows, "removed": list(record.removed)})
    return {"cycles": cycles}


_ORDINALS = (
    "First", "Second", "Third", "Fourth", "Fifth",
    "Sixth", "Seventh", "Eighth", "Ninth", "Tenth",
)


def _cycle_caption(i: int) -> str:
    if i <= len(_ORDINALS):
        return f"{_ORDINALS[i - 1]} cycle."
    return f"Cycle {i}."


def render_trace_markdown(initial: Table, trace: ValidatorsTrace, style: str = "unicode") -> str:
    """Initial table, then per cycle the marks table and the table that
    survives it.  The last value table is captioned "Final table." and the
    marks of the stable cycle "Validators."."""
    from .tabulation import table_to_markdown

    records = trace.cycles
    last_removing = max(
        (i for i, r in enumerate(records) if r.removed), default=None
    )
    parts = [("Initial table.", table_to_markdown(initial, style))]
    stage = initial
    for i, record in enumerate(records):
        caption = "Validators." if not record.removed else _cycle_caption(i + 1)
        parts.append((caption, cycle_to_markdown(stage, record, style)))
        if record.removed:
            removed = set(record.removed)
            stage = Table(
                closure=stage.closure,
                matrix=stage.matrix,
                rows=tuple(r for r in stage.rows if r.id not in removed),
            )
            after = "Final table." if i == last_removing else "Intermediate table."
            parts.append((after, table_to_markdown(stage, style)))
        elif last_removing is None:
            # nothing was ever removed: show the (unchanged) final table
            # before the validators so initial/final are both present
            parts.insert(-1, ("Final table.", table_to_markdown(stage, style)))
    return "\n".join(f"{caption}\n\n{body}" for caption, body in parts)
