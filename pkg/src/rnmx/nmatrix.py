"""Value domains, designated sets, and the built-in multioperation tables.

The three built-in matrices are stored as literal constants so that a
transcription error shows up as a single-cell diff in the golden tests,
never as a silently wrong computation.
"""

from __future__ import annotations

from dataclasses import dataclass

NEG = "neg"
BOX = "box"
AND = "and"
OR = "or"
IMP = "imp"

ARITY = {NEG: 1, BOX: 1, AND: 2, OR: 2, IMP: 2}

F, U, T = "F", "U", "T"

_s = frozenset


@dataclass(frozen=True)
class Nmatrix:
    """A finite matrix whose truth functions return non-empty sets of values.

    ``values`` is ordered from bottom to top; ``atom_values`` restricts what a
    propositional variable may take (the full domain unless narrowed).
    """

    name: str
    values: tuple
    designated: frozenset
    ops: dict
    atom_values: tuple = None

    def __post_init__(self):
        if self.atom_values is None:
            object.__setattr__(self, "atom_values", self.values)
        if not self.designated or not self.designated < set(self.values):
            raise ValueError("designated set must be a non-empty proper subset")
        for conn, table in self.ops.items():
            for args, cell in table.items():
                if len(args) != ARITY[conn]:
                    raise ValueError(f"{conn}: arity mismatch for {args}")
                if not cell or not cell <= set(self.values):
                    raise ValueError(f"{conn}{args}: cell must be a non-empty subset")

    @property
    def bottom(self):
        return self.values[0]

    @property
    def top(self):
        return self.values[-1]

    def rank(self, value) -> int:
        return self.values.index(value)


def lookup(m: Nmatrix, connective: str, args: tuple) -> frozenset:
    """The table cell for ``connective`` applied to ``args``."""
    if connective not in m.ops:
        raise KeyError(f"{m.name} has no connective {connective!r}")
    if len(args) != ARITY[connective]:
        raise ValueError(
            f"{connective} takes {ARITY[connective]} argument(s), got {len(args)}"
        )
    for a in args:
        if a not in m.values:
            raise ValueError(f"{a!r} is not a value of {m.name}")
    return m.ops[connective][tuple(args)]


def branching_factor(m: Nmatrix) -> int:
    """Largest cell cardinality over all tables of ``m``."""
    return max(len(cell) for table in m.ops.values() for cell in table.values())


M_S4 = Nmatrix(
    name="M_S4",
    values=(0, 1, 2),
    designated=_s({1, 2}),
    ops={
        NEG: {(0,): _s({1, 2}), (1,): _s({0}), (2,): _s({0})},
        BOX: {(0,): _s({0}), (1,): _s({0}), (2,): _s({2})},
        IMP: {
            (0, 0): _s({1, 2}), (0, 1): _s({1, 2}), (0, 2): _s({1, 2}),
            (1, 0): _s({0}),    (1, 1): _s({1, 2}), (1, 2): _s({1, 2}),
            (2, 0): _s({0}),    (2, 1): _s({1}),    (2, 2): _s({1, 2}),
        },
        OR: {
            (0, 0): _s({0}),    (0, 1): _s({1, 2}), (0, 2): _s({1, 2}),
            (1, 0): _s({1, 2}), (1, 1): _s({1, 2}), (1, 2): _s({1, 2}),
            (2, 0): _s({1, 2}), (2, 1): _s({1, 2}), (2, 2): _s({1, 2}),
        },
        AND: {
            (0, 0): _s({0}), (0, 1): _s({0}),    (0, 2): _s({0}),
            (1, 0): _s({0}), (1, 1): _s({1, 2}), (1, 2): _s({1, 2}),
            (2, 0): _s({0}), (2, 1): _s({1, 2}), (2, 2): _s({1, 2}),
        },
    },
)

# The reduced S4 matrix: negation and box as in M_S4, binary tables pruned
# to the cells supported by level-valuation refinement.
M_S4_PRIME = Nmatrix(
    name="M'_S4",
    values=(0, 1, 2),
    designated=_s({1, 2}),
    ops={
        NEG: {(0,): _s({1, 2}), (1,): _s({0}), (2,): _s({0})},
        BOX: {(0,): _s({0}), (1,): _s({0}), (2,): _s({2})},
        IMP: {
            (0, 0): _s({1, 2}), (0, 1): _s({1, 2}), (0, 2): _s({2}),
            (1, 0): _s({0}),    (1, 1): _s({1, 2}), (1, 2): _s({2}),
            (2, 0): _s({0}),    (2, 1): _s({1}),    (2, 2): _s({2}),
        },
        OR: {
            (0, 0): _s({0}),    (0, 1): _s({1, 2}), (0, 2): _s({2}),
            (1, 0): _s({1, 2}), (1, 1): _s({1, 2}), (1, 2): _s({2}),
            (2, 0): _s({2}),    (2, 1): _s({2}),    (2, 2): _s({2}),
        },
        AND: {
            (0, 0): _s({0}), (0, 1): _s({0}), (0, 2): _s({0}),
            (1, 0): _s({0}), (1, 1): _s({1}), (1, 2): _s({1}),
            (2, 0): _s({0}), (2, 1): _s({1}), (2, 2): _s({2}),
        },
    },
)

# Intuitionistic matrix over {F, U, T}; atoms never take U.
M_IPL = Nmatrix(
    name="M_IPL",
    values=(F, U, T),
    designated=_s({T}),
    atom_values=(F, T),
    ops={
        NEG: {(F,): _s({U, T}), (U,): _s({U, T}), (T,): _s({F})},
        IMP: {
            (F, F): _s({U, T}), (F, U): _s({U, T}), (F, T): _s({T}),
            (U, F): _s({U, T}), (U, U): _s({U, T}), (U, T): _s({T}),
            (T, F): _s({F}),    (T, U): _s({F}),    (T, T): _s({T}),
        },
        OR: {
            (F, F): _s({F}), (F, U): _s({F}), (F, T): _s({T}),
            (U, F): _s({F}), (U, U): _s({F}), (U, T): _s({T}),
            (T, F): _s({T}), (T, U): _s({T}), (T, T): _s({T}),
        },
        AND: {
            (F, F): _s({F}), (F, U): _s({F}), (F, T): _s({F}),
            (U, F): _s({F}), (U, U): _s({F}), (U, T): _s({F}),
            (T, F): _s({F}), (T, U): _s({F}), (T, T): _s({T}),
        },
    },
)

BUILTIN = {m.name: m for m in (M_S4, M_S4_PRIME, M_IPL)}

_OP_SYMBOL = {NEG: "¬", BOX: "□", AND: "∧", OR: "∨", IMP: "→"}


def _cell_str(cell, m: Nmatrix) -> str:
    return "{" + ", ".join(str(v) for v in sorted(cell, key=m.rank)) + "}"


def to_markdown(m: Nmatrix) -> str:
    """Debug dump: one markdown table per connective (unary: value column
    then cell; binary: rows by first argument, columns by second)."""
    blocks = []
    for conn in (NEG, BOX, IMP, OR, AND):
        if conn not in m.ops:
            continue
        sym = _OP_SYMBOL[conn]
        table = m.ops[conn]
        lines = []
        if ARITY[conn] == 1:
            lines.append(f"|   | {sym} |")
            lines.append("| --- | --- |")
            for v in m.values:
                lines.append(f"| {v} | {_cell_str(table[(v,)], m)} |")
        else:
            lines.append(f"| {sym} | " + " | ".join(str(v) for v in m.values) + " |")
            lines.append("| --- |" + " --- |" * len(m.values))
            for a in m.values:
                cells = " | ".join(_cell_str(table[(a, b)], m) for b in m.values)
                lines.append(f"| {a} | {cells} |")
        blocks.append("\n".join(lines))
    return "\n\n".join(blocks) + "\n"
