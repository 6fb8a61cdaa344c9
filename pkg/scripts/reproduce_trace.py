#!/usr/bin/env python3
"""Print the full refinement trace for a formula (default: the double-negated
excluded middle) as a sequence of captioned markdown tables.

Usage: python scripts/reproduce_trace.py ["FORMULA" [ipl|s4]]
"""

import sys

from rnmx.formula import parse, subformula_closure
from rnmx.nmatrix import M_IPL, M_S4_PRIME
from rnmx.refinement import refine_fixpoint, render_trace_markdown
from rnmx.tabulation import generate_table


def main() -> None:
    text = sys.argv[1] if len(sys.argv) > 1 else "~~(p \\/ ~p)"
    logic = sys.argv[2] if len(sys.argv) > 2 else "ipl"
    matrix = M_IPL if logic == "ipl" else M_S4_PRIME
    f = parse(text, "IPL" if logic == "ipl" else "S4")
    table = generate_table(subformula_closure([f]), matrix)
    _, trace = refine_fixpoint(table)
    print(render_trace_markdown(table, trace))


if __name__ == "__main__":
    main()
