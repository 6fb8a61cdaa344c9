#!/usr/bin/env python3
"""Regenerate the stable truth tables of the ten intuitionistic Hilbert
axioms and print them as markdown.  The two conjunction-projection axioms
share one closure, as do the two disjunction-injection axioms."""

from rnmx.formula import parse, subformula_closure
from rnmx.nmatrix import M_IPL
from rnmx.refinement import refine
from rnmx.tabulation import generate_table, table_to_markdown

GROUPS = [
    ("Ax1", ["p -> (q -> p)"]),
    ("Ax2", ["(p -> (q -> r)) -> ((p -> q) -> (p -> r))"]),
    ("Ax3", ["p -> (q -> (p /\\ q))"]),
    ("Ax4, Ax5", ["(p /\\ q) -> p", "(p /\\ q) -> q"]),
    ("Ax6, Ax7", ["p -> (p \\/ q)", "q -> (p \\/ q)"]),
    ("Ax8", ["(p -> r) -> ((q -> r) -> ((p \\/ q) -> r))"]),
    ("Ax9", ["(q -> p) -> ((q -> ~p) -> ~q)"]),
    ("Ax10", ["p -> (~p -> q)"]),
]


def main() -> None:
    for name, texts in GROUPS:
        roots = [parse(t, "IPL") for t in texts]
        table = generate_table(subformula_closure(roots), M_IPL)
        final, cycles = refine(table)
        print(f"### {name}  ({len(table.rows)} rows -> {len(final.rows)}, {cycles} cycle(s))")
        print()
        print(table_to_markdown(final))


if __name__ == "__main__":
    main()
