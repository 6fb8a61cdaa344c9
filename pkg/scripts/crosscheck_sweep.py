#!/usr/bin/env python3
"""Random sweep of the three-way cross-check with row-count statistics.

Usage: python scripts/crosscheck_sweep.py [N_FORMULAS] [MAX_CONNECTIVES] [SEED]
"""

import random
import sys
import time

from rnmx.decision import cross_check, decide_ipl
from rnmx.formula import And, Atom, Box, Imp, Neg, Or, pretty


def random_formula(rng, n, atom_names):
    if n == 0:
        return Atom(rng.choice(atom_names))
    klass = rng.choice((Neg, And, Or, Imp))
    if klass is Neg:
        return Neg(random_formula(rng, n - 1, atom_names))
    split = rng.randrange(n)
    return klass(
        random_formula(rng, split, atom_names),
        random_formula(rng, n - 1 - split, atom_names),
    )


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 500
    max_conn = int(sys.argv[2]) if len(sys.argv) > 2 else 8
    seed = int(sys.argv[3]) if len(sys.argv) > 3 else 0
    rng = random.Random(seed)

    valid = disagreements = 0
    max_initial = (0, None)
    start = time.time()
    for _ in range(count):
        f = random_formula(rng, rng.randint(1, max_conn), ("p", "q", "r"))
        report = cross_check(f)
        if not report.agree:
            disagreements += 1
            print(f"DISAGREEMENT on {pretty(f)}: "
                  f"ipl={report.ipl_valid} s4={report.s4_valid} oracle={report.oracle_valid}")
        if report.ipl_valid:
            valid += 1
        verdict = decide_ipl([], f)
        if verdict.initial_rows > max_initial[0]:
            max_initial = (verdict.initial_rows, f)
    elapsed = time.time() - start

    print(f"{count} formulas, <= {max_conn} connectives, seed {seed}")
    print(f"valid: {valid}  disagreements: {disagreements}  time: {elapsed:.1f}s")
    rows, f = max_initial
    print(f"largest initial table: {rows} rows for {pretty(f)}")
    sys.exit(1 if disagreements else 0)


if __name__ == "__main__":
    main()
