"""Validity and entailment verdicts for both logics, plus the three-way
cross-check of the intuitionistic decision against the boxed S4 decision
and the sequent-calculus oracle."""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce

from .formula import Formula, Imp, SubformulaClosure, pretty, signature_of, subformula_closure
from .nmatrix import M_IPL, M_S4_PRIME, T
from .oracle import g4ip_prove
from .refinement import refine
from .tabulation import Row, closure_bounds, generate_table
from .translation import box_translate

DESIGNATED = "designated"
NECESSITY = "necessity"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    logic: str
    countermodel: Row | None
    initial_rows: int
    final_rows: int
    cycles: int
    bounds: tuple
    closure: SubformulaClosure


def _decide(closure, matrix, premise_idx, concl_idx, accepted, logic) -> Verdict:
    table = generate_table(closure, matrix)
    final, cycles = refine(table)
    countermodel = None
    for row in final.rows:
        if not all(row.values[i] in accepted for i in premise_idx):
            continue
        if row.values[concl_idx] not in accepted:
            countermodel = row
            break
    return Verdict(
        valid=countermodel is None,
        logic=logic,
        countermodel=countermodel,
        initial_rows=len(table.rows),
        final_rows=len(final.rows),
        cycles=cycles,
        bounds=closure_bounds(closure, matrix),
        closure=closure,
    )


def decide_ipl(premises, conclusion: Formula) -> Verdict:
    """Valid iff every stable row making all premises T also makes the
    conclusion T.  The countermodel, if any, is the lowest-id offending row."""
    for f in (*premises, conclusion):
        if signature_of(f) != "IPL":
            raise ValueError("intuitionistic decision requires box-free formulas")
    closure = subformula_closure([*premises, conclusion])
    premise_idx = [closure.index(p) for p in premises]
    return _decide(
        closure, M_IPL, premise_idx, closure.index(conclusion), {T}, "ipl"
    )


def decide_s4(premises, conclusion: Formula, mode: str = DESIGNATED) -> Verdict:
    """S4 decision over the reduced matrix.  Necessity mode demands value 2
    in every stable row, designated mode any of {1, 2}.  A non-empty premise
    list is folded into a nested implication first (necessity mode does not
    take premises)."""
    if mode not in (DESIGNATED, NECESSITY):
        raise ValueError(f"unknown mode {mode!r}")
    premises = list(premises)
    if premises:
        if mode == NECESSITY:
            raise ValueError("necessity mode takes no premises")
        return decide_s4([], fold_premises(premises, conclusion), mode)
    closure = subformula_closure([conclusion])
    accepted = M_S4_PRIME.designated if mode == DESIGNATED else {M_S4_PRIME.top}
    return _decide(closure, M_S4_PRIME, [], closure.index(conclusion), accepted, "s4")


def decide_s4_direct(premises, conclusion: Formula) -> Verdict:
    """Designated-premises row check over the joint closure, without the
    implication fold; agrees with decide_s4 and exists for cross-testing."""
    closure = subformula_closure([*premises, conclusion])
    premise_idx = [closure.index(p) for p in premises]
    return _decide(
        closure,
        M_S4_PRIME,
        premise_idx,
        closure.index(conclusion),
        M_S4_PRIME.designated,
        "s4",
    )


def fold_premises(premises, conclusion: Formula) -> Formula:
    """beta_1 -> (beta_2 -> (... -> (beta_n -> conclusion)))."""
    return reduce(lambda acc, b: Imp(b, acc), reversed(list(premises)), conclusion)


def entail_via_deduction(premises, conclusion: Formula, logic: str) -> Verdict:
    """Entailment decided through the nested-implication reduction."""
    folded = fold_premises(premises, conclusion)
    if logic == "ipl":
        return decide_ipl([], folded)
    if logic == "s4":
        return decide_s4([], folded, DESIGNATED)
    raise ValueError(f"unknown logic {logic!r}")


@dataclass(frozen=True)
class CrossCheckReport:
    formula: Formula
    ipl_valid: bool
    s4_valid: bool
    oracle_valid: bool

    @property
    def agree(self) -> bool:
        return self.ipl_valid == self.s4_valid == self.oracle_valid


def cross_check(f: Formula) -> CrossCheckReport:
    """Decide ``f`` three independent ways: intuitionistic tables, S4 tables
    of the box translation, and proof search."""
    return CrossCheckReport(
        formula=f,
        ipl_valid=decide_ipl([], f).valid,
        s4_valid=decide_s4([], box_translate(f), DESIGNATED).valid,
        oracle_valid=g4ip_prove([], f),
    )


def verdict_to_json(v: Verdict, style: str = "unicode") -> dict:
    if v.countermodel is None:
        countermodel = None
    else:
        countermodel = {
            "id": v.countermodel.id,
            "assignment": {
                pretty(f, style): str(value)
                for f, value in zip(v.closure.formulas, v.countermodel.values)
            },
        }
    lb, ub = v.bounds
    return {
        "valid": v.valid,
        "logic": v.logic,
        "countermodel": countermodel,
        "initial_rows": v.initial_rows,
        "final_rows": v.final_rows,
        "cycles": v.cycles,
        "lb": lb,
        "ub": ub,
    }
