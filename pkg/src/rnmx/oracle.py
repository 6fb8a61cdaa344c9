"""Independent intuitionistic prover: contraction-free sequent search in the
style of Dyckhoff's G4ip / LJT.

This module deliberately shares nothing with the table engine.  Formulas
are compiled into private tuples; negation is compiled away as implication
into a private absurdity constant that never appears in public types.
Every rule strictly decreases a multiset measure, so the search terminates
without depth limits.
"""

from __future__ import annotations

from dataclasses import dataclass

from .formula import And, Atom, Box, Formula, Imp, Neg, Or

_BOT = ("bot",)


@dataclass(frozen=True)
class Sequent:
    antecedent: tuple
    succedent: Formula


def _compile(f: Formula):
    match f:
        case Atom(name):
            return ("v", name)
        case Neg(arg):
            return ("imp", _compile(arg), _BOT)
        case And(left, right):
            return ("and", _compile(left), _compile(right))
        case Or(left, right):
            return ("or", _compile(left), _compile(right))
        case Imp(left, right):
            return ("imp", _compile(left), _compile(right))
        case Box():
            raise ValueError("the oracle decides box-free formulas only")
    raise TypeError(f"not a formula: {f!r}")


def g4ip_prove(premises, conclusion: Formula) -> bool:
    """True iff the sequent premises => conclusion is derivable."""
    gamma = frozenset(_compile(p) for p in premises)
    return _prove(gamma, _compile(conclusion))


def _prove(gamma: frozenset, goal) -> bool:
    # saturate with the invertible, non-branching left rules
    gamma = set(gamma)
    changed = True
    while changed:
        changed = False
        if _BOT in gamma:
            return True
        for f in list(gamma):
            kind = f[0]
            if kind == "and":
                gamma.discard(f)
                gamma.add(f[1])
                gamma.add(f[2])
                changed = True
            elif kind == "imp":
                a, b = f[1], f[2]
                if a == _BOT:
                    # vacuous hypothesis
                    gamma.discard(f)
                    changed = True
                elif a[0] == "v" and a in gamma:
                    gamma.discard(f)
                    gamma.add(b)
                    changed = True
                elif a[0] == "and":
                    gamma.discard(f)
                    gamma.add(("imp", a[1], ("imp", a[2], b)))
                    changed = True
                elif a[0] == "or":
                    gamma.discard(f)
                    gamma.add(("imp", a[1], b))
                    gamma.add(("imp", a[2], b))
                    changed = True

    if goal in gamma:
        return True

    # invertible right rules
    if goal[0] == "imp":
        return _prove(frozenset(gamma) | {goal[1]}, goal[2])
    if goal[0] == "and":
        g = frozenset(gamma)
        return _prove(g, goal[1]) and _prove(g, goal[2])

    # branching left rule for disjunction (invertible, so try it next)
    for f in gamma:
        if f[0] == "or":
            rest = frozenset(gamma) - {f}
            return _prove(rest | {f[1]}, goal) and _prove(rest | {f[2]}, goal)

    # non-invertible choices: a disjunction goal, or unfolding an
    # implication whose own hypothesis is an implication
    if goal[0] == "or" and (_prove(frozenset(gamma), goal[1]) or _prove(frozenset(gamma), goal[2])):
        return True
    for f in gamma:
        if f[0] == "imp" and f[1][0] == "imp":
            (_, (_, c, d), b) = f
            rest = frozenset(gamma) - {f}
            if _prove(rest | {("imp", d, b)}, f[1]) and _prove(rest | {b}, goal):
                return True
    return False
