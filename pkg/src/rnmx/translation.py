"""Box translation of intuitionistic formulas into S4, the semi-translated
form with the outermost box stripped, and the derivation of the
intuitionistic multioperations from the S4 tables via the pair encoding
F = (0,0), U = (1,0), T = (2,2)."""

from __future__ import annotations

from dataclasses import dataclass

from .formula import Atom, Box, Formula, Neg, signature_of
from .nmatrix import AND, BOX, F, IMP, M_S4, M_S4_PRIME, NEG, OR, T, U

PAIR_OF = {F: (0, 0), U: (1, 0), T: (2, 2)}
VALUE_OF_PAIR = {pair: letter for letter, pair in PAIR_OF.items()}

# box is deterministic on {0,1,2}, so a pair's second slot is a function of
# its first
_BOX_COLLAPSE = {v: next(iter(M_S4.ops[BOX][(v,)])) for v in M_S4.values}


def _require_ipl(f: Formula):
    if signature_of(f) != "IPL":
        raise ValueError("translation input must be box-free")


def box_translate(f: Formula) -> Formula:
    """Prefix a box at every node: atoms become boxed atoms, each connective
    application is boxed after its operands are translated."""
    _require_ipl(f)
    return _boxed(f)


def _boxed(f: Formula) -> Formula:
    match f:
        case Atom():
            return Box(f)
        case Neg(arg):
            return Box(Neg(_boxed(arg)))
        case _:
            return Box(type(f)(_boxed(f.left), _boxed(f.right)))


def semi_translate(f: Formula) -> Formula:
    """The box translation with the outermost box stripped."""
    _require_ipl(f)
    match f:
        case Atom():
            return f
        case Neg(arg):
            return Neg(_boxed(arg))
        case _:
            return type(f)(_boxed(f.left), _boxed(f.right))


@dataclass(frozen=True)
class TranslationResult:
    source: Formula
    boxed: Formula
    semi: Formula


def translate(f: Formula) -> TranslationResult:
    return TranslationResult(source=f, boxed=box_translate(f), semi=semi_translate(f))


def _encode(s4_value: int) -> str:
    return VALUE_OF_PAIR[(s4_value, _BOX_COLLAPSE[s4_value])]


def _derive_from_pairs(connective: str, pairs: tuple) -> frozenset:
    """Core of the derivation: only the second slot of each argument pair is
    consulted.  Negation reads the plain S4 table, binary connectives the
    reduced one."""
    seconds = tuple(b for _, b in pairs)
    if connective == NEG:
        cell = M_S4.ops[NEG][seconds]
    elif connective in (IMP, OR, AND):
        cell = M_S4_PRIME.ops[connective][seconds]
    else:
        raise KeyError(f"no intuitionistic multioperation for {connective!r}")
    return frozenset(_encode(e) for e in cell)


def derive_ipl_multiop(connective: str) -> dict:
    """Recompute one intuitionistic table from the S4 tables.  Must coincide
    cell-for-cell with the stored M_IPL constant."""
    letters = (F, U, T)
    if connective == NEG:
        return {
            (z,): _derive_from_pairs(NEG, (PAIR_OF[z],)) for z in letters
        }
    return {
        (z, w): _derive_from_pairs(connective, (PAIR_OF[z], PAIR_OF[w]))
        for z in letters
        for w in letters
    }
