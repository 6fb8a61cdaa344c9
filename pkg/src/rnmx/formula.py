"""Formula ASTs for intuitionistic and S4 signatures, parser, printer,
subformula closure, and the complexity measure."""

from __future__ import annotations

import re
from dataclasses import dataclass

IPL = "IPL"
S4 = "S4"

_ATOM_RE = re.compile(r"[a-z][a-zA-Z0-9_]*")


class ParseError(ValueError):
    """Malformed formula text. ``offset`` is the byte offset of the bad token."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Atom:
    name: str


@dataclass(frozen=True)
class Neg:
    arg: "Formula"


@dataclass(frozen=True)
class Box:
    arg: "Formula"


@dataclass(frozen=True)
class And:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Or:
    left: "Formula"
    right: "Formula"


@dataclass(frozen=True)
class Imp:
    left: "Formula"
    right: "Formula"


Formula = Atom | Neg | Box | And | Or | Imp

_BINARY = (And, Or, Imp)


def signature_of(f: Formula) -> str:
    """Smallest signature the formula lives in: S4 iff it contains a box."""
    match f:
        case Atom():
            return IPL
        case Box():
            return S4
        case Neg(arg):
            return signature_of(arg)
        case _:
            return S4 if S4 in (signature_of(f.left), signature_of(f.right)) else IPL


def complexity(f: Formula) -> int:
    """0 for atoms; unary adds 1; binary adds both operands plus 1."""
    match f:
        case Atom():
            return 0
        case Neg(arg) | Box(arg):
            return complexity(arg) + 1
        case _:
            return complexity(f.left) + complexity(f.right) + 1


def subformulas(f: Formula):
    """Pre-order (node, left, right) walk; yields duplicates as encountered."""
    yield f
    match f:
        case Atom():
            pass
        case Neg(arg) | Box(arg):
            yield from subformulas(arg)
        case _:
            yield from subformulas(f.left)
            yield from subformulas(f.right)


def atoms(f: Formula) -> frozenset:
    """The complexity-0 subformulas."""
    return frozenset(g for g in subformulas(f) if isinstance(g, Atom))


@dataclass(frozen=True)
class SubformulaClosure:
    """Deduplicated subformula-closed column list, ordered by increasing
    complexity; ties broken by first occurrence in a pre-order walk of the
    roots."""

    formulas: tuple

    def __len__(self):
        return len(self.formulas)

    def index(self, f: Formula) -> int:
        return self.formulas.index(f)

    @property
    def atom_count(self) -> int:
        return sum(1 for f in self.formulas if isinstance(f, Atom))

    @property
    def signature(self) -> str:
        return S4 if any(isinstance(f, Box) for f in self.formulas) else IPL


def subformula_closure(roots) -> SubformulaClosure:
    if not roots:
        raise ValueError("closure needs at least one root formula")
    first_seen: dict = {}
    for root in roots:
        for g in subformulas(root):
            if g not in first_seen:
                first_seen[g] = len(first_seen)
    ordered = sorted(first_seen, key=lambda g: (complexity(g), first_seen[g]))
    return SubformulaClosure(tuple(ordered))


# --- parsing ---------------------------------------------------------------

# Unicode connectives are aliases for the ASCII spellings.
_TOKEN_RE = re.compile(
    r"->|/\\|\\/|\[\]|[~|&()]|¬|∧|∨|→|□"
    r"|[a-z][a-zA-Z0-9_]*"
)
_ALIAS = {"¬": "~", "∧": "/\\", "∨": "\\/", "→": "->", "□": "[]"}


def _tokenize(text: str):
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN_RE.match(text, pos)
        if m is None:
            raise ParseError(
                f"unexpected character {text[pos]!r}", _byte_offset(text, pos)
            )
        tok = _ALIAS.get(m.group(), m.group())
        tokens.append((tok, _byte_offset(text, pos)))
        pos = m.end()
    return tokens


def _byte_offset(text: str, pos: int) -> int:
    return len(text[:pos].encode("utf-8"))


class _Parser:
    def __init__(self, tokens, signature, length):
        self.tokens = tokens
        self.signature = signature
        self.end = length
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos][0] if self.pos < len(self.tokens) else None

    def offset(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos][1]
        return self.end

    def take(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def imp(self) -> Formula:
        left = self.disj()
        if self.peek() == "->":
            self.take()
            return Imp(left, self.imp())
        return left

    def disj(self) -> Formula:
        f = self.conj()
        while self.peek() in ("\\/", "|"):
            self.take()
            f = Or(f, self.conj())
        return f

    def conj(self) -> Formula:
        f = self.unary()
        while self.peek() in ("/\\", "&"):
            self.take()
            f = And(f, self.unary())
        return f

    def unary(self) -> Formula:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self.offset())
        if tok == "~":
            self.take()
            return Neg(self.unary())
        if tok == "[]":
            _, off = self.take()
            if self.signature != S4:
                raise ParseError("box operator is not part of the IPL signature", off)
            return Box(self.unary())
        if tok == "(":
            self.take()
            f = self.imp()
            if self.peek() != ")":
                raise ParseError(f"expected ')', found {self.peek()!r}", self.offset())
            self.take()
            return f
        if _ATOM_RE.fullmatch(tok):
            self.take()
            return Atom(tok)
        raise ParseError(f"unexpected token {tok!r}", self.offset())


def parse(text: str, signature: str = IPL) -> Formula:
    """Parse ``text`` under the given signature.

    Grammar: implication is right-associative and binds loosest, then
    disjunction, conjunction, and the prefix operators ``~`` and ``[]``
    (S4 only).  Unicode spellings are accepted as aliases.
    """
    if signature not in (IPL, S4):
        raise ValueError(f"unknown signature {signature!r}")
    if not text.strip():
        raise ParseError("empty formula", 0)
    parser = _Parser(_tokenize(text), signature, len(text.encode("utf-8")))
    f = parser.imp()
    if parser.peek() is not None:
        raise ParseError(f"trailing token {parser.peek()!r}", parser.offset())
    return f


# --- printing --------------------------------------------------------------

_ASCII = {"neg": "~", "box": "[]", "and": " /\\ ", "or": " \\/ ", "imp": " -> "}
_UNICODE = {"neg": "¬", "box": "□", "and": " ∧ ", "or": " ∨ ", "imp": " → "}

_PREC = {Imp: 1, Or: 2, And: 3, Neg: 4, Box: 4, Atom: 5}


def pretty(f: Formula, style: str = "unicode") -> str:
    """Render with minimal parentheses, except that the right operand of an
    implication is always parenthesized when it is itself an implication."""
    if style == "ascii":
        sym = _ASCII
    elif style == "unicode":
        sym = _UNICODE
    else:
        raise ValueError(f"unknown style {style!r}")
    return _render(f, sym)


def _render(f, sym):
    match f:
        case Atom(name):
            return name
        case Neg(arg) | Box(arg):
            op = sym["neg"] if isinstance(f, Neg) else sym["box"]
            inner = _render(arg, sym)
            if _PREC[type(arg)] < _PREC[Neg]:
                inner = f"({inner})"
            return op + inner
        case Imp(left, right):
            ls = _render(left, sym)
            if isinstance(left, Imp):
                ls = f"({ls})"
            rs = _render(right, sym)
            if isinstance(right, Imp):
                rs = f"({rs})"
            return ls + sym["imp"] + rs
        case Or(left, right) | And(left, right):
            prec = _PREC[type(f)]
            op = sym["or"] if isinstance(f, Or) else sym["and"]
            ls = _render(left, sym)
            if _PREC[type(left)] < prec:
                ls = f"({ls})"
            rs = _render(right, sym)
            # same-precedence right operand: the grammar is left-associative
            if _PREC[type(right)] < prec or type(right) is type(f):
                rs = f"({rs})"
            return ls + op + rs
    raise TypeError(f"not a formula: {f!r}")
