"""Concrete grammar, AST, parser, and printer for the modal-conditional language.

Primitive connectives: atoms, bot, ~, &, |, [] (box), <> (diamond),
=> (indicative conditional), [phi]psi (update).  `->`, `<->`, and `top`
are surface sugar and never appear in the AST.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import ParseError, PathError


# ---------------------------------------------------------------------------
# AST


@dataclass(frozen=True, slots=True)
class Formula:
    pass


@dataclass(frozen=True, slots=True)
class Atom(Formula):
    name: str


@dataclass(frozen=True, slots=True)
class Bottom(Formula):
    pass


@dataclass(frozen=True, slots=True)
class Not(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class And(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Or(Formula):
    left: Formula
    right: Formula


@dataclass(frozen=True, slots=True)
class Box(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class Diamond(Formula):
    body: Formula


@dataclass(frozen=True, slots=True)
class Cond(Formula):
    antecedent: Formula
    consequent: Formula


@dataclass(frozen=True, slots=True)
class Update(Formula):
    announcement: Formula
    body: Formula


BOT = Bottom()
TOP = Not(BOT)

ATOM_RE = re.compile(r"[a-z][a-z0-9_]*")
RESERVED = frozenset({"bot", "top"})


def valid_atom_name(name: str) -> bool:
    return ATOM_RE.fullmatch(name) is not None and name not in RESERVED


def implies(a: Formula, b: Formula) -> Formula:
    """Material conditional, desugared to ~a | b."""
    return Or(Not(a), b)


def iff(a: Formula, b: Formula) -> Formula:
    return And(implies(a, b), implies(b, a))


def conj(parts: list[Formula], empty: Formula = TOP) -> Formula:
    """Conjunction of `parts` as a balanced tree (keeps recursion shallow)."""
    return _balanced(And, parts, empty)


def disj(parts: list[Formula], empty: Formula = BOT) -> Formula:
    return _balanced(Or, parts, empty)


def _balanced(op, parts, empty):
    if not parts:
        return empty
    while len(parts) > 1:
        parts = [op(parts[i], parts[i + 1]) if i + 1 < len(parts) else parts[i]
                 for i in range(0, len(parts), 2)]
    return parts[0]


def children(f: Formula) -> tuple[Formula, ...]:
    if isinstance(f, (Atom, Bottom)):
        return ()
    if isinstance(f, (Not, Box, Diamond)):
        return (f.body,)
    if isinstance(f, (And, Or)):
        return (f.left, f.right)
    if isinstance(f, Cond):
        return (f.antecedent, f.consequent)
    if isinstance(f, Update):
        return (f.announcement, f.body)
    raise TypeError(f"not a formula: {f!r}")


def with_children(f: Formula, kids: tuple[Formula, ...]) -> Formula:
    """Rebuild `f` with replacement children (same constructor)."""
    return type(f)(*kids) if kids else f


# ---------------------------------------------------------------------------
# Structural queries


def is_nonmodal(f: Formula) -> bool:
    """True iff f contains no box, diamond, conditional, or update node."""
    stack = [f]
    while stack:
        g = stack.pop()
        if isinstance(g, (Box, Diamond, Cond, Update)):
            return False
        stack.extend(children(g))
    return True


def atom_names(f: Formula) -> frozenset[str]:
    seen: set[int] = set()
    names: set[str] = set()
    stack = [f]
    while stack:
        g = stack.pop()
        if id(g) in seen:
            continue
        seen.add(id(g))
        if isinstance(g, Atom):
            names.add(g.name)
        else:
            stack.extend(children(g))
    return frozenset(names)


@dataclass(frozen=True, slots=True)
class FormulaMetrics:
    node_count: int
    modal_depth: int
    conditional_count: int


def metrics(f: Formula) -> FormulaMetrics:
    """Tree-size metrics; shared subterms are counted once per occurrence.

    Memoized over object identity, so metrics of heavily shared DAGs (e.g.
    translation output) stay cheap even when the tree size is huge.
    """
    memo: dict[int, tuple[int, int, int]] = {}

    def walk(g: Formula) -> tuple[int, int, int]:
        got = memo.get(id(g))
        if got is not None:
            return got
        kids = [walk(k) for k in children(g)]
        nodes = 1 + sum(k[0] for k in kids)
        depth = max((k[1] for k in kids), default=0)
        conds = sum(k[2] for k in kids)
        if isinstance(g, (Box, Diamond, Cond, Update)):
            depth += 1
        if isinstance(g, Cond):
            conds += 1
        memo[id(g)] = (nodes, depth, conds)
        return nodes, depth, conds

    return FormulaMetrics(*walk(f))


def subformula_at(f: Formula, path: tuple[int, ...]) -> Formula:
    for i in path:
        kids = children(f)
        if not 0 <= i < len(kids):
            raise PathError(f"path component {i} invalid at {type(f).__name__}")
        f = kids[i]
    return f


def substitute(f: Formula, path: tuple[int, ...], replacement: Formula) -> Formula:
    """Replace the occurrence addressed by `path` (child indices from the root)."""
    if not path:
        return replacement
    kids = list(children(f))
    i = path[0]
    if not 0 <= i < len(kids):
        raise PathError(f"path component {i} invalid at {type(f).__name__}")
    kids[i] = substitute(kids[i], path[1:], replacement)
    return with_children(f, tuple(kids))


# ---------------------------------------------------------------------------
# Tokenizer

_TOKEN_NAMES = {
    "NOT": "'~'", "BOX": "'[]'", "DIA": "'<>'", "LBRACK": "'['", "RBRACK": "']'",
    "LPAREN": "'('", "RPAREN": "')'", "AND": "'&'", "OR": "'|'", "IMP": "'->'",
    "IFF": "'<->'", "COND": "'=>'", "ATOM": "atom", "BOT": "'bot'", "TOP": "'top'",
    "EOF": "end of input",
}


@dataclass(frozen=True, slots=True)
class _Token:
    kind: str
    text: str
    line: int
    column: int


def _tokenize(text: str) -> list[_Token]:
    tokens = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        start_col = col

        def emit(kind, length):
            nonlocal i, col
            tokens.append(_Token(kind, text[i:i + length], line, start_col))
            i += length
            col += length

        if ch == "~":
            emit("NOT", 1)
        elif ch == "[":
            if i + 1 < n and text[i + 1] == "]":
                emit("BOX", 2)
            else:
                emit("LBRACK", 1)
        elif ch == "]":
            emit("RBRACK", 1)
        elif ch == "<":
            if text.startswith("<>", i):
                emit("DIA", 2)
            elif text.startswith("<->", i):
                emit("IFF", 3)
            else:
                raise ParseError(f"unexpected character {ch!r}", line, start_col,
                                 ("'<>'", "'<->'"))
        elif ch == "-":
            if text.startswith("->", i):
                emit("IMP", 2)
            else:
                raise ParseError("unexpected character '-'", line, start_col, ("'->'",))
        elif ch == "=":
            if text.startswith("=>", i):
                emit("COND", 2)
            else:
                raise ParseError("unexpected character '='", line, start_col, ("'=>'",))
        elif ch == "&":
            emit("AND", 1)
        elif ch == "|":
            emit("OR", 1)
        elif ch == "(":
            emit("LPAREN", 1)
        elif ch == ")":
            emit("RPAREN", 1)
        else:
            m = ATOM_RE.match(text, i)
            if m is None:
                raise ParseError(f"unexpected character {ch!r}", line, start_col)
            word = m.group(0)
            if word == "bot":
                emit("BOT", len(word))
            elif word == "top":
                emit("TOP", len(word))
            else:
                emit("ATOM", len(word))
    tokens.append(_Token("EOF", "", line, col))
    return tokens


# ---------------------------------------------------------------------------
# Parser (precedence, tightest first: prefix ops; & ; | ; -> ; <-> ; =>)


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def take(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str, expected: tuple[str, ...] = ()) -> ParseError:
        tok = self.peek()
        names = tuple(_TOKEN_NAMES.get(e, e) for e in expected)
        return ParseError(message, tok.line, tok.column, names)

    def expect(self, kind: str) -> _Token:
        if self.peek().kind != kind:
            raise self.fail(f"unexpected {_TOKEN_NAMES[self.peek().kind]}", (kind,))
        return self.take()

    def formula(self) -> Formula:
        left = self.iff()
        if self.peek().kind == "COND":
            self.take()
            right = self.iff()
            if self.peek().kind == "COND":
                raise self.fail("'=>' is non-associative; parenthesize nested conditionals")
            return Cond(left, right)
        return left

    def iff(self) -> Formula:
        left = self.imp()
        if self.peek().kind == "IFF":
            self.take()
            right = self.imp()
            if self.peek().kind == "IFF":
                raise self.fail("'<->' is non-associative; parenthesize")
            return iff(left, right)
        return left

    def imp(self) -> Formula:
        left = self.disjunction()
        if self.peek().kind == "IMP":
            self.take()
            return implies(left, self.imp())
        return left

    def disjunction(self) -> Formula:
        left = self.conjunction()
        while self.peek().kind == "OR":
            self.take()
            left = Or(left, self.conjunction())
        return left

    def conjunction(self) -> Formula:
        left = self.unary()
        while self.peek().kind == "AND":
            self.take()
            left = And(left, self.unary())
        return left

    _UNARY_EXPECTED = ("ATOM", "BOT", "TOP", "NOT", "BOX", "DIA", "LBRACK", "LPAREN")

    def unary(self) -> Formula:
        tok = self.peek()
        if tok.kind == "NOT":
            self.take()
            return Not(self.unary())
        if tok.kind == "BOX":
            self.take()
            return Box(self.unary())
        if tok.kind == "DIA":
            self.take()
            return Diamond(self.unary())
        if tok.kind == "LBRACK":
            self.take()
            announcement = self.formula()
            self.expect("RBRACK")
            return Update(announcement, self.unary())
        if tok.kind == "LPAREN":
            self.take()
            inner = self.formula()
            self.expect("RPAREN")
            return inner
        if tok.kind == "ATOM":
            return Atom(self.take().text)
        if tok.kind == "BOT":
            self.take()
            return BOT
        if tok.kind == "TOP":
            self.take()
            return TOP
        raise self.fail(f"unexpected {_TOKEN_NAMES[tok.kind]}", self._UNARY_EXPECTED)


def parse(text: str) -> Formula:
    """Parse concrete syntax into an AST; ->, <->, and top are desugared."""
    p = _Parser(text)
    f = p.formula()
    if p.peek().kind != "EOF":
        raise p.fail(f"unexpected {_TOKEN_NAMES[p.peek().kind]} after formula", ("EOF",))
    return f


# ---------------------------------------------------------------------------
# Renderer: canonical string with minimal parentheses; parse(render(f)) == f.

_PREC_COND = 1
_PREC_OR = 2
_PREC_AND = 3
_PREC_UNARY = 4
_PREC_ATOM = 5


def _prec(f: Formula) -> int:
    if isinstance(f, (Atom, Bottom)):
        return _PREC_ATOM
    if isinstance(f, (Not, Box, Diamond, Update)):
        return _PREC_UNARY
    if isinstance(f, And):
        return _PREC_AND
    if isinstance(f, Or):
        return _PREC_OR
    return _PREC_COND


def render(f: Formula) -> str:
    return _render(f, 0)


def _render(f: Formula, need: int) -> str:
    if isinstance(f, Atom):
        return f.name
    if isinstance(f, Bottom):
        return "bot"
    if isinstance(f, Not):
        s = "~" + _render(f.body, _PREC_UNARY)
    elif isinstance(f, Box):
        s = "[]" + _render(f.body, _PREC_UNARY)
    elif isinstance(f, Diamond):
        s = "<>" + _render(f.body, _PREC_UNARY)
    elif isinstance(f, Update):
        s = "[" + _render(f.announcement, 0) + "]" + _render(f.body, _PREC_UNARY)
    elif isinstance(f, And):
        s = _render(f.left, _PREC_AND) + " & " + _render(f.right, _PREC_AND + 1)
    elif isinstance(f, Or):
        s = _render(f.left, _PREC_OR) + " | " + _render(f.right, _PREC_OR + 1)
    elif isinstance(f, Cond):
        s = (_render(f.antecedent, _PREC_COND + 1) + " => "
             + _render(f.consequent, _PREC_COND + 1))
    else:
        raise TypeError(f"not a formula: {f!r}")
    return "(" + s + ")" if _prec(f) < need else s
