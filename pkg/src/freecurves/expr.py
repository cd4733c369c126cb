"""Parser and renderer for the polynomial expression language.

Grammar::

    expr     := term { ("+" | "-") term } ;
    term     := ["-"] factor { "*" factor } ;
    factor   := base [ "^" natural ] ;
    base     := rational | symbol | "(" expr ")" ;
    rational := integer [ "/" natural ] ;
    symbol   := "x" | "y" | "z" | "t"

Juxtaposition is not multiplication.  ``t`` is the generator of the
declared quadratic field and is rejected when no field was declared.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .field import QQ, FieldElement, FieldTower
from .poly import XYZ, MultiPoly


class ParseError(ValueError):
    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.message = message
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Token:
    kind: str
    text: str
    line: int
    column: int


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\S))")


def tokenize(text: str, line_offset: int = 0) -> list[Token]:
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if m is None or m.end() == pos:
            break
        start = m.start(m.lastindex) if m.lastindex else m.end()
        line = text.count("\n", 0, start) + 1 + line_offset
        col = start - (text.rfind("\n", 0, start) + 1) + 1
        if m.group(1) is not None:
            tokens.append(Token("int", m.group(1), line, col))
        elif m.group(2) is not None:
            tokens.append(Token("name", m.group(2), line, col))
        elif m.group(3) is not None:
            ch = m.group(3)
            if ch not in "+-*/^()":
                raise ParseError(f"unexpected character {ch!r}", line, col)
            tokens.append(Token(ch, ch, line, col))
        pos = m.end()
    end_line = text.count("\n") + 1 + line_offset
    end_col = len(text) - (text.rfind("\n") + 1) + 1
    tokens.append(Token("eof", "", end_line, end_col))
    return tokens


class _Parser:
    def __init__(self, text: str, tower: FieldTower, variables, line_offset: int):
        self.tokens = tokenize(text, line_offset)
        self.i = 0
        self.tower = tower
        self.variables = tuple(variables)

    def peek(self) -> Token:
        return self.tokens[self.i]

    def take(self, kind: str | None = None) -> Token:
        tok = self.tokens[self.i]
        if kind is not None and tok.kind != kind:
            want = "end of input" if kind == "eof" else repr(kind)
            got = "end of input" if tok.kind == "eof" else repr(tok.text)
            raise ParseError(f"expected {want}, found {got}", tok.line, tok.column)
        self.i += 1
        return tok

    def error(self, msg: str):
        tok = self.peek()
        raise ParseError(msg, tok.line, tok.column)

    def parse(self) -> MultiPoly:
        if self.peek().kind == "eof":
            self.error("empty expression")
        result = self.expr()
        self.take("eof")
        return result

    def expr(self) -> MultiPoly:
        result = self.term()
        while self.peek().kind in ("+", "-"):
            op = self.take().kind
            rhs = self.term()
            result = result + rhs if op == "+" else result - rhs
        return result

    def term(self) -> MultiPoly:
        negate = False
        if self.peek().kind == "-":
            self.take()
            negate = True
        result = self.factor()
        while self.peek().kind == "*":
            self.take()
            result = result * self.factor()
        return -result if negate else result

    def factor(self) -> MultiPoly:
        base = self.base()
        if self.peek().kind == "^":
            self.take()
            tok = self.peek()
            if tok.kind != "int":
                self.error("exponent must be a natural number")
            self.take()
            base = base ** int(tok.text)
        return base

    def base(self) -> MultiPoly:
        tok = self.peek()
        if tok.kind == "int":
            self.take()
            value = Fraction(int(tok.text))
            if self.peek().kind == "/":
                self.take()
                den = self.peek()
                if den.kind != "int":
                    self.error("denominator must be a natural number")
                self.take()
                if int(den.text) == 0:
                    raise ParseError("zero denominator", den.line, den.column)
                value /= int(den.text)
            return MultiPoly.constant(value, self.variables, self.tower)
        if tok.kind == "name":
            self.take()
            if tok.text in self.variables:
                return MultiPoly.var(tok.text, self.variables, self.tower)
            if tok.text == "t":
                if self.tower.height == 0:
                    raise ParseError("undeclared generator symbol 't'", tok.line, tok.column)
                return MultiPoly.constant(self.tower.gen(0), self.variables, self.tower)
            raise ParseError(f"unknown symbol {tok.text!r}", tok.line, tok.column)
        if tok.kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            return inner
        if tok.kind == "eof":
            self.error("unexpected end of input")
        self.error(f"unexpected token {tok.text!r}")


def parse_poly(
    text: str, tower: FieldTower = QQ, variables=XYZ, line_offset: int = 0
) -> MultiPoly:
    """Parse ``text`` into an exact polynomial over ``tower``."""
    return _Parser(text, tower, variables, line_offset).parse()


def _render_coeff(c: FieldElement) -> str:
    if c.tower.height > 1 and any(c.coords[2:]):
        raise ValueError("only towers of height <= 1 can be rendered as expressions")
    a = c.coords[0]
    b = c.coords[1] if len(c.coords) > 1 else Fraction(0)
    if b == 0:
        return str(a)
    tpart = "t" if b == 1 else "-t" if b == -1 else f"{b}*t"
    if a == 0:
        return tpart
    return f"({a} + {tpart})" if b > 0 else f"({a} - {tpart.lstrip('-')})"


def render_poly(f: MultiPoly) -> str:
    """Render ``f`` in the expression grammar (inverse of :func:`parse_poly`)."""
    if f.is_zero():
        return "0"
    pieces = []
    for exp in sorted(f.terms, key=lambda e: (-sum(e), tuple(-k for k in e))):
        c = f.terms[exp]
        mono = "*".join(
            v if k == 1 else f"{v}^{k}" for v, k in zip(f.variables, exp) if k
        )
        coeff = _render_coeff(c)
        negative = coeff.startswith("-") and not coeff.startswith("(")
        if negative:
            coeff = coeff[1:]
        if mono:
            body = mono if coeff == "1" else f"{coeff}*{mono}"
        else:
            body = coeff
        if not pieces:
            pieces.append(("-" if negative else "") + body)
        else:
            pieces.append((" - " if negative else " + ") + body)
    return "".join(pieces)
