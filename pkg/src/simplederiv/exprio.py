"""Parser and canonical formatter for polynomials in x and y.

Grammar (whitespace between tokens is ignored)::

    expr     := term (('+' | '-') term)*
    term     := factor ('*' factor)*
    factor   := atom ('^' uint)?
    atom     := rational | 'x' | 'y' | '(' expr ')' | '-' factor
    rational := int ('/' uint)?

There is no implicit multiplication, so ``2x`` is rejected.  A leading minus
applies to a whole factor: ``-x^2`` is ``-(x^2)``.  Exponents above
``MAX_EXPONENT`` are rejected.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, NamedTuple

from .qpoly import BPoly, UPoly, X, Y

__all__ = [
    "MAX_EXPONENT",
    "PolyParseError",
    "parse_poly",
    "parse_upoly",
    "parse_rational",
    "format_poly",
    "format_upoly",
    "format_rational",
]

MAX_EXPONENT = 1000


class PolyParseError(ValueError):
    """Syntax error; ``position`` is the 1-based character offset."""

    def __init__(self, message: str, position: int, text: str = ""):
        self.message = message
        self.position = position
        self.text = text
        super().__init__(f"{message} at position {position}")


class _Tok(NamedTuple):
    kind: str
    value: str
    pos: int  # 1-based


_TOKEN_RE = re.compile(r"\s*(?:(\d+)|([xy])|([-+*/^()]))")


def _tokenize(text: str) -> List[_Tok]:
    toks = []
    i = 0
    n = len(text)
    while i < n:
        m = _TOKEN_RE.match(text, i)
        if m is None or m.end() == i:
            if text[i:].strip() == "":
                break
            j = i
            while text[j].isspace():
                j += 1
            raise PolyParseError(f"unexpected character {text[j]!r}", j + 1, text)
        if m.group(1) is not None:
            toks.append(_Tok("int", m.group(1), m.start(1) + 1))
        elif m.group(2) is not None:
            toks.append(_Tok("var", m.group(2), m.start(2) + 1))
        elif m.group(3) is not None:
            toks.append(_Tok(m.group(3), m.group(3), m.start(3) + 1))
        i = m.end()
    toks.append(_Tok("end", "", len(text) + 1))
    return toks


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    @property
    def cur(self) -> _Tok:
        return self.toks[self.i]

    def error(self, msg: str, tok: _Tok = None):
        tok = tok or self.cur
        what = "end of input" if tok.kind == "end" else repr(tok.value)
        raise PolyParseError(f"{msg}, found {what}", tok.pos, self.text)

    def eat(self, kind: str) -> _Tok:
        tok = self.cur
        if tok.kind != kind:
            self.error(f"expected {kind!r}")
        self.i += 1
        return tok

    def parse(self) -> BPoly:
        if self.cur.kind == "end":
            self.error("empty expression")
        p = self.expr()
        if self.cur.kind != "end":
            self.error("expected an operator")
        return p

    def expr(self) -> BPoly:
        acc = self.term()
        while self.cur.kind in ("+", "-"):
            op = self.eat(self.cur.kind).kind
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> BPoly:
        acc = self.factor()
        while self.cur.kind == "*":
            self.eat("*")
            acc = acc * self.factor()
        return acc

    def factor(self) -> BPoly:
        base = self.atom()
        if self.cur.kind == "^":
            self.eat("^")
            tok = self.cur
            if tok.kind != "int":
                self.error("expected a non-negative integer exponent")
            self.i += 1
            e = int(tok.value)
            if e > MAX_EXPONENT:
                raise PolyParseError(
                    f"exponent {e} exceeds the limit {MAX_EXPONENT}", tok.pos, self.text
                )
            base = base**e
        return base

    def atom(self) -> BPoly:
        tok = self.cur
        if tok.kind == "int":
            self.i += 1
            num = int(tok.value)
            if self.cur.kind == "/":
                self.eat("/")
                dtok = self.cur
                if dtok.kind != "int":
                    self.error("expected an integer denominator")
                self.i += 1
                den = int(dtok.value)
                if den == 0:
                    raise PolyParseError("zero denominator", dtok.pos, self.text)
                return BPoly.const(Fraction(num, den))
            return BPoly.const(num)
        if tok.kind == "var":
            self.i += 1
            return X if tok.value == "x" else Y
        if tok.kind == "(":
            self.eat("(")
            inner = self.expr()
            self.eat(")")
            return inner
        if tok.kind == "-":
            self.eat("-")
            return -self.factor()
        self.error("expected a number, 'x', 'y', '(' or '-'")


def parse_poly(text: str) -> BPoly:
    return _Parser(text).parse()


def parse_upoly(text: str) -> UPoly:
    """Parse a polynomial that must not involve y."""
    p = parse_poly(text)
    for (_, j) in p.monomials():
        if j:
            pos = text.find("y") + 1
            raise PolyParseError("univariate polynomial in x expected", pos or 1, text)
    return p.at_y_zero()


def parse_rational(text: str) -> Fraction:
    """Parse a signed rational literal such as ``-3/2`` or ``7``."""
    p = parse_poly(text)
    if not p.is_constant():
        raise PolyParseError("rational constant expected", 1, text)
    return p.constant_term()


def format_rational(c: Fraction) -> str:
    c = Fraction(c)
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _monomial_text(i: int, j: int) -> str:
    parts = []
    if i:
        parts.append("x" if i == 1 else f"x^{i}")
    if j:
        parts.append("y" if j == 1 else f"y^{j}")
    return "*".join(parts)


def format_poly(f: BPoly) -> str:
    """Canonical text: descending lex order with x > y."""
    f = BPoly.coerce(f)
    if f.is_zero():
        return "0"
    out = []
    for (i, j), c in sorted(f.terms.items(), reverse=True):
        neg = c < 0
        a = -c if neg else c
        mono = _monomial_text(i, j)
        if not mono:
            body = format_rational(a)
        elif a == 1:
            body = mono
        else:
            body = f"{format_rational(a)}*{mono}"
        if not out:
            out.append(("-" if neg else "") + body)
        else:
            out.append((" - " if neg else " + ") + body)
    return "".join(out)


def format_upoly(u: UPoly) -> str:
    return format_poly(u.to_bpoly())

