"""Recursive-descent parser for the polynomial wire format.

Grammar::

    expr  := term (('+' | '-') term)*
    term  := unary ('*' unary)*
    unary := '-' unary | '+' unary | power
    power := atom ('^' INT)?
    atom  := INT ('/' INT)? | IDENT | '(' expr ')'
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import List, Sequence, Tuple

from .polyring import Poly, PolyError, UnknownVariable

_IDENT_RE = re.compile(r"[a-zA-Z_][a-zA-Z0-9_]*")
_INT_RE = re.compile(r"\d+")


class ParseError(PolyError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.position = position


class BadExponent(ParseError):
    pass


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens = []
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        m = _INT_RE.match(text, pos)
        if m:
            tokens.append(("int", m.group(), pos))
            pos = m.end()
            continue
        m = _IDENT_RE.match(text, pos)
        if m:
            tokens.append(("ident", m.group(), pos))
            pos = m.end()
            continue
        if ch not in "+-*^/()":
            raise ParseError(f"unexpected character {ch!r}", pos)
        tokens.append(("op", ch, pos))
        pos += 1
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.vars = tuple(vars)
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value: str):
        kind, val, pos = self.take()
        if val != value or kind != "op":
            raise ParseError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            raise ParseError("empty expression", 0)
        p = self.expr()
        kind, val, pos = self.peek()
        if kind != "end":
            raise ParseError(f"unexpected token {val!r}", pos)
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[1] in ("+", "-") and self.peek()[0] == "op":
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            p = p * self.unary()
        return p

    def unary(self) -> Poly:
        kind, val, _ = self.peek()
        if kind == "op" and val in "+-":
            self.take()
            p = self.unary()
            return -p if val == "-" else p
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            kind, val, pos = self.take()
            if kind == "op" and val == "-":
                raise BadExponent("negative exponent", pos)
            if kind != "int":
                raise BadExponent("exponent must be a nonnegative integer literal", pos)
            if self.peek()[:2] == ("op", "/"):
                raise BadExponent("exponent must be an integer", self.peek()[2])
            return base ** int(val)
        return base

    def atom(self) -> Poly:
        kind, val, pos = self.take()
        if kind == "int":
            value = Fraction(int(val))
            if self.peek()[:2] == ("op", "/"):
                self.take()
                k2, v2, p2 = self.take()
                if k2 != "int":
                    raise ParseError("expected integer denominator", p2)
                if int(v2) == 0:
                    raise ParseError("zero denominator", p2)
                value = value / int(v2)
            return Poly.const(self.vars, value)
        if kind == "ident":
            if val not in self.vars:
                raise UnknownVariable(val)
            return Poly.var(self.vars, val)
        if kind == "op" and val == "(":
            p = self.expr()
            self.expect(")")
            return p
        raise ParseError(f"unexpected token {val or 'end of input'!r}", pos)


def parse_poly(text: str, vars: Sequence[str]) -> Poly:
    """Parse ``text`` into a polynomial over ``vars``."""
    return _Parser(text, vars).parse()


def parse_many(texts: Sequence[str], vars: Sequence[str]) -> List[Poly]:
    return [parse_poly(t, vars) for t in texts]
