"""Tiny expression grammar for elements, used by the command line.

Grammar (rationals only):

    expr    := term (('+' | '-') term)*
    term    := signed ('*' signed)*
    signed  := ('-' | '+')* atom
    atom    := 'u' '(' rat (',' rat)* ')' | 'v' '(' ... ')'
             | rat ['i'] | 'i' | '(' expr ')'
    rat     := INT ['/' INT]

Example: ``u(1/2)*v(1/3) + 2i*v(1)``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .algebra import Element
from .errors import ExpressionError
from .lattice import Frame

_TOKEN = re.compile(r"\s*(?:(\d+)|([uvi])|([()*+,/-]))")


def _tokenize(text: str):
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            stripped = text[pos:].lstrip()
            if not stripped:
                break
            raise ExpressionError(f"unexpected character {stripped[0]!r}", pos)
        if m.group(1) is not None:
            tokens.append(("int", int(m.group(1)), m.start(1)))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), m.start(2)))
        else:
            tokens.append(("sym", m.group(3), m.start(3)))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str, frame: Frame):
        self.tokens = _tokenize(text)
        self.frame = frame
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def next(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect_sym(self, sym):
        kind, val, pos = self.next()
        if kind != "sym" or val != sym:
            raise ExpressionError(f"expected {sym!r}", pos)

    def parse(self) -> Element:
        value = self.expr()
        kind, _, pos = self.peek()
        if kind != "end":
            raise ExpressionError("trailing input", pos)
        return value

    def expr(self) -> Element:
        value = self.term()
        while True:
            kind, sym, _ = self.peek()
            if kind == "sym" and sym in "+-":
                self.next()
                rhs = self.term()
                value = value + rhs if sym == "+" else value - rhs
            else:
                return value

    def term(self) -> Element:
        value = self.signed()
        while True:
            kind, sym, _ = self.peek()
            if kind == "sym" and sym == "*":
                self.next()
                value = value * self.signed()
            else:
                return value

    def signed(self) -> Element:
        sign = 1
        while True:
            kind, sym, _ = self.peek()
            if kind == "sym" and sym in "+-":
                self.next()
                if sym == "-":
                    sign = -sign
            else:
                break
        atom = self.atom()
        return atom if sign == 1 else -atom

    def atom(self) -> Element:
        kind, val, pos = self.peek()
        if kind == "int":
            r = self.rational()
            kind, name, _ = self.peek()
            if kind == "name" and name == "i":
                self.next()
                return Element.one(self.frame) * complex(0, float(r))
            return Element.one(self.frame) * r
        if kind == "name" and val == "i":
            self.next()
            return Element.one(self.frame) * 1j
        if kind == "name" and val in ("u", "v"):
            self.next()
            self.expect_sym("(")
            coords = [self.signed_rational()]
            while True:
                k, sym, _ = self.peek()
                if k == "sym" and sym == ",":
                    self.next()
                    coords.append(self.signed_rational())
                else:
                    break
            self.expect_sym(")")
            if len(coords) != self.frame.d:
                raise ExpressionError(
                    f"{val}(...) takes {self.frame.d} coordinate(s), got {len(coords)}", pos)
            return Element.u(self.frame, coords) if val == "u" else Element.v(self.frame, coords)
        if kind == "sym" and val == "(":
            self.next()
            inner = self.expr()
            self.expect_sym(")")
            return inner
        raise ExpressionError("expected a number, i, u(...), v(...) or parenthesis", pos)

    def rational(self) -> Fraction:
        kind, val, pos = self.next()
        if kind != "int":
            raise ExpressionError("expected an integer", pos)
        num = val
        kind, sym, _ = self.peek()
        if kind == "sym" and sym == "/":
            self.next()
            kind, den, pos = self.next()
            if kind != "int":
                raise ExpressionError("expected a denominator", pos)
            if den == 0:
                raise ExpressionError("zero denominator", pos)
            return Fraction(num, den)
        return Fraction(num)

    def signed_rational(self) -> Fraction:
        sign = 1
        while True:
            kind, sym, _ = self.peek()
            if kind == "sym" and sym in "+-":
                self.next()
                if sym == "-":
                    sign = -sign
            else:
                break
        return sign * self.rational()


def parse_element(text: str, frame: Frame) -> Element:
    """Parse an element expression over the given frame."""
    return _Parser(text, frame).parse()
