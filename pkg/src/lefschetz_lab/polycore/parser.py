"""Recursive-descent parser for polynomial text.

Grammar (whitespace is insignificant)::

    expr   := ('+'|'-')? term (('+'|'-') term)*
    term   := unary (('*'|'/') unary)*       # '/' only by a constant
    unary  := ('+'|'-') unary | power
    power  := atom ('^' nat)?
    atom   := nat | name | '(' expr ')'

A rational literal ``3/4`` is a nat divided by a nat.  Intermediate results
may be inhomogeneous (``x*(x+1) - x`` is fine); the final polynomial must
be homogeneous.
"""

from __future__ import annotations

import re
from fractions import Fraction

from ..errors import DegreeError, ParseError
from .poly import Poly, PolyRing, mono_mul

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            bad = pos + len(text[pos:]) - len(text[pos:].lstrip())
            raise ParseError(f"unexpected character {text[bad]!r}", position=bad)
        start = m.start(m.lastindex)
        if m.group(1) is not None:
            tokens.append(("num", int(m.group(1)), start))
        elif m.group(2) is not None:
            tokens.append(("name", m.group(2), start))
        else:
            op = "^" if m.group(3) == "**" else m.group(3)
            tokens.append(("op", op, start))
        pos = m.end()
    tokens.append(("end", None, len(text)))
    return tokens


class _Parser:
    # values are dicts monomial -> Fraction, possibly inhomogeneous

    def __init__(self, text: str, ring: PolyRing):
        self.tokens = _tokenize(text)
        self.i = 0
        self.ring = ring
        self.index = {name: k for k, name in enumerate(ring.names)}

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def expect(self, value):
        tok = self.take()
        if tok[0] != "op" or tok[1] != value:
            raise ParseError(f"expected {value!r}", position=tok[2])
        return tok

    def const(self, c):
        return {(0,) * self.ring.n: Fraction(c)} if c else {}

    @staticmethod
    def add(a, b, sign=1):
        out = dict(a)
        for m, c in b.items():
            v = out.get(m, 0) + sign * c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return out

    @staticmethod
    def mul(a, b):
        out = {}
        for m1, c1 in a.items():
            for m2, c2 in b.items():
                m = mono_mul(m1, m2)
                v = out.get(m, 0) + c1 * c2
                if v:
                    out[m] = v
                else:
                    out.pop(m, None)
        return out

    def constant_value(self, value, position):
        if not value:
            return Fraction(0)
        if len(value) == 1:
            (m, c), = value.items()
            if not any(m):
                return c
        raise ParseError("division by a non-literal", position=position)

    def parse(self):
        value = self.expr()
        tok = self.peek()
        if tok[0] != "end":
            raise ParseError(f"unexpected token {tok[1]!r}", position=tok[2])
        return value

    def expr(self):
        tok = self.peek()
        sign = 1
        if tok[0] == "op" and tok[1] in "+-":
            self.take()
            sign = -1 if tok[1] == "-" else 1
        value = self.term()
        if sign < 0:
            value = {m: -c for m, c in value.items()}
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] in ("+", "-"):
                self.take()
                value = self.add(value, self.term(), -1 if tok[1] == "-" else 1)
            else:
                return value

    def term(self):
        value = self.unary()
        while True:
            tok = self.peek()
            if tok[0] == "op" and tok[1] == "*":
                self.take()
                value = self.mul(value, self.unary())
            elif tok[0] == "op" and tok[1] == "/":
                self.take()
                divisor = self.constant_value(self.unary(), tok[2])
                if divisor == 0:
                    raise ParseError("division by zero", position=tok[2])
                value = {m: c / divisor for m, c in value.items()}
            else:
                return value

    def unary(self):
        tok = self.peek()
        if tok[0] == "op" and tok[1] in ("+", "-"):
            self.take()
            value = self.unary()
            return value if tok[1] == "+" else {m: -c for m, c in value.items()}
        return self.power()

    def power(self):
        base = self.atom()
        tok = self.peek()
        if tok[0] == "op" and tok[1] == "^":
            self.take()
            exp = self.take()
            if exp[0] != "num":
                raise ParseError("exponent must be a non-negative integer", position=exp[2])
            result = self.const(1)
            for _ in range(exp[1]):
                result = self.mul(result, base)
            return result
        return base

    def atom(self):
        tok = self.take()
        kind, value, pos = tok
        if kind == "num":
            return self.const(value)
        if kind == "name":
            if value not in self.index:
                raise ParseError(f"unknown variable {value!r}", position=pos)
            m = [0] * self.ring.n
            m[self.index[value]] = 1
            return {tuple(m): Fraction(1)}
        if kind == "op" and value == "(":
            inner = self.expr()
            self.expect(")")
            return inner
        if kind == "end":
            raise ParseError("unexpected end of input", position=pos)
        raise ParseError(f"unexpected token {value!r}", position=pos)


def parse_poly(text: str, ring, field=None, degree: int | None = None) -> Poly:
    """Parse ``text`` into a homogeneous :class:`Poly`.

    ``ring`` is a :class:`PolyRing` or a sequence of variable names (in
    which case ``field`` selects the coefficient field, Q by default).
    """
    if not isinstance(ring, PolyRing):
        ring = PolyRing(tuple(ring), field) if field is not None else PolyRing(tuple(ring))
    terms = _Parser(text, ring).parse()
    degrees = sorted({sum(m) for m in terms}, reverse=True)
    if len(degrees) > 1:
        raise DegreeError(f"non-homogeneous input: degrees {degrees[0]} and {degrees[1]}")
    try:
        return Poly(ring, terms, degree if not terms else None)
    except ZeroDivisionError as exc:
        raise ParseError(f"coefficient not defined over {ring.field}: {exc}") from None
