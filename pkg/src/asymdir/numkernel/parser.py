"""Recursive-descent parser for polynomial text.

Grammar (standard precedence, ``^`` right-associative)::

    expr   := term (('+' | '-') term)*
    term   := unary (('*' | '/') unary)*
    unary  := ('+' | '-') unary | power
    power  := atom ('^' exponent)?
    exponent := ('+')? (INT | '(' expr ')') ('^' exponent)?
    atom   := NUMBER | NAME | '(' expr ')'

Division is only allowed by a nonzero constant, which is how rational
literals like ``3/4`` enter.  Exponents must be constant nonnegative integers.
"""

from __future__ import annotations

import re
from decimal import Decimal
from fractions import Fraction
from typing import Sequence

from ..errors import PolySyntaxError, UnknownVariable
from .poly import Poly

_TOKEN = re.compile(r"\s*(?:(\d+\.\d*|\.\d+|\d+)|([A-Za-z_][A-Za-z_0-9]*)|(\*\*|[-+*/^()]))")


def _tokenize(text: str):
    pos = 0
    out = []
    n = len(text)
    while pos < n:
        if text[pos].isspace():
            pos += 1
            continue
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            raise PolySyntaxError(f"unexpected character {text[pos]!r}", text, pos)
        start = m.start(m.lastindex)
        num, name, op = m.groups()
        if num is not None:
            out.append(("num", num, start))
        elif name is not None:
            out.append(("name", name, start))
        else:
            out.append(("op", "^" if op == "**" else op, start))
        pos = m.end()
    out.append(("end", "", n))
    return out


class _Parser:
    def __init__(self, text: str, vars: Sequence[str]):
        self.text = text
        self.vars = tuple(vars)
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, msg, tok=None):
        tok = tok or self.peek()
        raise PolySyntaxError(msg, self.text, tok[2])

    def expect(self, op):
        tok = self.take()
        if tok != ("op", op, tok[2]):
            self.error(f"expected {op!r}", tok)

    def parse(self) -> Poly:
        if self.peek()[0] == "end":
            self.error("empty expression")
        p = self.expr()
        if self.peek()[0] != "end":
            self.error(f"unexpected token {self.peek()[1]!r}")
        return p

    def expr(self) -> Poly:
        p = self.term()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            q = self.term()
            p = p + q if op == "+" else p - q
        return p

    def term(self) -> Poly:
        p = self.unary()
        while self.peek()[:2] in (("op", "*"), ("op", "/")):
            tok = self.take()
            q = self.unary()
            if tok[1] == "*":
                p = p * q
            else:
                if q.total_degree > 0:
                    self.error("division by a non-constant polynomial", tok)
                if q.is_zero():
                    self.error("division by zero", tok)
                p = p / q
        return p

    def unary(self) -> Poly:
        tok = self.peek()
        if tok[:2] == ("op", "-"):
            self.take()
            return -self.unary()
        if tok[:2] == ("op", "+"):
            self.take()
            return self.unary()
        return self.power()

    def power(self) -> Poly:
        base = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            return base ** self.exponent()
        return base

    def exponent(self) -> int:
        tok = self.peek()
        if tok[:2] == ("op", "+"):
            self.take()
            tok = self.peek()
        if tok[0] == "num":
            self.take()
            if not tok[1].isdigit():
                self.error("exponent must be a nonnegative integer", tok)
            value = int(tok[1])
        elif tok[:2] == ("op", "("):
            self.take()
            inner = self.expr()
            self.expect(")")
            value = self._const_int(inner, tok)
        elif tok[:2] == ("op", "-"):
            self.error("negative exponents are not polynomial", tok)
        else:
            self.error("expected an integer exponent", tok)
        if self.peek()[:2] == ("op", "^"):
            self.take()
            value = value ** self.exponent()
        return value

    def _const_int(self, p: Poly, tok) -> int:
        if p.total_degree > 0:
            self.error("exponent must be constant", tok)
        c = p.terms.get((0,) * p.nvars, Fraction(0))
        if not isinstance(c, Fraction) or c.denominator != 1 or c < 0:
            self.error("exponent must be a nonnegative integer", tok)
        return int(c)

    def atom(self) -> Poly:
        tok = self.take()
        kind, val, pos = tok
        if kind == "num":
            return Poly.const(Fraction(Decimal(val)), self.vars)
        if kind == "name":
            if val not in self.vars:
                raise UnknownVariable(f"unknown variable {val!r} at position {pos}; "
                                      f"allowed: {', '.join(self.vars)}")
            return Poly.var(val, self.vars)
        if (kind, val) == ("op", "("):
            p = self.expr()
            self.expect(")")
            return p
        if kind == "end":
            self.error("unexpected end of input", tok)
        self.error(f"unexpected token {val!r}", tok)


def parse_polynomial(text: str, vars: Sequence[str] = ("x", "y")) -> Poly:
    """Parse and expand ``text`` into a sparse polynomial over ``vars``."""
    return _Parser(text, vars).parse()


def _format_coeff(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    c = complex(c)
    if c.imag == 0:
        return repr(c.real)
    raise ValueError("complex coefficients have no text form")


def format_polynomial(p: Poly) -> str:
    """Render ``p`` in the grammar accepted by :func:`parse_polynomial`."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in sorted(p.terms.items(), key=lambda t: (-sum(t[0]), [-k for k in t[0]])):
        mono = "*".join(v if k == 1 else f"{v}^{k}" for v, k in zip(p.vars, e) if k)
        neg = c < 0 if isinstance(c, Fraction) else complex(c).real < 0
        mag = _format_coeff(-c if neg else c)
        if mono:
            body = mono if mag == "1" else f"{mag}*{mono}"
        else:
            body = mag
        if "/" in mag and mono:
            body = f"({mag})*{mono}"
        parts.append(("-" if neg else "+", body))
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out
