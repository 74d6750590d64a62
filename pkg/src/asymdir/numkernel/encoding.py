"""JSON encodings for scalars and polynomials.

A polynomial is ``{"monomials": [[i, j, re, im], ...]}``.  ``re``/``im`` are
strings: exact rationals are written ``"p/q"`` (or plain integers) so a round
trip is lossless, floating values as decimal strings.  On input, coefficients
may also be ints, floats, or ``[num, den]`` pairs.
"""

from __future__ import annotations

import re
from decimal import Decimal, InvalidOperation
from fractions import Fraction

from .parser import parse_polynomial
from .poly import Poly

_RATIONAL = re.compile(r"^\s*([-+]?\d+)\s*/\s*(\d+)\s*$")


def parse_scalar(v):
    """Turn a JSON coefficient into ``Fraction`` (exact forms) or ``float``."""
    if isinstance(v, bool):
        raise ValueError("boolean is not a coefficient")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    if isinstance(v, (list, tuple)):
        if len(v) != 2 or not all(isinstance(k, int) and not isinstance(k, bool) for k in v):
            raise ValueError(f"rational pair must be [num, den] integers, got {v!r}")
        if v[1] == 0:
            raise ValueError("zero denominator")
        return Fraction(v[0], v[1])
    if isinstance(v, str):
        m = _RATIONAL.match(v)
        if m:
            if int(m.group(2)) == 0:
                raise ValueError("zero denominator")
            return Fraction(int(m.group(1)), int(m.group(2)))
        try:
            d = Decimal(v.strip())
        except InvalidOperation:
            raise ValueError(f"not a number: {v!r}") from None
        if not d.is_finite():
            raise ValueError(f"non-finite coefficient {v!r}")
        return Fraction(d)
    raise ValueError(f"unsupported coefficient {v!r}")


def format_scalar(c) -> str:
    if isinstance(c, Fraction):
        return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"
    return repr(float(c))


def _split(c):
    if isinstance(c, Fraction):
        return c, Fraction(0)
    c = complex(c)
    return c.real, c.imag


def poly_to_json(p: Poly) -> dict:
    rows = []
    for e, c in p.monomials():
        re_, im = _split(c)
        rows.append([*e, format_scalar(re_), format_scalar(im)])
    return {"monomials": rows}


def poly_from_json(obj, vars=("x", "y")) -> Poly:
    """Accept the monomial encoding or polynomial text."""
    if isinstance(obj, str):
        return parse_polynomial(obj, vars)
    if not isinstance(obj, dict) or "monomials" not in obj:
        raise ValueError("polynomial JSON needs a 'monomials' list")
    n = len(vars)
    terms: dict = {}
    for row in obj["monomials"]:
        if not isinstance(row, list) or len(row) not in (n + 1, n + 2):
            raise ValueError(f"bad monomial row {row!r}")
        e = tuple(row[:n])
        if not all(isinstance(k, int) and k >= 0 for k in e):
            raise ValueError(f"bad exponent in {row!r}")
        re_ = parse_scalar(row[n])
        im = parse_scalar(row[n + 1]) if len(row) == n + 2 else Fraction(0)
        c = re_ if im == 0 else complex(float(re_), float(im))
        terms[e] = terms.get(e, 0) + c
    return Poly(terms, vars)
