"""Formal section monomials ``sigma^a s1^b s2^c t^d`` and their model ratios.

With ``x = s1/s2`` and ``y = 1/g`` the ratio of a canonical monomial to the
reference ``omega = s1 t`` is ``x^(b-1) y^(d-1)``; the exponents of ``sigma``
and ``s2`` are fixed by the line bundle and drop out.  Sections of ``M``
(the residual bundle, ``K = L + M``) compare to ``t`` as ``x^b y^(d-1)``.
"""

from __future__ import annotations

from typing import NamedTuple

from ..numkernel import Poly

_NAMES = ("sigma", "s1", "s2", "t")


class Tag(NamedTuple):
    sigma: int
    s1: int
    s2: int
    t: int

    def __mul__(self, other: "Tag") -> "Tag":
        return Tag(*(a + b for a, b in zip(self, other)))

    @property
    def name(self) -> str:
        parts = []
        for n, k in zip(_NAMES, self):
            if k == 1:
                parts.append(n)
            elif k > 1:
                parts.append(f"{n}^{k}")
        return "*".join(parts) or "1"


S1 = Tag(0, 1, 0, 0)
S2 = Tag(0, 0, 1, 0)
T = Tag(0, 0, 0, 1)


def _tags(*rows) -> tuple[Tag, ...]:
    return tuple(Tag(*r) for r in rows)


CANONICAL_TAGS = {
    5: _tags((1, 2, 0, 0), (1, 1, 1, 0), (1, 0, 2, 0), (0, 1, 0, 1), (0, 0, 1, 1)),
    6: _tags((1, 3, 0, 0), (1, 2, 1, 0), (1, 1, 2, 0), (1, 0, 3, 0), (0, 1, 0, 1), (0, 0, 1, 1)),
    7: _tags((0, 4, 0, 0), (0, 3, 1, 0), (0, 2, 2, 0), (0, 1, 3, 0), (0, 0, 4, 0),
             (0, 1, 0, 1), (0, 0, 1, 1)),
}

M_TAGS = {
    5: _tags((1, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1)),
    6: _tags((1, 2, 0, 0), (1, 1, 1, 0), (1, 0, 2, 0), (0, 0, 0, 1)),
    7: _tags((0, 3, 0, 0), (0, 2, 1, 0), (0, 1, 2, 0), (0, 0, 3, 0), (0, 0, 0, 1)),
}

L_TAGS = (S1, S2)

# the section whose ratio to t is g = 1/y
G_TAG = {5: Tag(1, 0, 1, 0), 6: Tag(1, 0, 2, 0), 7: Tag(0, 0, 3, 0)}


def monomial_ratio(i: int, j: int) -> tuple[Poly, Poly]:
    """``x^i y^j`` as ``(num, den)`` with nonnegative exponents."""
    num = Poly({(max(i, 0), max(j, 0)): 1})
    den = Poly({(max(-i, 0), max(-j, 0)): 1})
    return num, den


def canonical_ratio(tag: Tag) -> tuple[Poly, Poly]:
    """Ratio of a canonical monomial to ``omega = s1 t``."""
    return monomial_ratio(tag.s1 - 1, tag.t - 1)


def m_ratio(tag: Tag) -> tuple[Poly, Poly]:
    """Ratio of a section of ``M`` to ``t``."""
    return monomial_ratio(tag.s1, tag.t - 1)


def m_polynomial(tag: Tag) -> Poly:
    """Ratio of a section of ``M`` to ``g * t``: a polynomial ``x^b y^d``."""
    return Poly({(tag.s1, tag.t): 1})
