"""Numeric context: working precision and the tolerances derived from it.

At the default 53 bits scalars are native ``complex``; above that they are
``mpmath.mpc`` evaluated under ``mpmath.workprec``.  Exact inputs stay
``Fraction``/``int`` until an analytic operation needs a float value.
"""

from __future__ import annotations

import cmath
import contextlib
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational

import mpmath


@dataclass(frozen=True)
class NumCtx:
    prec: int = 53
    root_tol: float = 1e-10
    zero_tol: float = 1e-8
    cluster_tol: float = 1e-7
    series_cap: int = 256

    def __post_init__(self):
        if self.prec < 53:
            raise ValueError("precision must be at least 53 bits")

    @property
    def native(self) -> bool:
        return self.prec == 53

    @property
    def eps(self) -> float:
        return 2.0 ** (1 - self.prec)

    @property
    def series_zero_tol(self) -> float:
        # leading-coefficient cutoff for numerically cancelled series terms
        return max(2.0 ** (-(self.prec * 2) // 3), 1e-300)

    def workprec(self):
        if self.native:
            return contextlib.nullcontext()
        return mpmath.workprec(self.prec)

    def convert(self, v):
        """Turn an exact or float value into a working-precision complex scalar."""
        if self.native:
            if isinstance(v, Rational):
                return complex(v.numerator / v.denominator)
            return complex(v)
        if isinstance(v, Rational):
            with mpmath.workprec(self.prec):
                return mpmath.mpc(mpmath.mpf(v.numerator) / v.denominator)
        if isinstance(v, complex):
            return mpmath.mpc(v.real, v.imag)
        return mpmath.mpc(v)

    def sqrt(self, v):
        return cmath.sqrt(v) if self.native else mpmath.sqrt(v)

    def expi(self, theta):
        return cmath.exp(1j * theta) if self.native else mpmath.expjpi(theta / mpmath.pi)

    @property
    def pi(self):
        return math.pi if self.native else +mpmath.pi

    @property
    def two_pi_i(self):
        return 2j * math.pi if self.native else mpmath.mpc(0, 2 * mpmath.pi)


DEFAULT_CTX = NumCtx()


def to_complex(v) -> complex:
    """Collapse any scalar (Fraction, mpc, complex) to a Python complex."""
    if isinstance(v, Rational):
        return complex(float(Fraction(v)))
    return complex(v)


def is_exact(v) -> bool:
    return isinstance(v, Rational)
