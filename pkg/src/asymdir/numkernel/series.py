"""Truncated Laurent series ``x^v (c_0 + c_1 x + ...) + O(x^order)``."""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from ..errors import DegenerateInput, DivisionByZeroSeries, PrecisionExhausted
from .poly import UniPoly


def _abs(c) -> float:
    return float(abs(c))


class LaurentSeries:
    """Immutable truncated Laurent series.

    ``coeffs[k]`` multiplies ``x**(valuation + k)``; every exponent below
    ``order`` is known (absent entries are zero), nothing at or above it is.
    A series that is zero to its truncation has empty ``coeffs`` and
    ``valuation == order``.
    """

    __slots__ = ("coeffs", "valuation", "order")

    def __init__(self, coeffs: Sequence = (), valuation: int = 0, order: int | None = None):
        cs = list(coeffs)
        if order is None:
            order = valuation + len(cs)
        cs = cs[: max(order - valuation, 0)]
        while cs and cs[0] == 0:
            cs.pop(0)
            valuation += 1
        while cs and cs[-1] == 0:
            cs.pop()
        if not cs:
            valuation = order
        self.coeffs = tuple(cs)
        self.valuation = valuation
        self.order = order

    # constructors
    @classmethod
    def zero(cls, order: int) -> "LaurentSeries":
        return cls((), order, order)

    @classmethod
    def constant(cls, c, order: int) -> "LaurentSeries":
        return cls([c], 0, order)

    @classmethod
    def monomial(cls, k: int, order: int, c=1) -> "LaurentSeries":
        return cls([c], k, order)

    @classmethod
    def from_poly(cls, p: UniPoly, order: int) -> "LaurentSeries":
        return cls(p.coeffs, 0, order)

    # queries
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def precision(self) -> int:
        """Relative precision: number of known terms from the valuation on."""
        return self.order - self.valuation

    def coefficient(self, k: int):
        if k >= self.order:
            raise PrecisionExhausted(f"coefficient x^{k} requested beyond truncation O(x^{self.order})")
        idx = k - self.valuation
        if 0 <= idx < len(self.coeffs):
            return self.coeffs[idx]
        return 0

    def residue(self):
        return self.coefficient(-1)

    def lead(self):
        if not self.coeffs:
            raise DivisionByZeroSeries("series is zero to its truncation order")
        return self.coeffs[0]

    def __repr__(self):
        return f"LaurentSeries({list(self.coeffs)!r}, valuation={self.valuation}, order={self.order})"

    def __eq__(self, other):
        if not isinstance(other, LaurentSeries):
            return NotImplemented
        return (self.coeffs, self.valuation, self.order) == (other.coeffs, other.valuation, other.order)

    def __hash__(self):
        return hash((self.coeffs, self.valuation, self.order))

    def strip(self, rel_tol: float) -> "LaurentSeries":
        """Drop leading coefficients that are numerically zero.

        A coefficient counts as zero when its magnitude is at most ``rel_tol``
        times the largest magnitude in the series.  Exact coefficients are never
        dropped unless they are exactly zero.
        """
        if not self.coeffs:
            return self
        scale = max(_abs(c) for c in self.coeffs)
        k = 0
        while k < len(self.coeffs):
            c = self.coeffs[k]
            if isinstance(c, Fraction) or _abs(c) > rel_tol * scale:
                break
            k += 1
        if k == 0:
            return self
        return LaurentSeries(self.coeffs[k:], self.valuation + k, self.order)

    def truncate(self, order: int) -> "LaurentSeries":
        return LaurentSeries(self.coeffs, self.valuation, min(order, self.order))

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc * x ** self.valuation

    # ring operations
    def __add__(self, other):
        if not isinstance(other, LaurentSeries):
            if other == 0:
                return self
            other = LaurentSeries([other], 0, self.order if self.order > 0 else 1)
        order = min(self.order, other.order)
        v = min(self.valuation, other.valuation)
        out = [0] * max(order - v, 0)
        for s in (self, other):
            off = s.valuation - v
            for k, c in enumerate(s.coeffs):
                if off + k < len(out):
                    out[off + k] = out[off + k] + c
        return LaurentSeries(out, v, order)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries([-c for c in self.coeffs], self.valuation, self.order)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, LaurentSeries):
            if other == 0:
                return LaurentSeries.zero(self.order)
            return LaurentSeries([c * other for c in self.coeffs], self.valuation, self.order)
        v = self.valuation + other.valuation
        order = min(self.order + other.valuation, other.order + self.valuation)
        n = max(order - v, 0)
        a, b = self.coeffs[:n], other.coeffs[:n]
        out = [0] * n
        for i, ca in enumerate(a):
            lim = n - i
            for j, cb in enumerate(b[:lim]):
                out[i + j] += ca * cb
        return LaurentSeries(out, v, order)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            return self.reciprocal() ** (-n)
        if n == 0:
            return LaurentSeries([1], 0, max(self.precision, 1))
        result = self
        for _ in range(n - 1):
            result = result * self
        return result

    def reciprocal(self) -> "LaurentSeries":
        if not self.coeffs:
            raise DivisionByZeroSeries("reciprocal of a series that is zero to its truncation order")
        n = self.precision
        a = self.coeffs
        inv0 = Fraction(1, a[0]) if isinstance(a[0], int) else 1 / a[0]
        out = [inv0]
        for k in range(1, n):
            acc = 0
            for j in range(1, min(k, len(a) - 1) + 1):
                acc += a[j] * out[k - j]
            out.append(-acc * inv0)
        return LaurentSeries(out, -self.valuation, n - self.valuation)

    def __truediv__(self, other):
        if isinstance(other, LaurentSeries):
            return self * other.reciprocal()
        if other == 0:
            raise DivisionByZeroSeries("division of a series by zero")
        if isinstance(other, int):
            other = Fraction(other)
        return LaurentSeries([c / other for c in self.coeffs], self.valuation, self.order)

    def __rtruediv__(self, other):
        return self.reciprocal() * other

    # calculus
    def derivative(self) -> "LaurentSeries":
        out = [(self.valuation + k) * c for k, c in enumerate(self.coeffs)]
        return LaurentSeries(out, self.valuation - 1, self.order - 1)

    def antiderivative(self) -> "LaurentSeries":
        """Term-wise integral with zero constant term.

        Raises :class:`DegenerateInput` when the ``x^-1`` coefficient is
        nonzero, since its integral is not a Laurent series.
        """
        out = []
        for k, c in enumerate(self.coeffs):
            e = self.valuation + k
            if e == -1:
                if c != 0:
                    raise DegenerateInput("series has a nonzero x^-1 term; no Laurent antiderivative")
                out.append(0)
                continue
            out.append(c / Fraction(e + 1) if isinstance(c, (int, Fraction)) else c / (e + 1))
        if not out:
            return LaurentSeries.zero(self.order + 1)
        return LaurentSeries(out, self.valuation + 1, self.order + 1)

    def compose(self, inner: "LaurentSeries") -> "LaurentSeries":
        """``self(inner(x))`` for a power series ``inner`` with positive valuation."""
        if inner.is_zero() or inner.valuation < 1:
            raise DegenerateInput("inner series must have positive valuation")
        # truncating self costs O(inner^order); the products track the rest
        order = inner.valuation * self.order
        terms = []
        power = inner ** self.valuation if self.valuation else None
        for k, c in enumerate(self.coeffs):
            e = self.valuation + k
            if e == 0:
                terms.append(LaurentSeries([c], 0, order))
            else:
                terms.append(power * c)
            # advance power to inner^(e+1); inner^0 is kept exact
            if e + 1 == 0:
                power = None
            elif e == 0:
                power = inner
            else:
                power = power * inner
        result = LaurentSeries.zero(order)
        for t in terms:
            result = result + t
        return result.truncate(order)
