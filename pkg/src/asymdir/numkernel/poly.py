"""Dense univariate and sparse multivariate polynomials.

Coefficients are whatever supports field arithmetic: ``Fraction`` for exact
input, ``complex`` or ``mpmath.mpc`` once analytic data (roots, branch points)
enter.  Zero coefficients are never stored.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Sequence


def _is_zero(c) -> bool:
    return c == 0


def _exactify(c):
    if isinstance(c, int) and not isinstance(c, bool):
        return Fraction(c)
    return c


class UniPoly:
    """Dense polynomial in one variable; ``coeffs[k]`` multiplies ``var**k``."""

    __slots__ = ("coeffs", "var")

    def __init__(self, coeffs: Iterable = (), var: str = "x"):
        cs = [_exactify(c) for c in coeffs]
        while cs and _is_zero(cs[-1]):
            cs.pop()
        self.coeffs = tuple(cs)
        self.var = var

    @classmethod
    def from_roots(cls, roots: Iterable, var: str = "x") -> "UniPoly":
        p = cls([1], var)
        for r in roots:
            p = p * cls([-r, 1], var)
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def __call__(self, x):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if not self.coeffs:
            return other == 0
        return self.degree == 0 and self.coeffs[0] == other

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)!r}, var={self.var!r})"

    def _lift(self, other) -> "UniPoly":
        return other if isinstance(other, UniPoly) else UniPoly([other], self.var)

    def __add__(self, other):
        other = self._lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return UniPoly([u + v for u, v in zip(a, b)], self.var)

    __radd__ = __add__

    def __neg__(self):
        return UniPoly([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, UniPoly):
            return UniPoly([c * other for c in self.coeffs], self.var)
        if not self.coeffs or not other.coeffs:
            return UniPoly([], self.var)
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = UniPoly([1], self.var)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def derivative(self) -> "UniPoly":
        return UniPoly([k * c for k, c in enumerate(self.coeffs)][1:], self.var)

    def divmod(self, other: "UniPoly"):
        if other.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = list(self.coeffs)
        dq = other.degree
        q = [0] * max(len(rem) - dq, 0)
        lc = other.lc
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lc
            q[k - dq] = c
            if _is_zero(c):
                continue
            for j, b in enumerate(other.coeffs):
                rem[k - dq + j] -= c * b
        return UniPoly(q, self.var), UniPoly(rem[:dq], self.var)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        # the remainder is discarded: exact for rational data, rounding noise otherwise
        return self.divmod(other)[0]

    def taylor_shift(self, x0) -> "UniPoly":
        """Coefficients of p(x0 + t) as a polynomial in t."""
        cs = list(self.coeffs)
        n = len(cs)
        for i in range(n):
            for k in range(n - 2, i - 1, -1):
                cs[k] = cs[k] + x0 * cs[k + 1]
        return UniPoly(cs, self.var)

    def map_coeffs(self, f) -> "UniPoly":
        return UniPoly([f(c) for c in self.coeffs], self.var)

    def monic(self) -> "UniPoly":
        return self.map_coeffs(lambda c: c / self.lc) if self.coeffs else self

    def gcd(self, other: "UniPoly") -> "UniPoly":
        """Monic gcd by Euclid; meaningful for exact coefficients."""
        a, b = self, other
        while not b.is_zero():
            a, b = b, a.divmod(b)[1]
        return a.monic()

    def squarefree_part(self) -> "UniPoly":
        g = self.gcd(self.derivative())
        return self.exact_div(g).monic() if g.degree > 0 else self.monic()

    def one_norm(self) -> float:
        return float(sum(abs(c) for c in self.coeffs))


class Poly:
    """Sparse polynomial in ``len(vars)`` variables.

    ``terms`` maps exponent tuples to nonzero coefficients.  With two variables
    this is the bivariate type used for affine curve models ``P(x, y)``.
    """

    __slots__ = ("terms", "vars")

    def __init__(self, terms: Mapping[tuple, object] | None = None,
                 vars: Sequence[str] = ("x", "y")):
        self.vars = tuple(vars)
        clean = {}
        for e, c in (terms or {}).items():
            e = tuple(int(k) for k in e)
            if len(e) != len(self.vars):
                raise ValueError(f"exponent {e} does not match variables {self.vars}")
            if any(k < 0 for k in e):
                raise ValueError(f"negative exponent {e}")
            if not _is_zero(c):
                clean[e] = _exactify(c)
        self.terms = clean

    # construction helpers
    @classmethod
    def const(cls, c, vars=("x", "y")) -> "Poly":
        return cls({(0,) * len(vars): c}, vars)

    @classmethod
    def var(cls, name: str, vars=("x", "y")) -> "Poly":
        e = tuple(1 if v == name else 0 for v in vars)
        if sum(e) != 1:
            raise ValueError(f"{name!r} not among {vars}")
        return cls({e: 1}, vars)

    @classmethod
    def from_uni(cls, p: UniPoly, index: int = 0, vars=("x", "y")) -> "Poly":
        terms = {}
        for k, c in enumerate(p.coeffs):
            e = [0] * len(vars)
            e[index] = k
            terms[tuple(e)] = c
        return cls(terms, vars)

    @classmethod
    def from_y_coeffs(cls, polys: Sequence[UniPoly], vars=("x", "y")) -> "Poly":
        """Bivariate poly from ``sum_j polys[j](x) * y**j``."""
        terms = {}
        for j, p in enumerate(polys):
            for i, c in enumerate(p.coeffs):
                terms[(i, j)] = c
        return cls(terms, vars)

    # basic queries
    @property
    def nvars(self) -> int:
        return len(self.vars)

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self, index: int) -> int:
        if not self.terms:
            return -1
        return max(e[index] for e in self.terms)

    @property
    def degree_x(self) -> int:
        return self.degree(0)

    @property
    def degree_y(self) -> int:
        return self.degree(1)

    @property
    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=-1)

    def is_homogeneous(self, d: int | None = None) -> bool:
        degs = {sum(e) for e in self.terms}
        if not degs:
            return True
        return len(degs) == 1 and (d is None or degs == {d})

    def coeff(self, *exps):
        return self.terms.get(tuple(exps), 0)

    def scale(self) -> float:
        return float(sum(abs(c) for c in self.terms.values())) or 1.0

    def is_exact(self) -> bool:
        return all(isinstance(c, Fraction) for c in self.terms.values())

    def __repr__(self):
        return f"Poly({self.terms!r}, vars={self.vars!r})"

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.vars == other.vars and self.terms == other.terms
        return self == Poly.const(other, self.vars)

    def __hash__(self):
        return hash((self.vars, frozenset(self.terms.items())))

    # arithmetic
    def _lift(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.vars != self.vars:
                raise ValueError(f"variable mismatch {self.vars} vs {other.vars}")
            return other
        return Poly.const(other, self.vars)

    def __add__(self, other):
        other = self._lift(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return Poly(out, self.vars)

    __radd__ = __add__

    def __neg__(self):
        return Poly({e: -c for e, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return Poly({e: c * other for e, c in self.terms.items()}, self.vars)
        other = self._lift(other)
        out: dict = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return Poly(out, self.vars)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Poly):
            if other.total_degree > 0 or other.is_zero():
                raise ZeroDivisionError("only division by a nonzero constant is supported")
            other = other.terms[(0,) * other.nvars]
        if _is_zero(other):
            raise ZeroDivisionError("division by zero constant")
        other = _exactify(other)
        return Poly({e: c / other for e, c in self.terms.items()}, self.vars)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Poly.const(1, self.vars)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # calculus and evaluation
    def diff(self, index: int) -> "Poly":
        out = {}
        for e, c in self.terms.items():
            if e[index]:
                f = list(e)
                f[index] -= 1
                out[tuple(f)] = c * e[index]
        return Poly(out, self.vars)

    def __call__(self, *point):
        if len(point) != self.nvars:
            raise ValueError(f"expected {self.nvars} values")
        powers = [{} for _ in point]
        acc = 0
        for e, c in self.terms.items():
            term = c
            for i, k in enumerate(e):
                if k:
                    cache = powers[i]
                    if k not in cache:
                        cache[k] = point[i] ** k
                    term = term * cache[k]
            acc = acc + term
        return acc

    def coeffs_in(self, index: int) -> list[UniPoly]:
        """For two variables: ``[c_0, c_1, ...]`` with ``self = sum c_j * v**j``
        where ``v`` is variable ``index`` and ``c_j`` are UniPolys in the other."""
        if self.nvars != 2:
            raise ValueError("coeffs_in needs a bivariate polynomial")
        other = 1 - index
        deg = self.degree(index)
        buckets: list[dict] = [dict() for _ in range(deg + 1)]
        for e, c in self.terms.items():
            buckets[e[index]][e[other]] = c
        out = []
        for b in buckets:
            n = max(b, default=-1) + 1
            out.append(UniPoly([b.get(i, 0) for i in range(n)], self.vars[other]))
        return out

    def specialize(self, index: int, value) -> UniPoly:
        """Substitute ``value`` for variable ``index`` in a bivariate poly."""
        other = 1 - index
        cs = self.coeffs_in(other)
        return UniPoly([c(value) for c in cs], self.vars[other])

    def substitute(self, index: int, value) -> "Poly":
        """Substitute a constant for one variable, keeping the variable slot."""
        out: dict = {}
        for e, c in self.terms.items():
            f = list(e)
            k = f[index]
            f[index] = 0
            f = tuple(f)
            out[f] = out.get(f, 0) + c * value ** k
        return Poly(out, self.vars)

    def dehomogenize(self, index: int) -> "Poly":
        """Set variable ``index`` to 1 and drop it."""
        out: dict = {}
        vars = self.vars[:index] + self.vars[index + 1:]
        for e, c in self.terms.items():
            f = e[:index] + e[index + 1:]
            out[f] = out.get(f, 0) + c
        return Poly(out, vars)

    def permute(self, order: Sequence[int], vars: Sequence[str] | None = None) -> "Poly":
        """Reorder variables: new variable k is old variable ``order[k]``."""
        new_vars = tuple(vars) if vars is not None else tuple(self.vars[i] for i in order)
        return Poly({tuple(e[i] for i in order): c for e, c in self.terms.items()}, new_vars)

    def map_coeffs(self, f) -> "Poly":
        return Poly({e: f(c) for e, c in self.terms.items()}, self.vars)

    def monomials(self):
        """Terms sorted by exponent tuple (deterministic iteration order)."""
        return sorted(self.terms.items())


BivariatePoly = Poly
