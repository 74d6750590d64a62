"""Rational differentials on the curve, their pullbacks to branches, and residues."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from ..curvemodels import FiberPoint, curve_poly, fiber_points, is_reduced
from ..errors import DivisionByZeroSeries, NonConvergentResidue, NonReducedFiber, PrecisionExhausted
from ..numkernel import DEFAULT_CTX, LaurentSeries, NumCtx, Poly, UniPoly, cluster_roots, poly_from_json, roots_univariate
from .branch import BranchSeries, branch_expansion, evaluate_on_branch

START_ORDER = 16


@dataclass(frozen=True)
class RatFun:
    num: Poly
    den: Poly = Poly.const(1)

    def __post_init__(self):
        if self.den.is_zero():
            raise ZeroDivisionError("rational function with zero denominator")

    @classmethod
    def parse(cls, num, den="1") -> "RatFun":
        return cls(poly_from_json(num), poly_from_json(den))

    @classmethod
    def from_json(cls, obj) -> "RatFun":
        if isinstance(obj, str):
            return cls.parse(obj)
        if not isinstance(obj, Mapping) or "num" not in obj:
            raise ValueError("rational function needs a 'num' entry")
        return cls.parse(obj["num"], obj.get("den", "1"))

    def __mul__(self, other: "RatFun") -> "RatFun":
        return RatFun(self.num * other.num, self.den * other.den)

    def inverse(self) -> "RatFun":
        return RatFun(self.den, self.num)

    def __call__(self, x, y):
        return self.num(x, y) / self.den(x, y)


@dataclass(frozen=True)
class RatDifferential:
    """``h dx`` (``A`` is ``h``, ``B`` is None) or ``A dB``."""

    A: RatFun
    B: RatFun | None = None

    @property
    def form(self) -> str:
        return "h_dx" if self.B is None else "A_dB"

    @classmethod
    def h_dx(cls, h: RatFun) -> "RatDifferential":
        return cls(h, None)

    @classmethod
    def a_db(cls, A: RatFun, B: RatFun) -> "RatDifferential":
        return cls(A, B)

    @classmethod
    def from_json(cls, obj) -> "RatDifferential":
        if not isinstance(obj, Mapping):
            raise ValueError("differential JSON must be an object")
        form = obj.get("form")
        if form == "h_dx":
            return cls.h_dx(RatFun.from_json(obj["h"]))
        if form == "A_dB":
            return cls.a_db(RatFun.from_json(obj["A"]), RatFun.from_json(obj["B"]))
        raise ValueError(f"unknown differential form {form!r}; expected h_dx or A_dB")


def _strip_cancelled(value: LaurentSeries, bound: LaurentSeries, ctx: NumCtx) -> LaurentSeries:
    """Drop leading coefficients that are rounding noise relative to ``bound``."""
    tol = ctx.series_zero_tol
    cs = list(value.coeffs)
    v = value.valuation
    while cs:
        b = abs(bound.coefficient(v)) if v < bound.order else 0
        if abs(cs[0]) > tol * b:
            break
        cs.pop(0)
        v += 1
    return LaurentSeries(cs, v, value.order)


def ratfun_series(f: RatFun, branch: BranchSeries, jet: UniPoly | None = None) -> LaurentSeries:
    """Series of ``jet(t) * f(x0 + t, y(t))`` along a branch."""
    ctx = branch.ctx
    num = _strip_cancelled(*evaluate_on_branch(f.num, branch, True), ctx)
    den = _strip_cancelled(*evaluate_on_branch(f.den, branch, True), ctx)
    if den.is_zero():
        raise DivisionByZeroSeries("denominator vanishes identically along the branch")
    with ctx.workprec():
        out = num * den.reciprocal()
        if jet is not None:
            out = out * LaurentSeries([ctx.convert(c) for c in jet.coeffs], 0, out.order)
    return out


def pullback(diff: RatDifferential, branch: BranchSeries, jet: UniPoly | None = None) -> LaurentSeries:
    """Coefficient series ``h(t)`` of the pullback ``h(t) dt``.

    With a ``jet`` ``f``, the differential ``f A d(f B)`` is pulled back
    instead (the form used for higher-order point deformations).
    """
    A = ratfun_series(diff.A, branch, jet)
    if diff.B is None:
        return A
    B = ratfun_series(diff.B, branch, jet)
    with branch.ctx.workprec():
        return A * B.derivative()


def residue_at_point(diff: RatDifferential, curve, point: FiberPoint, ctx: NumCtx = DEFAULT_CTX,
                     jet: UniPoly | None = None, orders=None):
    """Residue at one point and the truncation order at which it stabilized."""
    orders = orders or _orders(ctx)
    prev = None
    branch = None
    last_err = None
    for n in orders:
        branch = branch_expansion(curve, point, n, ctx, start=branch)
        try:
            r = pullback(diff, branch, jet).residue()
        except PrecisionExhausted as exc:
            last_err = exc
            continue
        if prev is not None and abs(r - prev) <= 1e-10 * (1 + abs(r)):
            return r, n
        prev = r
    if prev is None and last_err is not None:
        raise NonConvergentResidue(f"pullback never reaches x^-1 within order {orders[-1]}: {last_err}")
    raise NonConvergentResidue(f"residue not stable up to order {orders[-1]}")


def _orders(ctx: NumCtx) -> list[int]:
    out, n = [], START_ORDER
    while n <= ctx.series_cap:
        out.append(n)
        n *= 2
    return out or [ctx.series_cap]


def residue(diff: RatDifferential, branch_or_point, curve=None, ctx: NumCtx = DEFAULT_CTX,
            jet: UniPoly | None = None):
    """Residue (without the 2 pi i factor) at one unramified point.

    Accepts either a :class:`BranchSeries` (its curve and base point are
    reused) or a :class:`FiberPoint` together with ``curve``.  Truncation
    doubles from 16 until two consecutive values agree.
    """
    if isinstance(branch_or_point, BranchSeries):
        curve, point, ctx = branch_or_point.P, branch_or_point.base, branch_or_point.ctx
    else:
        point = branch_or_point
    return residue_at_point(diff, curve, point, ctx, jet)[0]


def residue_sum_over_fiber(diff: RatDifferential, curve, x0=0, ctx: NumCtx = DEFAULT_CTX,
                           jets: Mapping[int, UniPoly] | None = None):
    """Sum of residues over the (reduced) fiber ``x = x0``.

    Returns ``(total, per_point)`` with ``per_point`` a list of
    ``(FiberPoint, residue)`` in fiber order.
    """
    pts = fiber_points(curve, x0, ctx)
    if not is_reduced(pts):
        raise NonReducedFiber(f"fiber over x = {complex(x0)} is not reduced")
    per = []
    total = 0
    for i, p in enumerate(pts):
        jet = jets.get(i) if jets else None
        r = residue_at_point(diff, curve, p, ctx, jet)[0]
        per.append((p, r))
        total = total + r
    return total, per


# differentials h(x) dx with h rational in x alone

def _uni_series(p: UniPoly, order: int, ctx: NumCtx) -> LaurentSeries:
    return LaurentSeries([ctx.convert(c) for c in p.coeffs], 0, order)


def rational_residue_at(num: UniPoly, den: UniPoly, x0, ctx: NumCtx = DEFAULT_CTX, order: int = 32):
    """Residue of ``num/den dx`` at the finite point ``x0``."""
    with ctx.workprec():
        x0 = ctx.convert(x0)
        n = _uni_series(num.map_coeffs(ctx.convert).taylor_shift(x0), order, ctx)
        d = _uni_series(den.map_coeffs(ctx.convert).taylor_shift(x0), order, ctx)
        scale = max(float(abs(c)) for c in d.coeffs)
        d = d.strip(ctx.series_zero_tol * 1e3 if scale else 0)
        return (n * d.reciprocal()).residue()


def rational_residue_at_infinity(num: UniPoly, den: UniPoly, ctx: NumCtx = DEFAULT_CTX, order: int = 32):
    """Residue at ``x = infinity`` of ``num/den dx`` via ``x = 1/u``:
    ``h(1/u) * (-1/u^2) du``."""
    with ctx.workprec():
        rn = LaurentSeries([ctx.convert(c) for c in reversed(num.coeffs)], 0, order)
        rd = LaurentSeries([ctx.convert(c) for c in reversed(den.coeffs)], 0, order)
        shift = den.degree - num.degree - 2
        h = rn * rd.reciprocal() * LaurentSeries([-1], shift, order + shift)
        return h.residue()


def rational_residues(num: UniPoly, den: UniPoly, ctx: NumCtx = DEFAULT_CTX):
    """Residues of ``num/den dx`` at the distinct roots of ``den`` and at infinity."""
    values = [r.value for r in roots_univariate(den, ctx)] if den.degree >= 1 else []
    poles = [values[g[0]] for g in cluster_roots(values, ctx.cluster_tol)]
    finite = [(p, rational_residue_at(num, den, p, ctx)) for p in poles]
    return finite, rational_residue_at_infinity(num, den, ctx)

