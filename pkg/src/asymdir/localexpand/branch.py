"""Power-series branches ``y(x)`` of ``P(x, y) = 0`` at unramified points."""

from __future__ import annotations

from dataclasses import dataclass

from ..curvemodels import FiberPoint, curve_poly
from ..errors import LiftingStall, RamifiedPoint
from ..numkernel import DEFAULT_CTX, LaurentSeries, NumCtx, Poly, UniPoly

RESIDUAL_TOL = 1e-9


@dataclass(frozen=True)
class BranchSeries:
    """``y = y_series(t)`` with ``t = x - x0``, valid to ``O(t^order)``."""

    base: FiberPoint
    y_series: LaurentSeries
    P: Poly
    ctx: NumCtx = DEFAULT_CTX

    @property
    def order(self) -> int:
        return self.y_series.order


class CurveLocal:
    """``P`` re-expanded around ``x0``: coefficient series of each power of ``y``.

    Evaluating a polynomial ``Q(x, y)`` along a branch also produces the same
    sum with all coefficients replaced by magnitudes, which bounds the
    rounding error and is used to recognise numerical cancellation.
    """

    def __init__(self, Q: Poly, x0, ctx: NumCtx):
        self.ctx = ctx
        self.shifted = []
        for u in Q.coeffs_in(1):
            cs = [ctx.convert(c) for c in u.coeffs]
            self.shifted.append(UniPoly(cs).taylor_shift(ctx.convert(x0)) if cs else UniPoly([]))

    def evaluate(self, Y: LaurentSeries, order: int, with_bound: bool = False):
        acc = LaurentSeries.zero(order)
        bound = LaurentSeries.zero(order)
        Yabs = LaurentSeries([abs(c) for c in Y.coeffs], Y.valuation, Y.order) if with_bound else None
        for u in reversed(self.shifted):
            term = LaurentSeries(u.coeffs, 0, order)
            acc = acc * Y + term if not acc.is_zero() else term
            if with_bound:
                tb = LaurentSeries([abs(c) for c in u.coeffs], 0, order)
                bound = bound * Yabs + tb if not bound.is_zero() else tb
        acc = acc.truncate(order)
        if with_bound:
            return acc, bound.truncate(order)
        return acc


def _pad(Y: LaurentSeries, order: int) -> LaurentSeries:
    return LaurentSeries(Y.coeffs, Y.valuation, order)


def branch_expansion(curve, point: FiberPoint, order: int = 16, ctx: NumCtx = DEFAULT_CTX,
                     start: BranchSeries | None = None) -> BranchSeries:
    """Newton–Hensel lifting ``Y <- Y - P(t, Y) / P_y(t, Y)`` with doubling precision.

    ``start`` continues a lower-order expansion of the same branch.  Raises
    :class:`RamifiedPoint` when ``P_y`` vanishes at the base point and
    :class:`LiftingStall` when the final residual is not small.
    """
    if order < 2:
        raise ValueError("branch order must be at least 2")
    P = curve_poly(curve)
    with ctx.workprec():
        x0, y0 = ctx.convert(point.x0), ctx.convert(point.y0)
        Py = P.diff(1)
        py0 = Py(x0, y0)
        if point.multiplicity > 1 or point.is_x_ramified or abs(py0) <= ctx.zero_tol * max(Py.scale(), 1.0):
            raise RamifiedPoint(f"point ({complex(x0)}, {complex(y0)}) is ramified for x")
        loc = CurveLocal(P, x0, ctx)
        dloc = CurveLocal(Py, x0, ctx)
        if start is not None and start.order < order:
            Y, n = start.y_series, start.order
        else:
            Y, n = LaurentSeries([y0], 0, 1), 1
        while n < order:
            n = min(2 * n, order)
            Y = _pad(Y, n)
            F = loc.evaluate(Y, n)
            D = dloc.evaluate(Y, n)
            Y = (Y - F * D.reciprocal()).truncate(n)
            Y = _pad(Y, n)
        residual, bound = loc.evaluate(Y, order, with_bound=True)
        worst = 0.0
        for k in range(order):
            b = float(abs(bound.coefficient(k))) if bound.order > k else 0.0
            r = float(abs(residual.coefficient(k)))
            if r > RESIDUAL_TOL * max(b, 1e-300) and r > 0:
                worst = max(worst, r / max(b, 1e-300))
        if worst > RESIDUAL_TOL:
            raise LiftingStall(f"branch residual {worst:.2e} at order {order}")
        return BranchSeries(point, Y, P, ctx)


def evaluate_on_branch(Q: Poly, branch: BranchSeries, with_bound: bool = False):
    """Series of ``Q(x0 + t, y(t))`` to the branch's order."""
    loc = CurveLocal(Q, branch.base.x0, branch.ctx)
    with branch.ctx.workprec():
        return loc.evaluate(branch.y_series, branch.order, with_bound)
