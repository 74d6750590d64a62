"""Genus of the curve from the ramification of its degree-``n`` projection ``x``."""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from ..errors import WildModel
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, UniPoly, cluster_roots, format_scalar, roots_univariate
from .fibers import curve_poly
from .monodromy import branch_centers, infinity_monodromy, local_monodromy


def infinity_chart(P: Poly) -> dict:
    """Weighted chart ``x = 1/u, y = v/u^m`` with the smallest ``m`` that keeps
    every fiber point over ``u = 0`` at finite ``v``.

    Returns ``m``, the chart polynomial's fiber over ``u = 0`` (coefficients
    in ``v``, low to high) and its root multiplicities.
    """
    cs = P.coeffs_in(1)
    n = len(cs) - 1
    dn = cs[n].degree
    m = 0
    for j, c in enumerate(cs[:-1]):
        if not c.is_zero():
            m = max(m, ceil(Fraction(c.degree - dn, n - j)))
    K = dn + n * m
    # coefficient of v^j at u = 0 is the x^(K - m j) coefficient of c_j
    fiber = []
    for j, c in enumerate(cs):
        k = K - m * j
        fiber.append(c.coeffs[k] if 0 <= k < len(c.coeffs) else Fraction(0))
    v_fiber = UniPoly(fiber, "v")
    mults = []
    if v_fiber.degree >= 1:
        values = [r.value for r in roots_univariate(v_fiber)]
        mults = sorted((len(g) for g in cluster_roots(values, 1e-7)), reverse=True)
    return {"m": m, "fiber_at_u0": [format_scalar(c) for c in fiber],
            "fiber_multiplicities": mults}


def genus_riemann_hurwitz(curve, ctx: NumCtx = DEFAULT_CTX) -> tuple[int, dict]:
    """Genus from ``2g - 2 = -2n + R`` for the degree-``n`` map ``x``.

    ``R`` adds ``n - (number of cycles)`` of the local monodromy over every
    finite branch point and over ``x = infinity``.  Raises
    :class:`WildModel` when tracking fails or ``R`` has the wrong parity.
    """
    P = curve_poly(curve)
    n = P.degree_y
    centers = branch_centers(P, ctx)
    finite = []
    for c in centers:
        pattern = local_monodromy(P, c)
        contrib = n - len(pattern)
        if contrib:
            finite.append({"x": [c.x.real, c.x.imag], "pattern": list(pattern),
                           "contribution": contrib})
    inf_pattern, radius = infinity_monodromy(P, centers)
    inf_contrib = n - len(inf_pattern)
    finite_total = sum(f["contribution"] for f in finite)
    R = finite_total + inf_contrib
    twice = -2 * n + R + 2
    if twice % 2 or twice < 0:
        raise WildModel(f"total ramification {R} gives non-integral or negative genus")
    simple = all(f["pattern"] == [2] + [1] * (n - 2) for f in finite)
    cert = {
        "method": "monodromy",
        "degree": n,
        "candidates": len(centers),
        "finite_branch_points": len(finite),
        "finite_ramification": finite_total,
        "all_finite_simple": simple,
        "infinity_pattern": list(inf_pattern),
        "infinity_contribution": inf_contrib,
        "infinity_loop_radius": radius,
        "infinity_chart": infinity_chart(P),
        "total_ramification": R,
    }
    return twice // 2, cert
