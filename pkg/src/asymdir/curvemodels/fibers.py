"""Fibers of the projection ``(x, y) -> x`` and its branch points."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import DegenerateFiber, DegenerateInput
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, cluster_roots, discriminant_y, roots_univariate
from .monodromy import local_monodromy, branch_centers


@dataclass(frozen=True)
class FiberPoint:
    x0: complex
    y0: complex
    multiplicity: int = 1
    is_x_ramified: bool = False

    @property
    def point(self) -> tuple:
        return (self.x0, self.y0)


@dataclass(frozen=True)
class BranchPoint:
    x_branch: complex
    pattern: tuple[int, ...]
    # (y, ramification index) for the fiber points with index > 1
    ramified: tuple[tuple[complex, int], ...] = ()

    @property
    def local_multiplicities(self) -> tuple[int, ...]:
        return self.pattern


def curve_poly(curve) -> Poly:
    return curve if isinstance(curve, Poly) else curve.P


def fiber_points(curve, x0, ctx: NumCtx = DEFAULT_CTX) -> list[FiberPoint]:
    """Points of the curve over ``x = x0``, clustered with multiplicity.

    A fiber with a point of multiplicity > 1 is returned as is; callers that
    need a reduced fiber check :func:`is_reduced`.
    """
    P = curve_poly(curve)
    fiber = P.specialize(0, x0)
    deg = P.degree_y
    lc_x = P.coeffs_in(1)[-1]
    scale = max(lc_x.one_norm(), 1.0)
    if fiber.degree < deg or abs(complex(lc_x(x0))) <= ctx.zero_tol * scale:
        raise DegenerateFiber(f"leading y-coefficient vanishes at x = {complex(x0)}")
    roots = roots_univariate(fiber, ctx)
    values = [r.value for r in roots]
    out = []
    Py = P.diff(1)
    py_scale = max(Py.scale(), 1.0)
    for group in cluster_roots(values, ctx.cluster_tol):
        y0 = sum(values[i] for i in group) / len(group)
        m = len(group)
        ramified = m > 1 or abs(complex(Py(ctx.convert(x0), y0))) <= ctx.zero_tol * py_scale
        out.append(FiberPoint(ctx.convert(x0), y0, m, ramified))
    return out


def is_reduced(points: list[FiberPoint]) -> bool:
    return all(p.multiplicity == 1 for p in points)


def _refine_double_point(P: Poly, x, y, steps: int = 8):
    """Newton on ``(P, P_y) = 0`` starting from an approximate simple branch point."""
    Px, Py = P.diff(0), P.diff(1)
    Pxy, Pyy = Py.diff(0), Py.diff(1)
    for _ in range(steps):
        f1, f2 = P(x, y), Py(x, y)
        a, b, c, d = Px(x, y), Py(x, y), Pxy(x, y), Pyy(x, y)
        det = a * d - b * c
        if det == 0:
            break
        dx = (d * f1 - b * f2) / det
        dy = (a * f2 - c * f1) / det
        x, y = x - dx, y - dy
        if abs(dx) + abs(dy) < 1e-15 * (1 + abs(x) + abs(y)):
            break
    return x, y


def ramification_data(curve, ctx: NumCtx = DEFAULT_CTX) -> list[BranchPoint]:
    """Finite branch points of the ``x``-projection with their cycle types.

    Candidates are the distinct roots of the ``y``-discriminant and of the
    leading coefficient.  The cycle type of the monodromy around each one
    gives the ramification pattern: ``(2, 1)`` for a simple branch point,
    ``(3,)`` for total ramification.  Candidates with trivial monodromy (for
    instance nodes) are dropped.
    """
    P = curve_poly(curve)
    if discriminant_y(P).is_zero():
        raise DegenerateInput("discriminant vanishes identically (repeated factor in y)")
    out = []
    for center in branch_centers(P, ctx):
        pattern = local_monodromy(P, center)
        if all(k == 1 for k in pattern):
            continue
        ramified = []
        if pattern[0] == 2 and P.coeffs_in(1)[-1](center.x) != 0:
            values = [r.value for r in roots_univariate(P.specialize(0, center.x), ctx)]
            i, j = min(((i, j) for i in range(len(values)) for j in range(i + 1, len(values))),
                       key=lambda ij: abs(values[ij[0]] - values[ij[1]]))
            x, y = _refine_double_point(P, complex(center.x), (values[i] + values[j]) / 2)
            ramified.append((y, 2))
            out.append(BranchPoint(x, pattern, tuple(ramified)))
            continue
        if pattern[0] == 3 and P.coeffs_in(1)[-1](center.x) != 0:
            values = [r.value for r in roots_univariate(P.specialize(0, center.x), ctx)]
            ramified.append((sum(values) / 3, 3))
        out.append(BranchPoint(center.x, pattern, tuple(ramified)))
    return out
