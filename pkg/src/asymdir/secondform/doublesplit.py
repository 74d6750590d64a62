"""Double-split deformations: ``II`` evaluates to ``2 pi i deg L``."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from ..curvemodels import FiberPoint, PlaneCurveModel, TrigonalModel, curve_poly
from ..curvemodels.plane import XYZ, cross, line_section, line_vector
from ..errors import InvalidParams, NonReducedFiber, TangentLine
from ..localexpand import RatDifferential, RatFun
from ..localexpand.residue import residue_at_point
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, format_polynomial, to_complex
from .split import Value, split_deformation

RECHOICES = 5


@dataclass
class DoubleSplitResult:
    value: Value
    kind: str
    support: int
    pencil: dict
    rechoices: list[dict] = field(default_factory=list)

    @property
    def invariance_deviation(self) -> float:
        n = self.value.normalized
        return max((abs(r["normalized"] - n) for r in self.rechoices), default=0.0)

    def to_json(self) -> dict:
        return {
            "kind": self.kind,
            "value": self.value.to_json(),
            "support_size": self.support,
            "pencil": self.pencil,
            "rechoices": [{"pencil": r["pencil"],
                           "normalized": {"re": r["normalized"].real, "im": r["normalized"].imag}}
                          for r in self.rechoices],
            "invariance_deviation": self.invariance_deviation,
        }


def _pair_value(pairs, curve, points, ctx) -> Value:
    """``-2 pi i sum_D Res(g1 dg2 - g3 dg4)``; an absent second pair is the constant pair."""
    total = 0j
    for sign, g_odd, g_even in pairs:
        diff = RatDifferential.a_db(g_odd, g_even)
        for p in points:
            total += sign * to_complex(residue_at_point(diff, curve, p, ctx)[0])
    return Value.from_normalized(-total)


# trigonal models: the pencil is a pair of points a, b of the line; x' = (x - a)/(x - b)

def _trigonal_pencil(a, b) -> RatFun:
    x = Poly.var("x")
    if b is None:
        return RatFun(x - a)
    if a == b:
        raise InvalidParams("pencil members must be distinct")
    return RatFun(x - a, x - b)


def trigonal_double_split(model, a=0, b=None, ctx: NumCtx = DEFAULT_CTX) -> Value:
    zeta = split_deformation(model, ctx, x0=a)
    g = _trigonal_pencil(a, b)
    return _pair_value([(1, g, g.inverse())], model, zeta.D, ctx)


# plane curves: D = l1 . C and the ratios l1/l2, l2/l1

def _local_chart(F: Poly, point) -> tuple[Poly, tuple[int, int], FiberPoint]:
    """Affine chart around ``point`` with the branch parameter as first variable."""
    k = max(range(3), key=lambda i: abs(point[i]))
    rest = [i for i in range(3) if i != k]
    G = F.dehomogenize(k)
    q = tuple(point[i] / point[k] for i in rest)
    d0, d1 = abs(complex(G.diff(0)(*q))), abs(complex(G.diff(1)(*q)))
    order = (0, 1) if d1 >= d0 else (1, 0)
    G = G.permute(order, ("x", "y"))
    idx = (rest[order[0]], rest[order[1]])
    return G, (k, *idx), FiberPoint(q[order[0]], q[order[1]])


def _line_in_chart(line: Poly, chart) -> Poly:
    k, i, j = chart
    v = line_vector(line)
    x, y = Poly.var("x"), Poly.var("y")
    return x * v[i] + y * v[j] + Poly.const(v[k])


def _off_curve(F: Poly, l1: Poly, l2: Poly, ctx: NumCtx) -> bool:
    p = cross(line_vector(l1), line_vector(l2))
    m = max(abs(complex(c)) for c in p)
    q = [complex(c) / m for c in p]
    return abs(complex(F(*q))) > ctx.zero_tol * F.scale()


def plane_double_split(curve: PlaneCurveModel, l2: Poly | None = None, ctx: NumCtx = DEFAULT_CTX) -> Value:
    if len(curve.lines) < 2:
        raise InvalidParams("a plane double split needs at least two lines")
    l1 = curve.lines[0]
    l2 = curve.lines[1] if l2 is None else l2
    for other in [l2, *curve.lines[2:]]:
        if not _off_curve(curve.F, l1, other, ctx):
            raise InvalidParams("auxiliary lines meet on the curve")
    sec = curve.sections[0] if curve.sections else line_section(curve.F, l1, ctx)
    if not sec.transversal:
        raise TangentLine("first line is tangent to the curve")
    total = 0j
    for pt in sec.points:
        G, chart, fp = _local_chart(curve.F, pt)
        a, b = _line_in_chart(l1, chart), _line_in_chart(l2, chart)
        diff = RatDifferential.a_db(RatFun(a, b), RatFun(b, a))
        total += to_complex(residue_at_point(diff, G, fp, ctx)[0])
    return Value.from_normalized(-total)


def _random_line(rng, l1: Poly) -> Poly:
    while True:
        c = [int(v) for v in rng.integers(-9, 9, size=3, endpoint=True)]
        if any(cross(line_vector(l1), c)):
            X, Y, Z = (Poly.var(v, XYZ) for v in XYZ)
            return X * c[0] + Y * c[1] + Z * c[2]


def double_split_check(curve, pencil: dict | None = None, ctx: NumCtx = DEFAULT_CTX,
                       rechoices: int = RECHOICES, seed: int = 0) -> DoubleSplitResult:
    """Evaluate the double-split pairing and repeat it for ``rechoices``
    random choices of the second pencil member (or second line)."""
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, 0x5D])))
    pencil = dict(pencil or {})
    if isinstance(curve, PlaneCurveModel):
        v = plane_double_split(curve, ctx=ctx)
        out = DoubleSplitResult(v, "plane", len(curve.sections[0].points),
                                {"lines": [_fmt_line(l) for l in curve.lines]})
        done = 0
        while done < rechoices:
            l2 = _random_line(rng, curve.lines[0])
            try:
                w = plane_double_split(curve, l2, ctx)
            except InvalidParams:
                continue
            out.rechoices.append({"pencil": {"l2": _fmt_line(l2)}, "normalized": w.normalized})
            done += 1
        return out
    if not isinstance(curve, TrigonalModel) and not isinstance(curve, Poly):
        raise InvalidParams("double split needs a trigonal model or a plane curve")
    a = Fraction(pencil.get("a", 0))
    b = pencil.get("b")
    b = None if b is None else Fraction(b)
    v = trigonal_double_split(curve, a, b, ctx)
    out = DoubleSplitResult(v, "trigonal", curve_poly(curve).degree_y,
                            {"a": str(a), "b": None if b is None else str(b)})
    done = 0
    while done < rechoices:
        nb = Fraction(int(rng.integers(-50, 50, endpoint=True)), int(rng.integers(1, 20, endpoint=True)))
        if nb == a:
            continue
        try:
            w = trigonal_double_split(curve, a, nb, ctx)
        except NonReducedFiber:
            continue
        out.rechoices.append({"pencil": {"a": str(a), "b": str(nb)}, "normalized": w.normalized})
        done += 1
    return out


def _fmt_line(l: Poly) -> str:
    return format_polynomial(l)
