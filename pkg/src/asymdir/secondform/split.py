"""Split deformations supported on a fiber and their w-pairings."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from ..curvemodels import FiberPoint, curve_poly, fiber_points, is_reduced
from ..errors import HypothesisViolated, NonReducedFiber
from ..localexpand import RatDifferential, RatFun, branch_expansion, ratfun_series, residue_at_point
from ..numkernel import DEFAULT_CTX, NumCtx, UniPoly, to_complex

TWO_PI_I = 2j * math.pi


@dataclass(frozen=True)
class Value:
    """A complex quantity and its quotient by ``2 pi i``."""

    raw: complex

    @classmethod
    def from_normalized(cls, n) -> "Value":
        return cls(TWO_PI_I * to_complex(n))

    @property
    def normalized(self) -> complex:
        return self.raw / TWO_PI_I

    def to_json(self) -> dict:
        n = self.normalized
        return {"re": self.raw.real, "im": self.raw.imag,
                "normalized_by_2pi_i": {"re": n.real, "im": n.imag}}


@dataclass(frozen=True)
class SplitDeformation:
    """``zeta`` represented by ``omega = s1 t`` and the points ``D`` of
    ``div(s1)``; optional jets ``f_i`` (polynomials in ``x - x_i``) weight the
    points for higher-order combinations."""

    curve: object
    D: tuple[FiberPoint, ...]
    jets: Mapping[int, UniPoly] = field(default_factory=dict)
    ctx: NumCtx = DEFAULT_CTX

    @property
    def P(self):
        return curve_poly(self.curve)


def split_deformation(curve, ctx: NumCtx = DEFAULT_CTX, x0=0,
                      jets: Mapping[int, UniPoly] | None = None) -> SplitDeformation:
    """The standard split deformation: ``D`` is the fiber over ``x = x0``."""
    pts = fiber_points(curve, x0, ctx)
    if not is_reduced(pts):
        raise NonReducedFiber(f"D = fiber over x = {complex(x0)} is not reduced")
    return SplitDeformation(curve, tuple(pts), dict(jets or {}), ctx)


def point_deformation(curve, points: Sequence[FiberPoint], jets: Mapping[int, UniPoly] | None = None,
                      ctx: NumCtx = DEFAULT_CTX) -> SplitDeformation:
    """A deformation supported on chosen unramified points."""
    return SplitDeformation(curve, tuple(points), dict(jets or {}), ctx)


def _has_pole(f: RatFun, curve, p: FiberPoint, ctx: NumCtx) -> bool:
    branch = branch_expansion(curve, p, 8, ctx)
    return ratfun_series(f, branch).valuation < 0


def pairing_residues(zeta: SplitDeformation, g1: RatFun, g2: RatFun) -> list[complex]:
    """``Res_p(f g1 d(f g2))`` at each point of ``D``."""
    diff = RatDifferential.a_db(g1, g2)
    out = []
    for i, p in enumerate(zeta.D):
        r, _ = residue_at_point(diff, zeta.curve, p, zeta.ctx, zeta.jets.get(i))
        out.append(to_complex(r))
    return out


def w_pairing(zeta: SplitDeformation, g1: RatFun, g2: RatFun, check: bool = True) -> Value:
    """``2 pi i * sum_D Res(f g1 d(f g2))``.

    ``g1`` must be regular on ``D``; a pole raises
    :class:`HypothesisViolated`.
    """
    if check:
        for p in zeta.D:
            if _has_pole(g1, zeta.curve, p, zeta.ctx):
                raise HypothesisViolated(f"g1 has a pole at ({complex(p.x0)}, {complex(p.y0)})")
    return Value.from_normalized(sum(pairing_residues(zeta, g1, g2)))

