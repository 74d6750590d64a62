"""Rank-4 quadrics from pencils of the residual bundle and ``II`` on them."""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

import numpy as np

from ..curvemodels import M_TAGS, Tag, curve_poly
from ..curvemodels.sections import S1, S2, canonical_ratio
from ..errors import I2MembershipFailed
from ..localexpand import RatFun
from ..numkernel import roots_univariate
from .split import SplitDeformation, Value, w_pairing

# the three quadrics on which II of the standard split deformation can be nonzero,
# as pencils (tau1, tau2) of M
GAMMA_PENCILS = {
    6: ((Tag(0, 0, 0, 1), Tag(1, 0, 2, 0)), (Tag(0, 0, 0, 1), Tag(1, 1, 1, 0)),
        (Tag(1, 1, 1, 0), Tag(1, 0, 2, 0))),
    7: ((Tag(0, 0, 0, 1), Tag(0, 0, 3, 0)), (Tag(0, 0, 0, 1), Tag(0, 1, 2, 0)),
        (Tag(0, 1, 2, 0), Tag(0, 0, 3, 0))),
    5: ((Tag(0, 0, 0, 1), Tag(1, 0, 1, 0)), (Tag(1, 1, 0, 0), Tag(0, 0, 0, 1)),
        (Tag(1, 1, 0, 0), Tag(1, 0, 1, 0))),
}

I2_POINTS = 20
I2_TOL = 1e-9


def _ratfun(tag: Tag) -> RatFun:
    return RatFun(*canonical_ratio(tag))


@dataclass(frozen=True)
class QuadricRank4:
    """``a1 . b2 - a2 . b1`` with ``a_i = s1 tau_i`` and ``b_i = s2 tau_i``.

    ``pairs`` lists ``(coefficient, g_odd, g_even)``: the quadric is
    ``sum coefficient * omega_odd . omega_even`` with ``g = omega / (s1 t)``.
    """

    name: str
    tags: tuple[Tag, Tag, Tag, Tag]
    pairs: tuple[tuple[int, RatFun, RatFun], ...]

    @classmethod
    def from_pencil(cls, tau1: Tag, tau2: Tag, name: str = "") -> "QuadricRank4":
        a1, a2, b1, b2 = S1 * tau1, S1 * tau2, S2 * tau1, S2 * tau2
        pairs = ((1, _ratfun(a1), _ratfun(b2)), (-1, _ratfun(a2), _ratfun(b1)))
        label = name or f"({a1.name}).({b2.name}) - ({a2.name}).({b1.name})"
        return cls(label, (a1, a2, b1, b2), pairs)

    @property
    def display(self) -> str:
        a1, a2, b1, b2 = self.tags
        return f"({a1.name}).({b2.name}) - ({a2.name}).({b1.name})"


def gamma_quadrics(genus: int) -> list[QuadricRank4]:
    return [QuadricRank4.from_pencil(t1, t2, f"Gamma{k + 1}")
            for k, (t1, t2) in enumerate(GAMMA_PENCILS[genus])]


def pencil_quadrics(genus: int) -> list[QuadricRank4]:
    """One quadric per pair of basis sections of ``M``."""
    return [QuadricRank4.from_pencil(t1, t2) for t1, t2 in combinations(M_TAGS[genus], 2)]


def random_curve_points(curve, count: int, seed: int = 0) -> list[tuple[complex, complex]]:
    P = curve_poly(curve)
    rng = np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, 0x12])))
    pts = []
    while len(pts) < count:
        x = complex(rng.normal(), rng.normal())
        fiber = P.specialize(0, x)
        if fiber.degree < P.degree_y:
            continue
        for r in roots_univariate(fiber):
            pts.append((x, complex(r.value)))
    return pts[:count]


def i2_membership(curve, quadric: QuadricRank4, count: int = I2_POINTS) -> float:
    """Largest relative value of ``g_a1 g_b2 - g_a2 g_b1`` over random curve points."""
    (_, ga1, gb2), (_, ga2, gb1) = quadric.pairs
    worst = 0.0
    for x, y in random_curve_points(curve, count):
        u, v = ga1(x, y) * gb2(x, y), ga2(x, y) * gb1(x, y)
        worst = max(worst, abs(u - v) / max(abs(u), abs(v), 1.0))
    return worst


def second_form(zeta: SplitDeformation, quadric: QuadricRank4, check_membership: bool = True) -> Value:
    """``II(Q)(zeta . zeta) = - sum coefficient * w(zeta, omega_odd, omega_even)``."""
    if check_membership:
        dev = i2_membership(zeta.curve, quadric)
        if dev > I2_TOL:
            raise I2MembershipFailed(f"{quadric.name}: quadric identity fails on the curve ({dev:.2e})")
    total = 0j
    for coef, g_odd, g_even in quadric.pairs:
        total += coef * w_pairing(zeta, g_odd, g_even).raw
    return Value(-total)
