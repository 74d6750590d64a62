"""Numerical monodromy of the projection ``x`` by root tracking on circles.

Around each candidate branch point the roots of ``P(x, .)`` are followed
along a small circle; the induced permutation's cycle type is the local
ramification pattern.  A large circle enclosing every candidate gives the
behaviour over ``x = infinity``.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from ..errors import WildModel
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, UniPoly, cluster_roots, discriminant_y, roots_univariate

MIN_STEP = 1e-7


@dataclass(frozen=True)
class Center:
    x: complex
    radius: float
    multiplicity: int


def _simple_roots(p: UniPoly, ctx: NumCtx) -> list[tuple[complex, int]]:
    """Distinct roots with multiplicity; exact input is made squarefree first."""
    if p.degree < 1:
        return []
    out = []
    if all(isinstance(c, Fraction) for c in p.coeffs):
        rest = p
        k = 1
        # Yun-style peeling: roots of sqf(rest) appear with multiplicity >= k
        while rest.degree > 0:
            sqf = rest.squarefree_part()
            for r in roots_univariate(sqf, ctx):
                out.append((complex(r.value), k))
            rest = rest.exact_div(sqf)
            k += 1
        merged: dict[int, list] = {}
        values = [v for v, _ in out]
        for group in cluster_roots(values, 1e-9):
            v = values[group[0]]
            merged[group[0]] = [v, max(out[i][1] for i in group)]
        return [tuple(merged[k]) for k in sorted(merged)]
    values = [complex(r.value) for r in roots_univariate(p, ctx)]
    for group in cluster_roots(values, 1e-6):
        out.append((sum(values[i] for i in group) / len(group), len(group)))
    return out


def branch_centers(P: Poly, ctx: NumCtx = DEFAULT_CTX) -> list[Center]:
    """Distinct roots of disc_y(P) and of the leading y-coefficient, each with a
    circle radius that isolates it from the others."""
    disc = discriminant_y(P)
    lc = P.coeffs_in(1)[-1]
    cands = _simple_roots(disc, ctx) + _simple_roots(lc, ctx)
    values = [c for c, _ in cands]
    pts = []
    for group in cluster_roots(values, 1e-8):
        pts.append((values[group[0]], max(cands[i][1] for i in group)))
    pts.sort(key=lambda t: (round(t[0].real, 9), round(t[0].imag, 9)))
    out = []
    for i, (c, m) in enumerate(pts):
        others = [abs(c - d) for j, (d, _) in enumerate(pts) if j != i]
        nearest = min(others) if others else 1.0
        out.append(Center(c, 0.25 * min(nearest, 4.0), m))
    return out


class _Fiber:
    def __init__(self, P: Poly):
        # numpy coefficient arrays (highest degree first) per power of y
        self.cs = [np.array([complex(c) for c in reversed(u.coeffs)] or [0j])
                   for u in P.coeffs_in(1)]
        self.deg = len(self.cs) - 1

    def roots(self, x: complex) -> np.ndarray:
        vals = [np.polyval(c, x) for c in reversed(self.cs)]
        r = np.roots(vals)
        if len(r) != self.deg:
            raise WildModel(f"fiber degree drops on the tracking path near x = {x}")
        return r


def _match(prev: np.ndarray, new: np.ndarray):
    """Reorder ``new`` to follow ``prev`` if every root moved by less than a
    third of its distance to the nearest other root (before and after)."""
    n = len(prev)
    out = np.empty_like(new)
    used = set()
    for i in range(n):
        d = np.abs(new - prev[i])
        j = int(np.argmin(d))
        if j in used:
            return None
        near_new = min((abs(new[j] - new[k]) for k in range(n) if k != j), default=math.inf)
        near_old = min((abs(prev[i] - prev[k]) for k in range(n) if k != i), default=math.inf)
        if d[j] >= min(near_new, near_old) / 3:
            return None
        used.add(j)
        out[i] = new[j]
    return out


def track_loop(fiber: _Fiber, center: complex, radius: float) -> tuple[int, ...]:
    """Permutation of the fiber over ``center + radius`` after one positive loop."""
    start = fiber.roots(center + radius)
    current = start.copy()
    theta, step = 0.0, 2 * math.pi / 32
    while theta < 2 * math.pi:
        h = min(step, 2 * math.pi - theta)
        nxt = fiber.roots(center + radius * cmath.exp(1j * (theta + h)))
        matched = _match(current, nxt)
        if matched is None:
            step = h / 2
            if step < MIN_STEP:
                raise WildModel(f"root tracking stalls on the circle around x = {center}")
            continue
        current = matched
        theta += h
        step = min(step * 1.5, 2 * math.pi / 16)
    perm = []
    for z in current:
        d = np.abs(start - z)
        perm.append(int(np.argmin(d)))
    if sorted(perm) != list(range(len(start))):
        raise WildModel(f"monodromy around x = {center} is not a permutation")
    return tuple(perm)


def cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    seen = set()
    lengths = []
    for i in range(len(perm)):
        if i in seen:
            continue
        k, j = 0, i
        while j not in seen:
            seen.add(j)
            j = perm[j]
            k += 1
        lengths.append(k)
    return tuple(sorted(lengths, reverse=True))


def local_monodromy(P: Poly, center: Center) -> tuple[int, ...]:
    return cycle_type(track_loop(_Fiber(P), center.x, center.radius))


def infinity_monodromy(P: Poly, centers: list[Center]) -> tuple[tuple[int, ...], float]:
    reach = max((abs(c.x) + c.radius for c in centers), default=0.0)
    radius = 1.5 * reach + 1.0
    return cycle_type(track_loop(_Fiber(P), 0j, radius)), radius
