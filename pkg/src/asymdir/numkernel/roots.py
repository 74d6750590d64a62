"""Simultaneous root finding (Aberth–Ehrlich) with deterministic start points."""

from __future__ import annotations

import math
from typing import NamedTuple

from ..errors import ConvergenceFailure, DegenerateInput
from .poly import UniPoly
from .scalar import DEFAULT_CTX, NumCtx

MAX_ITER = 500


class Root(NamedTuple):
    value: complex
    residual: float


def _initial_points(cs, ctx: NumCtx):
    n = len(cs) - 1
    # radius from the geometric mean of the roots, nudged off the unit circle so
    # symmetric inputs (y^n + c) do not start on a root
    radius = (abs(cs[0]) / abs(cs[-1])) ** (1.0 / n) if abs(cs[0]) else 1.0
    radius = float(radius) * 1.07 or 1.0
    out = []
    for k in range(n):
        theta = 2 * math.pi * k / n + 0.4
        out.append(ctx.convert(radius) * ctx.expi(theta))
    return out


def _horner2(cs, z):
    """p(z) and p'(z) with coefficients low to high."""
    p = cs[-1]
    dp = 0 * p
    for c in reversed(cs[:-1]):
        dp = dp * z + p
        p = p * z + c
    return p, dp


def relative_residual(cs, z, norm: float) -> float:
    n = len(cs) - 1
    p, _ = _horner2(cs, z)
    return float(abs(p)) / (norm * max(1.0, float(abs(z))) ** n)


def _aberth(cs, ctx: NumCtx):
    n = len(cs) - 1
    zs = _initial_points(cs, ctx)
    tol = ctx.eps * 4
    for _ in range(MAX_ITER):
        moved = 0.0
        for i in range(n):
            z = zs[i]
            p, dp = _horner2(cs, z)
            if p == 0:
                continue
            ratio = p / dp if dp != 0 else None
            repulse = 0
            for j in range(n):
                if j != i:
                    diff = z - zs[j]
                    if diff != 0:
                        repulse += 1 / diff
            if ratio is None:
                step = -1 / repulse if repulse != 0 else ctx.convert(tol)
            else:
                denom = 1 - ratio * repulse
                step = ratio / denom if denom != 0 else ratio
            zs[i] = z - step
            moved = max(moved, float(abs(step)) / max(1.0, float(abs(z))))
        if moved <= tol:
            break
    return zs


def _polish(cs, z, norm: float, steps: int = 3):
    best, best_res = z, relative_residual(cs, z, norm)
    for _ in range(steps):
        p, dp = _horner2(cs, best)
        if dp == 0:
            break
        cand = best - p / dp
        res = relative_residual(cs, cand, norm)
        if res >= best_res:
            break
        best, best_res = cand, res
    return best, best_res


def _band_sort(roots: list[Root], band: float) -> list[Root]:
    """Sort by real part, then by imaginary part among roots whose real parts
    agree within ``band`` (relative)."""
    by_real = sorted(roots, key=lambda r: (float(r.value.real), float(r.value.imag)))
    out: list[Root] = []
    group: list[Root] = []
    for r in by_real:
        if group:
            ref = float(group[0].value.real)
            if abs(float(r.value.real) - ref) > band * (1 + abs(ref)):
                out.extend(sorted(group, key=lambda q: float(q.value.imag)))
                group = []
        group.append(r)
    out.extend(sorted(group, key=lambda q: float(q.value.imag)))
    return out


def roots_univariate(p: UniPoly, ctx: NumCtx = DEFAULT_CTX) -> list[Root]:
    """All roots of ``p`` with multiplicity, each with its relative residual.

    Roots are ordered by real part, ties (within the cluster tolerance) broken
    by imaginary part.  Raises :class:`ConvergenceFailure` when some residual
    stays above ``ctx.root_tol``.
    """
    if p.is_zero():
        raise DegenerateInput("cannot find roots of the zero polynomial")
    if p.degree < 1:
        raise DegenerateInput("polynomial has no roots (degree 0)")
    with ctx.workprec():
        cs = [ctx.convert(c) for c in p.coeffs]
        norm = float(sum(abs(c) for c in cs))
        zero = ctx.convert(0)
        found: list[Root] = []
        # exact zero roots are deflated before iterating
        k = 0
        while cs[k] == 0:
            k += 1
        found.extend(Root(zero, 0.0) for _ in range(k))
        cs = cs[k:]
        n = len(cs) - 1
        if n == 1:
            z = -cs[0] / cs[1]
            found.append(Root(z, relative_residual(cs, z, norm)))
        elif n > 1:
            for z in _aberth(cs, ctx):
                z, res = _polish(cs, z, norm)
                found.append(Root(z, res))
        worst = max((r.residual for r in found), default=0.0)
        if worst > ctx.root_tol:
            raise ConvergenceFailure(
                f"root residual {worst:.3e} exceeds tolerance {ctx.root_tol:.1e}")
        if ctx.native:
            found = [Root(complex(r.value), r.residual) for r in found]
        return _band_sort(found, ctx.cluster_tol)


def cluster_roots(values, tol: float) -> list[list[int]]:
    """Group indices of values lying within ``tol`` (relative to magnitude) of
    each other, single-linkage.  Groups are returned in first-index order."""
    n = len(values)
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for i in range(n):
        for j in range(i + 1, n):
            a, b = values[i], values[j]
            if float(abs(a - b)) <= tol * max(1.0, float(abs(a)), float(abs(b))):
                parent[find(j)] = find(i)
    groups: dict[int, list[int]] = {}
    for i in range(n):
        groups.setdefault(find(i), []).append(i)
    return sorted(groups.values(), key=lambda g: g[0])
