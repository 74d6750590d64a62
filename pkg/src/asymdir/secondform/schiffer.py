"""Schiffer variations at a point: the Wronskian factorization of ``mu_2``."""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations

from ..curvemodels import curve_poly
from ..curvemodels.sections import M_TAGS, m_polynomial
from ..errors import InvalidParams, PointNotOnCurve
from ..localexpand import RatFun
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, to_complex
from .split import SplitDeformation, Value, pairing_residues

# a Wronskian counts as nonvanishing above this (all factors are unit-normalized)
PENCIL_THRESHOLD = 1e-6


@dataclass(frozen=True)
class SchifferResult:
    value: complex
    is_asymptotic: bool
    w_L: complex
    w_M: complex
    pencil: tuple[str, str]

    def to_json(self) -> dict:
        return {"value": {"re": self.value.real, "im": self.value.imag},
                "is_asymptotic": self.is_asymptotic,
                "wronskian_L": {"re": self.w_L.real, "im": self.w_L.imag},
                "wronskian_M": {"re": self.w_M.real, "im": self.w_M.imag},
                "pencil": list(self.pencil)}


def curve_residual(P: Poly, x0: complex, y0: complex) -> float:
    """``|P(p)|`` relative to the size of its monomials at ``p``."""
    scale = sum(abs(complex(c)) * abs(x0) ** i * abs(y0) ** j for (i, j), c in P.terms.items())
    return abs(complex(P(x0, y0))) / (scale or 1.0)


def _tangent_derivative(h: Poly, Px: complex, Py: complex, norm: float, x0, y0) -> complex:
    return (complex(h.diff(0)(x0, y0)) * Py - complex(h.diff(1)(x0, y0)) * Px) / norm


def schiffer_mu2_test(model, p, ctx: NumCtx = DEFAULT_CTX) -> SchifferResult:
    """``mu_2`` of the rank-4 quadric of ``L`` and a complementary pencil at ``p``.

    The factor from ``L = <s1, s2>`` is the Wronskian of ``x`` along the curve,
    which vanishes exactly where ``P_y`` does.  The complementary pencil is the
    first pair of ``M`` sections (in basis order) whose Wronskian at ``p`` is
    nonzero.
    """
    genus = getattr(model, "genus", None)
    if genus not in (6, 7):
        raise InvalidParams("the Schiffer test needs a trigonal model of genus 6 or 7")
    P = curve_poly(model)
    x0, y0 = (to_complex(c) for c in p)
    if curve_residual(P, x0, y0) > ctx.zero_tol:
        raise PointNotOnCurve(f"P({x0}, {y0}) does not vanish")
    Px, Py = complex(P.diff(0)(x0, y0)), complex(P.diff(1)(x0, y0))
    norm = math.hypot(abs(Px), abs(Py))
    w_L = Py / norm
    tags = M_TAGS[genus]
    hs = [m_polynomial(t) for t in tags]
    best = None
    for i, j in combinations(range(len(tags)), 2):
        hi, hj = complex(hs[i](x0, y0)), complex(hs[j](x0, y0))
        di = _tangent_derivative(hs[i], Px, Py, norm, x0, y0)
        dj = _tangent_derivative(hs[j], Px, Py, norm, x0, y0)
        w = (hi * dj - hj * di) / max(1.0, abs(hi), abs(hj)) ** 2
        if best is None or abs(w) > abs(best[0]):
            best = (w, (tags[i].name, tags[j].name))
        if abs(w) > PENCIL_THRESHOLD:
            best = (w, (tags[i].name, tags[j].name))
            break
    w_M, pencil = best
    value = w_L * w_M
    return SchifferResult(value, abs(value) <= ctx.zero_tol * max(1.0, abs(w_M)), w_L, w_M, pencil)


def higher_schiffer_residue(zeta: SplitDeformation, g1: RatFun, g2: RatFun) -> Value:
    """``sum_i Res(f_i g1 d(f_i g2))`` over the support, with the jets of ``zeta``.

    The normalized part of the result is the bare residue sum.
    """
    return Value.from_normalized(sum(pairing_residues(zeta, g1, g2)))
