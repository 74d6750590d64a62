"""Tangency of the split deformation to the trigonal and Maroni loci."""

from __future__ import annotations

from fractions import Fraction
from typing import NamedTuple

from ..curvemodels import ASYMPTOTIC
from ..errors import InvalidParams
from ..localexpand import RatDifferential, RatFun
from ..localexpand.residue import residue_at_point
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, to_complex
from ..secondform import SplitDeformation, cond_g, split_deformation, verdict_tolerance


class Tangency(NamedTuple):
    value: complex
    tangent: bool


class MaroniTangency(NamedTuple):
    value: Fraction | complex
    tangent: bool
    oracle: complex | None = None


def trigonal_tangency(model, zeta: SplitDeformation | None = None, ctx: NumCtx = DEFAULT_CTX) -> Tangency:
    """``zeta . Omega``, which reduces to ``sum g(p_i)``."""
    zeta = zeta or split_deformation(model, ctx)
    value = cond_g(zeta)
    return Tangency(value, abs(value) <= verdict_tolerance(zeta))


# (y/x) d(1/y); its residue sum over D is -psi7'(0)/psi7(0) on the asymptotic genus-6 family
_MARONI_ORACLE = RatDifferential.a_db(RatFun(Poly.var("y"), Poly.var("x")), RatFun(Poly.const(1), Poly.var("y")))


def maroni_oracle(model, ctx: NumCtx = DEFAULT_CTX) -> complex:
    zeta = split_deformation(model, ctx)
    total = sum(to_complex(residue_at_point(_MARONI_ORACLE, model, p, ctx)[0]) for p in zeta.D)
    return -total


def maroni_tangency(model, ctx: NumCtx = DEFAULT_CTX) -> MaroniTangency:
    """``psi7'(0) / psi7(0)``; zero exactly when the deformation is tangent to
    the Maroni locus.  The residue cross-check is attached for the asymptotic
    family, where the fiber over 0 is ``y^3 + psi7(0)``."""
    if getattr(model, "genus", None) != 6:
        raise InvalidParams("Maroni tangency is defined for the genus-6 families")
    psi7 = model.param("psi7")
    c0 = psi7(0)
    if c0 == 0:
        raise InvalidParams("psi7(0) must be nonzero")
    c1 = psi7.derivative()(0)
    value = Fraction(c1) / Fraction(c0) if isinstance(c0, (int, Fraction)) and isinstance(c1, (int, Fraction)) \
        else to_complex(c1) / to_complex(c0)
    oracle = maroni_oracle(model, ctx) if model.family == ASYMPTOTIC else None
    return MaroniTangency(value, abs(to_complex(value)) <= ctx.zero_tol, oracle)
