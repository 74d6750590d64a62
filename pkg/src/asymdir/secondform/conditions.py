"""The three asymptoticity conditions on the standard split deformation."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..localexpand import RatDifferential, RatFun
from ..localexpand.residue import residue_at_point
from ..numkernel import DEFAULT_CTX, NumCtx, Poly, to_complex
from .quadrics import gamma_quadrics, second_form
from .split import SplitDeformation, Value, split_deformation

ASYMPTOTIC = "asymptotic"
NOT_ASYMPTOTIC = "not_asymptotic"
INDETERMINATE = "indeterminate"

CONDITIONS = ("cond_g", "cond_g2", "cond_eqdg")

# II(Gamma_j) / (2 pi i) as a multiple of a condition
_GAMMA_RELATIONS = {
    6: (("cond_eqdg", -1), ("cond_g", -1), ("cond_g2", 1)),
    7: (("cond_eqdg", -1), ("cond_g", -1), ("cond_g2", 1)),
    5: (("cond_eqdg", -1), ("cond_g", 1), ("cond_g2", 1)),
}

_X = Poly.var("x")
_Y = Poly.var("y")
_ONE = Poly.const(1)


def fiber_ys(zeta: SplitDeformation) -> list[complex]:
    return [to_complex(p.y0) for p in zeta.D]


def cond_g(zeta: SplitDeformation) -> complex:
    """``sum g(p_i)`` with ``g = 1/y``."""
    return sum(1 / y for y in fiber_ys(zeta))


def cond_g2(zeta: SplitDeformation) -> complex:
    return sum(1 / y ** 2 for y in fiber_ys(zeta))


def cond_eqdg(zeta: SplitDeformation) -> complex:
    """``sum P_x / (y^2 P_y)`` over ``D``; equals ``sum Res dg/x``."""
    P = zeta.P
    Px, Py = P.diff(0), P.diff(1)
    total = 0j
    for p in zeta.D:
        x0, y0 = to_complex(p.x0), to_complex(p.y0)
        total += complex(Px(x0, y0)) / (y0 ** 2 * complex(Py(x0, y0)))
    return total


CLOSED_FORMS = {"cond_g": cond_g, "cond_g2": cond_g2, "cond_eqdg": cond_eqdg}

# the same sums as residues: g dx/x, g^2 dx/x and dg/x
ORACLE_DIFFERENTIALS = {
    "cond_g": RatDifferential.h_dx(RatFun(_ONE, _X * _Y)),
    "cond_g2": RatDifferential.h_dx(RatFun(_ONE, _X * _Y * _Y)),
    "cond_eqdg": RatDifferential.a_db(RatFun(_ONE, _X), RatFun(_ONE, _Y)),
}


def oracle_value(zeta: SplitDeformation, name: str) -> complex:
    diff = ORACLE_DIFFERENTIALS[name]
    return sum(to_complex(residue_at_point(diff, zeta.curve, p, zeta.ctx)[0]) for p in zeta.D)


def verdict_tolerance(zeta: SplitDeformation, zero_tol: float | None = None) -> float:
    base = zeta.ctx.zero_tol if zero_tol is None else zero_tol
    return base * (1 + sum(1 / abs(y) for y in fiber_ys(zeta)))


def classify(magnitude: float, tol: float) -> str:
    if magnitude <= tol:
        return ASYMPTOTIC
    if magnitude > 10 * tol:
        return NOT_ASYMPTOTIC
    return INDETERMINATE


@dataclass
class ConditionReport:
    genus: int
    family: str
    values: dict[str, Value]
    oracle_agreement: dict[str, float]
    tolerance: float
    zero_tol: float
    verdict: str
    fiber: list[complex] = field(default_factory=list)

    @property
    def asymptotic(self) -> bool:
        return self.verdict == ASYMPTOTIC

    @property
    def max_condition(self) -> float:
        return max(abs(self.values[k].raw) for k in CONDITIONS)

    def to_json(self) -> dict:
        return {
            "genus": self.genus,
            "family": self.family,
            "fiber": [{"re": y.real, "im": y.imag} for y in self.fiber],
            "values": {k: v.to_json() for k, v in self.values.items()},
            "oracle_agreement": dict(self.oracle_agreement),
            "tolerances": {"zero_tol": self.zero_tol, "verdict": self.tolerance},
            "verdict": self.verdict,
        }


def _deviation(a: complex, b: complex) -> float:
    return abs(a - b) / (1 + abs(a))


def asymptotic_conditions(model, ctx: NumCtx = DEFAULT_CTX, zeta: SplitDeformation | None = None,
                          check_membership: bool = True) -> ConditionReport:
    """Closed-form conditions, their series cross-checks, and ``II`` on the
    three distinguished quadrics.

    Condition values are the bare sums; ``II`` values carry the ``2 pi i``.
    """
    zeta = zeta or split_deformation(model, ctx)
    genus = model.genus
    closed = {k: f(zeta) for k, f in CLOSED_FORMS.items()}
    values = {k: Value(v) for k, v in closed.items()}
    agreement = {k: _deviation(closed[k], oracle_value(zeta, k)) for k in CONDITIONS}
    for j, (q, (cond, sign)) in enumerate(zip(gamma_quadrics(genus), _GAMMA_RELATIONS[genus]), 1):
        v = second_form(zeta, q, check_membership)
        values[f"II_Gamma{j}"] = v
        agreement[f"II_Gamma{j}"] = _deviation(sign * closed[cond], v.normalized)
    tol = verdict_tolerance(zeta)
    verdict = classify(max(abs(closed[k]) for k in CONDITIONS), tol)
    return ConditionReport(genus, model.family, values, agreement, tol, ctx.zero_tol, verdict,
                           fiber_ys(zeta))


def gamma_relation(genus: int) -> tuple[tuple[str, int], ...]:
    """For each ``Gamma_j``: the condition it is proportional to and the sign of
    ``II(Gamma_j) / (2 pi i)`` relative to that condition."""
    return _GAMMA_RELATIONS[genus]


__all__ = [
    "ASYMPTOTIC", "CONDITIONS", "ConditionReport", "INDETERMINATE", "NOT_ASYMPTOTIC",
    "asymptotic_conditions", "classify", "cond_eqdg", "cond_g", "cond_g2",
    "gamma_relation", "oracle_value", "verdict_tolerance",
]
