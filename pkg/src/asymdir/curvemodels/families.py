"""Explicit trigonal families of genus 5, 6 and 7.

Each family writes the curve as a cubic in ``y`` over ``x``:

    c3(x) y^3 + c2(x) y^2 + c1(x) y + c0(x) = 0

with ``x = s1/s2`` the trigonal coordinate and ``y`` the reciprocal of the
family's ``g`` function.  Parameters are coefficient lists, lowest degree
first; ``a`` and ``b`` of the genus-6 Maroni family are scalars.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping

from ..errors import InvalidParams
from ..numkernel import Poly, UniPoly, parse_scalar

MARONI = "maroni"
ASYMPTOTIC = "asymptotic"
_ALIASES = {"maroni": MARONI, "asymptotic": ASYMPTOTIC, "asy": ASYMPTOTIC}

# parameter name -> maximum degree (None for a scalar)
SIGNATURES: dict[tuple[int, str], tuple[tuple[str, int | None], ...]] = {
    (6, MARONI): (("a", None), ("b", None), ("psi5", 5), ("psi7", 7)),
    (6, ASYMPTOTIC): (("psi3", 3), ("psi7", 7)),
    (7, MARONI): (("psi3", 3), ("psi6", 6), ("psi9", 9)),
    (7, ASYMPTOTIC): (("psi2", 2), ("psi4", 4), ("psi9", 9)),
    (5, MARONI): (("psi3", 3), ("psi4", 4), ("psi5", 5)),
    (5, ASYMPTOTIC): (("alpha2", 2), ("chi2", 2), ("psi5", 5)),
}

X = UniPoly([0, 1])


def _xpow(k: int) -> UniPoly:
    return UniPoly([0] * k + [1])


@dataclass(frozen=True)
class TrigonalModel:
    genus: int
    family: str
    params: Mapping[str, object]
    P: Poly = field(compare=False)

    @property
    def genus_tag(self) -> int:
        return self.genus

    @property
    def y_coeffs(self) -> list[UniPoly]:
        """``[c0, c1, c2, c3]`` as polynomials in ``x``."""
        cs = self.P.coeffs_in(1)
        return cs + [UniPoly([])] * (4 - len(cs))

    @property
    def leading(self) -> UniPoly:
        return self.y_coeffs[3]

    def param(self, name: str):
        return self.params[name]

    def to_json(self) -> dict:
        from ..numkernel import format_scalar, poly_to_json
        params = {}
        for name, deg in SIGNATURES[(self.genus, self.family)]:
            v = self.params[name]
            if deg is None:
                params[name] = format_scalar(v)
            else:
                params[name] = [format_scalar(c) for c in _padded(v, deg)]
        return {"genus": self.genus, "family": self.family, "params": params,
                "P": poly_to_json(self.P)}


def _padded(p: UniPoly, deg: int) -> list:
    cs = list(p.coeffs)
    return cs + [Fraction(0)] * (deg + 1 - len(cs))


def _as_uni(name: str, value, max_deg: int) -> UniPoly:
    if isinstance(value, UniPoly):
        p = value
    elif isinstance(value, (list, tuple)):
        try:
            p = UniPoly([parse_scalar(c) if not isinstance(c, (Fraction, complex)) else c
                         for c in value])
        except ValueError as exc:
            raise InvalidParams(f"{name}: {exc}") from None
    else:
        try:
            p = UniPoly([parse_scalar(value) if not isinstance(value, (Fraction, complex)) else value])
        except ValueError as exc:
            raise InvalidParams(f"{name}: {exc}") from None
    if p.degree > max_deg:
        raise InvalidParams(f"{name} has degree {p.degree} > {max_deg}")
    return p


def _as_scalar(name: str, value):
    if isinstance(value, (Fraction, complex)):
        return value
    try:
        return parse_scalar(value)
    except ValueError as exc:
        raise InvalidParams(f"{name}: {exc}") from None


def normalize_family(family: str) -> str:
    try:
        return _ALIASES[family.lower()]
    except (KeyError, AttributeError):
        raise InvalidParams(f"unknown family {family!r}; expected maroni or asymptotic") from None


def _y_coeffs(genus: int, family: str, p: dict) -> list[UniPoly]:
    one = UniPoly([1])
    if genus == 6 and family == MARONI:
        return [p["psi7"], p["psi5"], UniPoly([p["b"], 0, 0, p["a"]]), one]
    if genus == 6:
        return [p["psi7"], _xpow(2) * p["psi3"], _xpow(3), one]
    if genus == 7 and family == MARONI:
        return [p["psi9"], p["psi6"], p["psi3"], one]
    if genus == 7:
        return [p["psi9"], _xpow(2) * p["psi4"], X * p["psi2"], one]
    quad = UniPoly([-1, 0, 1])
    if family == MARONI:
        return [p["psi5"], p["psi4"], p["psi3"], quad]
    return [p["psi5"], _xpow(2) * p["chi2"], X * p["alpha2"], quad]


def _validate(genus: int, family: str, p: dict) -> None:
    if genus == 6 and family == MARONI and p["a"] == 0:
        raise InvalidParams("a must be nonzero")
    if genus == 6 and family == ASYMPTOTIC and p["psi7"](0) == 0:
        raise InvalidParams("psi7(0) must be nonzero")
    if genus == 7 and family == ASYMPTOTIC and p["psi9"](0) == 0:
        raise InvalidParams("psi9(0) must be nonzero")
    if genus == 5 and family == ASYMPTOTIC and p["psi5"](0) != 1:
        raise InvalidParams("psi5(0) must equal 1")


def build_family(genus: int, family: str, params: Mapping[str, object]) -> TrigonalModel:
    """Assemble the model ``P(x, y)`` of a family member.

    Raises :class:`InvalidParams` for unknown genus or family, missing or extra
    parameters, degree overflow, or a violated family constraint.
    """
    family = normalize_family(family)
    if (genus, family) not in SIGNATURES:
        raise InvalidParams(f"no family for genus {genus!r}; expected 5, 6 or 7")
    sig = SIGNATURES[(genus, family)]
    names = [n for n, _ in sig]
    missing = [n for n in names if n not in params]
    extra = sorted(set(params) - set(names))
    if missing or extra:
        parts = []
        if missing:
            parts.append(f"missing {', '.join(missing)}")
        if extra:
            parts.append(f"unexpected {', '.join(extra)}")
        raise InvalidParams(f"genus {genus} {family} parameters: {'; '.join(parts)} "
                            f"(expected {', '.join(names)})")
    clean: dict = {}
    for name, deg in sig:
        clean[name] = _as_scalar(name, params[name]) if deg is None else _as_uni(name, params[name], deg)
    _validate(genus, family, clean)
    P = Poly.from_y_coeffs(_y_coeffs(genus, family, clean))
    return TrigonalModel(genus, family, clean, P)


def model_from_json(obj: Mapping) -> TrigonalModel:
    """Build a model from its JSON form; a supplied ``P`` must match the params."""
    from ..numkernel import poly_from_json
    try:
        genus, family, params = obj["genus"], obj["family"], obj["params"]
    except (KeyError, TypeError):
        raise InvalidParams("model JSON needs genus, family and params") from None
    if not isinstance(params, Mapping):
        raise InvalidParams("params must be an object")
    model = build_family(genus, family, params)
    if obj.get("P") is not None:
        try:
            given = poly_from_json(obj["P"])
        except (ValueError, SyntaxError) as exc:
            raise InvalidParams(f"P: {exc}") from None
        if given != model.P:
            raise InvalidParams("P does not match the polynomial assembled from params")
    return model


def rescale_y(model: TrigonalModel, lam) -> TrigonalModel:
    """The same curve with ``y`` replaced by ``lam * y`` (``t`` by ``lam * t``).

    Only the Maroni families are closed under this substitution; the
    asymptotic families fix a normalization that it would break.
    """
    if model.family != MARONI:
        raise InvalidParams("rescaling is defined for the maroni families only")
    lam = Fraction(lam) if not isinstance(lam, complex) else lam
    if lam == 0:
        raise InvalidParams("rescaling factor must be nonzero")
    p = dict(model.params)
    # P(x, y / lam) * lam^3: the y^(3-k) coefficient picks up lam^k
    weights = {6: {"a": 1, "b": 1, "psi5": 2, "psi7": 3},
               7: {"psi3": 1, "psi6": 2, "psi9": 3},
               5: {"psi3": 1, "psi4": 2, "psi5": 3}}[model.genus]
    for name, k in weights.items():
        p[name] = p[name] * lam ** k
    return build_family(model.genus, model.family, p)
