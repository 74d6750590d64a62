"""Seeded random family members with small rational coefficients.

Every sample draws from its own Philox stream keyed by ``(seed, index)``, so
any sample can be reproduced alone and batches can be split across workers.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

import numpy as np

from .families import ASYMPTOTIC, SIGNATURES, TrigonalModel, build_family, normalize_family

BOUND = 100

# constraints that make a draw a valid family member
_DEFAULT_FORCE = {
    (6, ASYMPTOTIC): {"psi7": {0: Fraction(1)}},
    (5, ASYMPTOTIC): {"psi5": {0: Fraction(1)}},
}


def stream(seed: int, index: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence([seed, index])))


def random_rational(rng: np.random.Generator, nonzero: bool = False) -> Fraction:
    while True:
        num = int(rng.integers(-BOUND, BOUND, endpoint=True))
        den = int(rng.integers(1, BOUND, endpoint=True))
        if num or not nonzero:
            return Fraction(num, den)


def sample_params(genus: int, family: str, rng: np.random.Generator,
                  force: Mapping[str, Mapping[int, object]] | None = None) -> dict:
    """Random parameters; ``force`` pins coefficients, e.g. ``{"psi5": {0: 1}}``.

    A scalar parameter is pinned with key ``0``.
    """
    family = normalize_family(family)
    pins: dict = {k: dict(v) for k, v in _DEFAULT_FORCE.get((genus, family), {}).items()}
    for name, coeffs in (force or {}).items():
        pins.setdefault(name, {}).update({int(k): Fraction(v) for k, v in coeffs.items()})
    params = {}
    for name, deg in SIGNATURES[(genus, family)]:
        nonzero = name == "a" or (family == ASYMPTOTIC and name == "psi9")
        if deg is None:
            params[name] = pins.get(name, {}).get(0, random_rational(rng, nonzero))
            continue
        cs = [random_rational(rng, nonzero and k == 0) for k in range(deg + 1)]
        for k, v in pins.get(name, {}).items():
            cs[k] = v
        params[name] = cs
    return params


def sample_model(genus: int, family: str, seed: int, index: int,
                 force: Mapping[str, Mapping[int, object]] | None = None) -> TrigonalModel:
    return build_family(genus, family, sample_params(genus, family, stream(seed, index), force))
