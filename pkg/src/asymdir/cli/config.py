"""Run configuration: an optional TOML or JSON file overridden by flags."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields, replace
from pathlib import Path

import tomli

from ..errors import AsymDirError
from ..numkernel import NumCtx

EXPECTATIONS = ("asymptotic", "not_asymptotic")


class InvalidConfig(AsymDirError, ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    precision_bits: int = 53
    tolerance: float = 1e-8
    series_cap: int = 256
    seed: int = 0
    expectation: str | None = None
    jobs: int = 1

    def __post_init__(self):
        if not isinstance(self.precision_bits, int) or self.precision_bits < 53:
            raise InvalidConfig("precision_bits must be an integer >= 53")
        if not self.tolerance > 0:
            raise InvalidConfig("tolerance must be positive")
        cap = self.series_cap
        if not isinstance(cap, int) or not 16 <= cap <= 4096 or cap & (cap - 1):
            raise InvalidConfig("series_cap must be a power of two in [16, 4096]")
        if not isinstance(self.seed, int) or not 0 <= self.seed < 2 ** 64:
            raise InvalidConfig("seed must be an unsigned 64-bit integer")
        if self.expectation is not None and self.expectation not in EXPECTATIONS:
            raise InvalidConfig(f"expectation must be one of {', '.join(EXPECTATIONS)}")
        if not isinstance(self.jobs, int) or self.jobs < 1:
            raise InvalidConfig("jobs must be a positive integer")

    @property
    def ctx(self) -> NumCtx:
        return NumCtx(prec=self.precision_bits, zero_tol=self.tolerance, series_cap=self.series_cap)

    def echo(self) -> dict:
        # jobs changes scheduling only, so it stays out of the reproducible echo
        out = asdict(self)
        del out["jobs"]
        return out


def read_config_file(path: str | Path) -> dict:
    path = Path(path)
    try:
        raw = path.read_bytes()
    except OSError as exc:
        raise InvalidConfig(f"cannot read config {path}: {exc.strerror}") from None
    try:
        if path.suffix.lower() == ".json":
            data = json.loads(raw)
        else:
            data = tomli.loads(raw.decode())
    except (ValueError, tomli.TOMLDecodeError) as exc:
        raise InvalidConfig(f"cannot parse config {path}: {exc}") from None
    if not isinstance(data, dict):
        raise InvalidConfig("config must be a table of settings")
    known = {f.name for f in fields(RunConfig)}
    unknown = sorted(set(data) - known)
    if unknown:
        raise InvalidConfig(f"unknown config keys: {', '.join(unknown)}")
    return data


def load_config(path: str | Path | None = None, **overrides) -> RunConfig:
    """Defaults, then the file, then every override that is not None."""
    try:
        cfg = RunConfig(**read_config_file(path)) if path else RunConfig()
        return replace(cfg, **{k: v for k, v in overrides.items() if v is not None})
    except TypeError as exc:
        raise InvalidConfig(str(exc)) from None
