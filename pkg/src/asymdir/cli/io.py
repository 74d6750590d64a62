"""Input files and deterministic JSON output."""

from __future__ import annotations

import json
import math
from collections.abc import Mapping
from pathlib import Path

from ..curvemodels import build_plane_curve, model_from_json
from ..errors import AsymDirError
from ..numkernel import NumCtx, poly_from_json


class InvalidInput(AsymDirError, ValueError):
    pass


def read_json(path: str | Path):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise InvalidInput(f"cannot read {path}: {exc.strerror}") from None
    except ValueError as exc:
        raise InvalidInput(f"{path} is not valid JSON: {exc}") from None


def load_curve(obj, ctx: NumCtx):
    """A family model, a plane curve (``{"plane": ...}``) or a bare ``{"P": ...}``."""
    if not isinstance(obj, Mapping):
        raise InvalidInput("curve file must hold a JSON object")
    if "plane" in obj:
        plane = obj["plane"]
        if not isinstance(plane, Mapping) or "F" not in plane or "degree" not in plane:
            raise InvalidInput("plane curve needs F and degree")
        return build_plane_curve(plane["F"], int(plane["degree"]), plane.get("lines", ()), ctx)
    if "genus" in obj:
        return model_from_json(obj)
    if "P" in obj:
        try:
            return poly_from_json(obj["P"])
        except AsymDirError:
            raise
        except (ValueError, SyntaxError, TypeError) as exc:
            raise InvalidInput(f"P: {exc}") from None
    raise InvalidInput("curve file needs genus/family/params, plane, or P")


def _clean(obj):
    if isinstance(obj, float) and not math.isfinite(obj):
        return repr(obj)
    if isinstance(obj, dict):
        return {k: _clean(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_clean(v) for v in obj]
    return obj


def dumps(obj, pretty: bool = False) -> str:
    if pretty:
        return json.dumps(_clean(obj), indent=2, sort_keys=True)
    return json.dumps(_clean(obj), sort_keys=True, separators=(",", ":"))


def error_object(exc: BaseException) -> dict:
    code = exc.code if isinstance(exc, AsymDirError) else type(exc).__name__
    return {"error": {"code": code, "message": str(exc)}}
