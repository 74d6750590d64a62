"""``asymdir`` command line.

Exit status: 0 when the result matches the expectation (or nothing was
expected and nothing failed), 1 on a mismatch, 2 on an indeterminate
verdict, bad input, or a numerical failure.
"""

from __future__ import annotations

import argparse
import platform
import sys
from concurrent.futures import ProcessPoolExecutor
from fractions import Fraction

import mpmath
import numpy as np

from .. import __version__
from ..curvemodels import PlaneCurveModel, TrigonalModel, sample_model
from ..deformations import cup_kernel_rank, maroni_tangency, trigonal_tangency
from ..errors import AsymDirError
from ..localexpand import RatDifferential, residue_sum_over_fiber
from ..numkernel import format_scalar, parse_scalar, to_complex
from ..secondform import INDETERMINATE, Value, asymptotic_conditions, double_split_check, split_deformation
from .config import EXPECTATIONS, RunConfig, load_config
from .io import InvalidInput, dumps, error_object, load_curve, read_json

FAILURES = (AsymDirError, ValueError, ArithmeticError, OSError)


def cjson(z) -> dict:
    z = to_complex(z)
    return {"re": z.real, "im": z.imag}


def verdict_exit(verdict: str, expectation: str | None) -> int:
    if verdict == INDETERMINATE:
        return 2
    if expectation is None:
        return 0
    return 0 if verdict == expectation else 1


def _trigonal(obj) -> TrigonalModel:
    if not isinstance(obj, TrigonalModel):
        raise InvalidInput("this command needs a family model (genus, family, params)")
    return obj


def cmd_verify(args, cfg: RunConfig):
    model = _trigonal(load_curve(read_json(args.model), cfg.ctx))
    report = asymptotic_conditions(model, cfg.ctx)
    code = verdict_exit(report.verdict, cfg.expectation)
    return {"command": "verify", "config": cfg.echo(), "model": model.to_json(),
            "report": report.to_json(), "expectation": cfg.expectation,
            "match": None if cfg.expectation is None else report.verdict == cfg.expectation}, code


def parse_force(items) -> dict:
    """``NAME:K=VALUE`` pins coefficient ``K`` of ``NAME``; ``NAME=VALUE`` pins a scalar."""
    out: dict = {}
    for item in items or ():
        lhs, sep, value = item.partition("=")
        if not sep:
            raise InvalidInput(f"bad --force {item!r}; expected NAME:K=VALUE")
        name, _, k = lhs.partition(":")
        try:
            out.setdefault(name.strip(), {})[int(k or 0)] = Fraction(parse_scalar(value.strip()))
        except (ValueError, TypeError):
            raise InvalidInput(f"bad --force {item!r}; expected NAME:K=VALUE") from None
    return out


def run_sample(genus: int, family: str, index: int, force: dict, cfg: RunConfig) -> dict:
    entry: dict = {"index": index}
    try:
        model = sample_model(genus, family, cfg.seed, index, force)
        entry["model"] = model.to_json()
        entry["report"] = asymptotic_conditions(model, cfg.ctx).to_json()
    except FAILURES as exc:
        entry.update(error_object(exc))
    return entry


def _run_sample_args(a):
    return run_sample(*a)


def cmd_sample(args, cfg: RunConfig):
    force = parse_force(args.force)
    work = [(args.genus, args.family, i, force, cfg) for i in range(args.count)]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(cfg.jobs) as pool:
            samples = list(pool.map(_run_sample_args, work))
    else:
        samples = [_run_sample_args(w) for w in work]
    counts = {"asymptotic": 0, "not_asymptotic": 0, "indeterminate": 0, "error": 0}
    for s in samples:
        counts["error" if "error" in s else s["report"]["verdict"]] += 1
    code = 0
    if cfg.expectation is not None:
        wrong = sum(v for k, v in counts.items() if k in EXPECTATIONS and k != cfg.expectation)
        code = 1 if wrong else (2 if counts["indeterminate"] or counts["error"] else 0)
    return {"command": "sample", "config": cfg.echo(), "genus": args.genus, "family": args.family,
            "count": args.count,
            "force": {k: {str(i): format_scalar(v) for i, v in sorted(c.items())} for k, c in sorted(force.items())},
            "samples": samples, "aggregate": counts, "versions": versions()}, code


def versions() -> dict:
    return {"asymdir": __version__, "numpy": np.__version__, "mpmath": mpmath.__version__,
            "python": platform.python_version()}


def cmd_residue(args, cfg: RunConfig):
    try:
        diff = RatDifferential.from_json(read_json(args.differential))
    except (KeyError, TypeError, ValueError, SyntaxError) as exc:
        if isinstance(exc, AsymDirError):
            raise
        raise InvalidInput(f"malformed differential: {exc}") from None
    curve = load_curve(read_json(args.curve), cfg.ctx)
    if isinstance(curve, PlaneCurveModel):
        raise InvalidInput("residues are computed on affine models y over x")
    x0 = parse_scalar(args.x0)
    total, per = residue_sum_over_fiber(diff, curve, x0, cfg.ctx)
    return {"command": "residue", "config": cfg.echo(), "x0": format_scalar(x0),
            "residue_sum": cjson(total), "value": Value.from_normalized(to_complex(total)).to_json(),
            "points": [{"x": cjson(p.x0), "y": cjson(p.y0), "residue": cjson(r)} for p, r in per]}, 0


def parse_pencil(text: str | None) -> dict:
    if not text:
        return {}
    parts = [p.strip() for p in text.split(",")]
    if len(parts) > 2 or not parts[0]:
        raise InvalidInput("--pencil takes A or A,B")
    out = {"a": parse_scalar(parts[0])}
    if len(parts) == 2:
        out["b"] = parse_scalar(parts[1])
    return out


def doublesplit_payload(curve, cfg: RunConfig, pencil: dict | None = None):
    res = double_split_check(curve, pencil, cfg.ctx, seed=cfg.seed)
    n = res.value.normalized
    nearest = round(n.real)
    integral = abs(n - nearest) <= cfg.tolerance and res.invariance_deviation <= cfg.tolerance
    return {**res.to_json(), "degree": nearest, "integral_and_invariant": integral}, integral


def cmd_doublesplit(args, cfg: RunConfig):
    curve = load_curve(read_json(args.curve), cfg.ctx)
    payload, ok = doublesplit_payload(curve, cfg, parse_pencil(args.pencil))
    return {"command": "doublesplit", "config": cfg.echo(), **payload}, 0 if ok else 1


def cmd_rank(args, cfg: RunConfig):
    model = _trigonal(load_curve(read_json(args.model), cfg.ctx))
    rep = cup_kernel_rank(model, ctx=cfg.ctx)
    return {"command": "rank", "config": cfg.echo(), **rep.to_json()}, 1 if rep.discrepancy else 0


def cmd_report(args, cfg: RunConfig):
    model = _trigonal(load_curve(read_json(args.model), cfg.ctx))
    zeta = split_deformation(model, cfg.ctx)
    cond = asymptotic_conditions(model, cfg.ctx, zeta)
    tri = trigonal_tangency(model, zeta, cfg.ctx)
    out = {"command": "report", "config": cfg.echo(), "model": model.to_json(),
           "conditions": cond.to_json(),
           "rank": cup_kernel_rank(model, zeta, cfg.ctx).to_json(),
           "trigonal_tangency": {"value": cjson(tri.value), "tangent": tri.tangent},
           "doublesplit": doublesplit_payload(model, cfg)[0]}
    if model.genus == 6:
        try:
            mt = maroni_tangency(model, cfg.ctx)
            out["maroni_tangency"] = {
                "value": format_scalar(mt.value) if isinstance(mt.value, Fraction) else cjson(mt.value),
                "tangent": mt.tangent,
                "oracle": None if mt.oracle is None else cjson(mt.oracle)}
        except AsymDirError as exc:
            out["maroni_tangency"] = error_object(exc)
    return out, verdict_exit(cond.verdict, cfg.expectation)


COMMANDS = {"verify": cmd_verify, "sample": cmd_sample, "residue": cmd_residue,
            "doublesplit": cmd_doublesplit, "rank": cmd_rank, "report": cmd_report}


def _positive(text: str) -> int:
    try:
        v = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="TOML or JSON file with run settings")
    common.add_argument("--precision", type=int, dest="precision_bits", help="working precision in bits")
    common.add_argument("--tol", type=float, dest="tolerance", help="zero tolerance")
    common.add_argument("--series-cap", type=int, help="largest series truncation order")
    common.add_argument("--seed", type=int, help="seed for all random choices")
    common.add_argument("--expect", choices=EXPECTATIONS, dest="expectation")
    common.add_argument("--jobs", type=_positive, help="worker processes for batches")
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="pretty", action="store_false", help="compact JSON (default)")
    fmt.add_argument("--pretty", dest="pretty", action="store_true", help="indented JSON")
    common.set_defaults(pretty=False)

    parser = argparse.ArgumentParser(prog="asymdir", description="Asymptotic directions of trigonal curves.")
    parser.add_argument("--version", action="version", version=f"asymdir {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("verify", parents=[common], help="conditions and verdict for one model")
    p.add_argument("model")
    p = sub.add_parser("sample", parents=[common], help="seeded batch of family members")
    p.add_argument("genus", type=int, choices=(5, 6, 7))
    p.add_argument("family", choices=("maroni", "asymptotic", "asy"))
    p.add_argument("--count", type=_positive, default=1)
    p.add_argument("--force", action="append", metavar="NAME:K=VALUE",
                   help="pin a parameter coefficient, e.g. psi5:0=1")
    p = sub.add_parser("residue", parents=[common], help="sum of residues over a fiber")
    p.add_argument("differential")
    p.add_argument("curve")
    p.add_argument("--x0", default="0")
    p = sub.add_parser("doublesplit", parents=[common], help="double-split pairing")
    p.add_argument("curve")
    p.add_argument("--pencil", metavar="A[,B]", help="pencil points on the line (trigonal models)")
    p = sub.add_parser("rank", parents=[common], help="rank of the split deformation")
    p.add_argument("model")
    p = sub.add_parser("report", parents=[common], help="every check for one model")
    p.add_argument("model")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = load_config(args.config, precision_bits=args.precision_bits, tolerance=args.tolerance,
                          series_cap=args.series_cap, seed=args.seed, expectation=args.expectation,
                          jobs=args.jobs)
        payload, code = COMMANDS[args.command](args, cfg)
    except FAILURES as exc:
        payload, code = error_object(exc), 2
    sys.stdout.write(dumps(payload, args.pretty) + "\n")
    return code


if __name__ == "__main__":
    sys.exit(main())
