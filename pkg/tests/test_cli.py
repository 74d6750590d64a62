import json
import subprocess
import sys
from pathlib import Path

import jsonschema
import pytest

from asymdir.cli import main
from asymdir.cli.config import InvalidConfig, RunConfig, load_config

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "tests" / "data"


def schema(name):
    return json.loads((ROOT / "schemas" / f"{name}.schema.json").read_text())


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    out = capsys.readouterr().out
    return code, out


def run_json(capsys, *argv):
    code, out = run(capsys, *argv)
    return code, json.loads(out)


# verify

def test_verify_asymptotic_model(capsys):
    code, obj = run_json(capsys, "verify", DATA / "asy6.json", "--expect", "asymptotic")
    assert code == 0
    assert obj["report"]["verdict"] == "asymptotic"
    jsonschema.validate(obj, schema("verify"))


def test_verify_violating_model(capsys):
    code, obj = run_json(capsys, "verify", DATA / "maroni6_violating.json", "--expect", "not_asymptotic")
    assert code == 0
    jsonschema.validate(obj, schema("verify"))
    code, _ = run(capsys, "verify", DATA / "maroni6_violating.json", "--expect", "asymptotic")
    assert code == 1


def test_verify_without_expectation_exits_zero(capsys):
    code, _ = run(capsys, "verify", DATA / "maroni6_violating.json")
    assert code == 0


def test_invalid_params_error_object(capsys):
    code, obj = run_json(capsys, "verify", DATA / "asy6_bad_psi7.json")
    assert code == 2
    assert obj["error"]["code"] == "InvalidParams"
    jsonschema.validate(obj, schema("error"))


def test_malformed_polynomial(capsys, tmp_path):
    code, obj = run_json(capsys, "residue", DATA / "malformed.json", DATA / "y3_plus_1.json")
    assert code == 2
    assert obj["error"]["code"] == "PolySyntaxError"
    assert "position 2" in obj["error"]["message"]
    jsonschema.validate(obj, schema("error"))
    bad = tmp_path / "curve.json"
    bad.write_text('{"P": "y^3 +"}')
    code, obj = run_json(capsys, "residue", DATA / "dx_over_x.json", bad)
    assert obj["error"]["code"] == "PolySyntaxError"


def test_missing_file(capsys):
    code, obj = run_json(capsys, "verify", DATA / "absent.json")
    assert code == 2 and "error" in obj


# residue

def test_residue_dx_over_x(capsys):
    code, obj = run_json(capsys, "residue", DATA / "dx_over_x.json", DATA / "y3_plus_1.json")
    assert code == 0
    jsonschema.validate(obj, schema("residue"))
    assert len(obj["points"]) == 3
    assert obj["residue_sum"]["re"] == pytest.approx(3)


def test_residue_dg_over_x_on_asymptotic_model(capsys):
    code, obj = run_json(capsys, "residue", DATA / "dg_over_x.json", DATA / "asy6.json")
    assert code == 0
    assert abs(obj["residue_sum"]["re"]) < 1e-10 and abs(obj["residue_sum"]["im"]) < 1e-10


# double split, rank, report

@pytest.mark.parametrize("fixture, expected", [("fermat_quintic.json", 5), ("fermat_sextic.json", 6),
                                               ("asy6.json", 3)])
def test_doublesplit(capsys, fixture, expected):
    code, obj = run_json(capsys, "doublesplit", DATA / fixture)
    assert code == 0
    jsonschema.validate(obj, schema("doublesplit"))
    assert obj["value"]["normalized_by_2pi_i"]["re"] == pytest.approx(expected, abs=1e-8)


def test_doublesplit_pencil_option(capsys):
    code, obj = run_json(capsys, "doublesplit", DATA / "asy6.json", "--pencil", "1/2,3")
    assert code == 0
    assert obj["pencil"] == {"a": "1/2", "b": "3"}


def test_rank(capsys):
    code, obj = run_json(capsys, "rank", DATA / "maroni6_violating.json")
    assert code == 0
    jsonschema.validate(obj, schema("rank"))
    assert obj["rank"] == 1 and obj["kernel_dim"] == 5


def test_report(capsys):
    code, obj = run_json(capsys, "report", DATA / "asy6.json")
    assert code == 0
    jsonschema.validate(obj, schema("report"))
    assert "maroni_tangency" in obj


# sample

def test_sample_schema_and_counts(capsys):
    code, obj = run_json(capsys, "sample", 6, "asy", "--count", 3, "--seed", 4, "--expect", "asymptotic")
    assert code == 0
    jsonschema.validate(obj, schema("sample"))
    assert obj["aggregate"]["asymptotic"] == 3


def test_sample_force_option(capsys):
    code, obj = run_json(capsys, "sample", 6, "maroni", "--count", 2, "--force", "psi5:0=1",
                         "--expect", "not_asymptotic")
    assert code == 0
    assert obj["aggregate"]["not_asymptotic"] == 2


def test_sample_mismatch_exits_one(capsys):
    code, _ = run(capsys, "sample", 6, "maroni", "--count", 2, "--force", "psi5:0=1", "--expect", "asymptotic")
    assert code == 1


def test_sample_is_deterministic(capsys):
    _, a = run(capsys, "sample", 7, "maroni", "--count", 3, "--seed", 11)
    _, b = run(capsys, "sample", 7, "maroni", "--count", 3, "--seed", 11)
    _, c = run(capsys, "sample", 7, "maroni", "--count", 3, "--seed", 12)
    assert a == b and a != c


def test_parallel_matches_serial(capsys):
    _, a = run(capsys, "sample", 5, "asy", "--count", 4, "--seed", 2)
    _, b = run(capsys, "sample", 5, "asy", "--count", 4, "--seed", 2, "--jobs", 2)
    assert a == b


def test_zero_count_is_usage_error(capsys):
    with pytest.raises(SystemExit) as err:
        main(["sample", "6", "asy", "--count", "0"])
    assert err.value.code == 2


def test_pretty_output(capsys):
    _, out = run(capsys, "rank", DATA / "asy6.json", "--pretty")
    assert out.startswith("{\n  ")


# configuration

def test_config_defaults_and_validation():
    c = RunConfig()
    assert c.precision_bits == 53 and c.seed == 0
    for bad in ({"precision_bits": 20}, {"tolerance": 0}, {"series_cap": 100}, {"seed": -1}, {"jobs": 0}):
        with pytest.raises(InvalidConfig):
            RunConfig(**bad)


def test_config_file_and_override(tmp_path):
    p = tmp_path / "run.toml"
    p.write_text("precision_bits = 80\nseed = 7\n")
    c = load_config(p, seed=9)
    assert c.precision_bits == 80 and c.seed == 9
    bad = tmp_path / "bad.toml"
    bad.write_text("colour = 1\n")
    with pytest.raises(InvalidConfig):
        load_config(bad)


def test_config_echoed_in_output(capsys, tmp_path):
    p = tmp_path / "run.json"
    p.write_text(json.dumps({"series_cap": 128}))
    code, obj = run_json(capsys, "rank", DATA / "asy6.json", "--config", p, "--tol", "1e-9")
    assert code == 0
    assert obj["config"]["series_cap"] == 128 and obj["config"]["tolerance"] == 1e-9


def test_module_entry_point():
    r = subprocess.run([sys.executable, "-m", "asymdir", "--version"], capture_output=True, text=True)
    assert r.returncode == 0 and r.stdout.startswith("asymdir ")
