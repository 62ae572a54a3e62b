import json
from importlib import resources

import jsonschema
import pytest

from doublehurwitz.cli import main
from doublehurwitz.partitions import HurwitzInput, hurwitz_oracle
from doublehurwitz.patterns import Step


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def schema(name):
    text = resources.files("doublehurwitz").joinpath("schemas", f"{name}.schema.json").read_text()
    return json.loads(text)


# -- hurwitz ------------------------------------------------------------------------

@pytest.mark.parametrize("argv, value", [
    (("--mu", "2", "--nu", "1,1", "--r", "1"), "1"),
    (("--mu", "1", "--nu", "1", "--r", "0"), "1"),
    (("--mu", "3", "--nu", "2,1", "--g", "0"), "1"),
])
def test_hurwitz_examples(capsys, argv, value):
    code, out, _ = run(capsys, "hurwitz", *argv)
    assert code == 0
    assert out.strip() == value


def test_hurwitz_three_two_one_is_oracle_value(capsys):
    _, out, _ = run(capsys, "hurwitz", "--mu", "3", "--nu", "2,1", "--g", "0")
    assert out.strip() == str(hurwitz_oracle(HurwitzInput((3,), (2, 1)), 1))


def test_hurwitz_on_wall_exit_code(capsys):
    code, out, err = run(capsys, "hurwitz", "--mu", "2,1", "--nu", "2,1", "--r", "2")
    assert code == 3
    assert "W_{[1],[1]}" in err
    code, out, _ = run(capsys, "hurwitz", "--mu", "2,1", "--nu", "2,1", "--r", "2", "--oracle")
    assert code == 0 and out.strip() == "9/2"


@pytest.mark.parametrize("argv", [
    ("hurwitz", "--mu", "2", "--nu", "1", "--r", "1"),
    ("hurwitz", "--mu", "2", "--nu", "1,1"),
    ("hurwitz", "--mu", "2,x", "--nu", "1,1", "--r", "1"),
    ("hurwitz", "--mu", "3", "--nu", "2,1", "--r", "1", "--g", "1"),
    ("hurwitz", "--mu", "0,2", "--nu", "1,1", "--r", "1"),
    ("verify", "nonsense"),
    ("wallcross", "--mu", "6,1", "--nu", "4,3"),
    ("poly", "--mu", "3", "--nu", "2,1", "--r", "2"),
])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_hurwitz_json(capsys):
    code, out, _ = run(capsys, "hurwitz", "--mu", "5,2", "--nu", "4,3", "--g", "1", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("hurwitz"))
    assert data["r"] == 4 and data["g"] == 1
    assert data["value"] == str(hurwitz_oracle(HurwitzInput((5, 2), (4, 3)), 4))


def test_oracle_subcommand(capsys):
    code, out, _ = run(capsys, "oracle", "--mu", "2,2", "--nu", "2,2", "--r", "2")
    assert code == 0
    assert out.strip() == str(hurwitz_oracle(HurwitzInput((2, 2), (2, 2)), 2))


# -- closed forms and series -------------------------------------------------------------

def test_closed_form_latex(capsys):
    code, out, _ = run(capsys, "closed-form", "--mu", "5,2", "--nu", "4,3", "--format", "latex")
    assert code == 0
    for a in ("20", "15", "14"):
        assert a in out


def test_closed_form_json_schema_and_order(capsys):
    _, out, _ = run(capsys, "closed-form", "--mu", "5,2", "--nu", "4,3", "--order", "1,2/1,2", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("closed_form"))
    assert len(data["patterns"]) == 2


def test_closed_form_one_part(capsys):
    _, out, _ = run(capsys, "closed-form", "--mu", "6", "--nu", "3,2,1", "--format", "json")
    data = json.loads(out)
    assert len(data["patterns"]) == 1
    assert sorted(data["patterns"][0]["sigma_args"]) == [6, 12, 18]


def test_closed_form_on_wall(capsys):
    assert run(capsys, "closed-form", "--mu", "2,1", "--nu", "2,1")[0] == 3


def test_series_json(capsys):
    _, out, _ = run(capsys, "series", "--mu", "5,2", "--nu", "4,3", "--N", "6", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("series"))
    assert data["series"]["order"] == 6


def test_series_text(capsys):
    code, out, _ = run(capsys, "series", "--mu", "2", "--nu", "1,1", "--N", "3")
    assert code == 0 and out.strip().endswith("O(z^4)")


# -- chambers ----------------------------------------------------------------------------------

def test_chamber_json(capsys):
    _, out, _ = run(capsys, "chamber", "--mu", "5,2", "--nu", "4,3", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("chamber"))
    assert data["totally_negative"] and data["patterns"] == 1
    assert sorted(data["product_formula"]) == [14, 15, 20]


def test_chamber_reordered_note(capsys):
    _, out, _ = run(capsys, "chamber", "--mu", "2,5", "--nu", "4,3")
    assert "not given in decreasing order" in out


def test_poly_check_json(capsys):
    code, out, _ = run(capsys, "poly", "--mu", "5,2", "--nu", "4,3", "--g", "1", "--check", "--interpolate",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("chamber_polynomial"))
    assert data["report"]["ok"] and data["interpolation_matches"]


def test_poly_degenerate(capsys):
    assert run(capsys, "poly", "--mu", "3", "--nu", "3", "--g", "0")[0] == 2


def test_wallcross_json(capsys):
    code, out, _ = run(capsys, "wallcross", "--mu", "6,1", "--nu", "4,3", "--wall", "1/1", "--N", "12",
                       "--format", "json")
    assert code == 0
    data = json.loads(out)
    jsonschema.validate(data, schema("wallcross"))
    assert data["equal"] and data["wall"]["delta"] == 2


# -- config, output, determinism -----------------------------------------------------------------

def test_config_file_and_flag_precedence(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"mu": [2], "nu": [1, 1], "r": 3, "format": "json"}))
    _, out, _ = run(capsys, "hurwitz", "--config", str(cfg))
    assert json.loads(out)["r"] == 3
    _, out, _ = run(capsys, "hurwitz", "--config", str(cfg), "--r", "1", "--format", "text")
    assert out.strip() == "1"


def test_config_unknown_key(capsys, tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps({"mu": [2], "nu": [1, 1], "colour": "red"}))
    assert run(capsys, "hurwitz", "--config", str(cfg), "--r", "1")[0] == 2


def test_output_file(capsys, tmp_path):
    target = tmp_path / "out.txt"
    code, out, _ = run(capsys, "hurwitz", "--mu", "2", "--nu", "1,1", "--r", "1", "--output", str(target))
    assert code == 0 and out == ""
    assert target.read_text() == "1\n"


@pytest.mark.parametrize("argv", [
    ("closed-form", "--mu", "5,3,1", "--nu", "7,2", "--format", "json"),
    ("chamber", "--mu", "5,3", "--nu", "4,2,2", "--format", "json"),
    ("poly", "--mu", "5,2", "--nu", "4,3", "--g", "1", "--check", "--seed", "7", "--format", "json"),
    ("wallcross", "--mu", "2,2,2", "--nu", "3,3", "--wall", "1,2/1", "--seed", "3"),
])
def test_output_is_deterministic(capsys, argv):
    first = run(capsys, *argv)
    second = run(capsys, *argv)
    assert first == second and first[0] == 0


# -- verify -----------------------------------------------------------------------------------------

@pytest.mark.parametrize("suite", ["oracle-equivalence", "wallcross", "fock-identities"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, "verify", suite)
    assert code == 0, out
    assert "FAIL" not in out


@pytest.mark.slow
def test_verify_spp_passes(capsys):
    code, out, _ = run(capsys, "verify", "spp", "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, schema("verify"))
    assert code == 0 and data["ok"]


def test_verify_parallel_report_order(capsys, monkeypatch):
    _, serial, _ = run(capsys, "verify", "wallcross")
    monkeypatch.setenv("HW_THREADS", "2")
    _, parallel, _ = run(capsys, "verify", "wallcross")
    assert serial == parallel


@pytest.mark.slow
def test_verify_all_catches_seeded_sign_bug(capsys, monkeypatch):
    def flipped(self, at):
        return at.mu_sum(self.K) * at.nu_sum(self.J) - at.mu_sum(self.I) * at.nu_sum(self.L)

    monkeypatch.setattr(Step, "sigma_arg", flipped)
    code, out, _ = run(capsys, "verify", "all")
    assert code == 4
    assert "FAIL" in out and "witness" in out
