import json

import pytest

from config import get_settings
from main import main


def run_json(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, json.loads(captured.out) if captured.out.strip() else None, captured.err


def test_info(capsys):
    code, data, _ = run_json(capsys, "info", "G2~")
    assert code == 0
    assert data["p"] == 3
    assert data["iota_type"] == "G2~^iota"
    assert data["theta"] == "3*a1 + 2*a2"
    assert data["theta_in_m"] is True
    assert data["e"] == ["1", "3", "1"]


def test_word(capsys):
    code, data, _ = run_json(capsys, "word", "G2~", "r[1,1]")
    assert code == 0
    assert data["reduced_word"] == [2, 1, 2]
    assert data["length"] == data["length_formula"] == 3


def test_eval(capsys):
    code, data, _ = run_json(capsys, "eval", "A1~", "T1 X[1]")
    unit = "-tl^-1/2 + tl^1/2"
    assert code == 0
    assert data == [
        {"beta": [-1], "u_word": [1], "coeff": "1"},
        {"beta": [0], "u_word": [], "coeff": unit},
        {"beta": [1], "u_word": [], "coeff": unit},
    ]


def test_bernstein(capsys):
    code, data, _ = run_json(capsys, "bernstein", "A1~", "T0")
    assert code == 0
    assert data == [
        {"mu": [0], "w_word": [], "coeff": "-tl^-1/2 + tl^1/2"},
        {"mu": [1], "w_word": [1], "coeff": "1"},
    ]


@pytest.mark.parametrize("argv", [
    ["info", "E9~"],
    ["info", "A4^(2)"],
    ["eval", "A1~", "T1 +"],
    ["eval", "A1~", "T3"],
    ["word", "A2~", "r[1,2]"],
    ["bernstein", "A1~", "X[1]"],
])
def test_invalid_input_exits_with_one(capsys, argv):
    assert main(argv) == 1
    assert "ERROR: " in capsys.readouterr().err


def test_verify_lengths(capsys):
    code, data, err = run_json(capsys, "verify", "lengths", "A2~", "--max-length", "3")
    assert code == 0
    assert data[0]["suite"] == "lengths"
    assert data[0]["status"] == "pass"
    assert "[ok] A2~ lengths" in err


@pytest.mark.parametrize("args, suite", [
    (["matsumoto", "A2~", "--max-length", "3"], "matsumoto"),
    (["division", "A1~", "--bound", "1"], "division"),
    (["associativity", "A1~", "--triples", "20", "--seed", "4"], "associativity"),
])
def test_verify_algebra_suites(capsys, args, suite):
    code, data, err = run_json(capsys, "verify", *args)
    assert code == 0
    assert [r["suite"] for r in data] == [suite]
    assert data[0]["status"] == "pass"
    assert f"[ok] {data[0]['type']} {suite}" in err

def test_verify_lemmas_on_simply_laced_type(capsys):
    code, data, _ = run_json(capsys, "verify", "lemmas", "A1~")
    assert code == 0
    assert [r["status"] for r in data][-1] == "pass"


def test_verify_all_from_config(capsys, tmp_path):
    config = tmp_path / "verify.env"
    config.write_text("TYPES=A1~\nSAMPLES=2\nSEED=1\nMAX_LENGTH=3\n")
    assert main(["verify", "all", "--config", str(config)]) == 0
    lines = capsys.readouterr().out.strip().splitlines()
    reports = [json.loads(line) for line in lines]
    assert len(reports) == 11
    assert {r.get("suite") or r.get("lemma") for r in reports} >= {
        "lengths", "matsumoto", "division", "associativity", "involution", "homomorphism",
    }


def test_verify_all_missing_config(capsys, tmp_path):
    assert main(["verify", "all", "--config", str(tmp_path / "missing.env")]) == 1


def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("DAHA_SAMPLES", "5")
    monkeypatch.setenv("DAHA_LOG_LEVEL", "debug")
    settings = get_settings()
    assert settings["samples"] == 5
    assert settings["log_level"] == "DEBUG"


@pytest.mark.parametrize("name, value", [("DAHA_SEED", "x"), ("DAHA_LOG_LEVEL", "LOUD")])
def test_bad_environment_exits_with_one(capsys, monkeypatch, name, value):
    monkeypatch.setenv(name, value)
    assert main(["info", "A1~"]) == 1
    assert "ERROR" in capsys.readouterr().err
