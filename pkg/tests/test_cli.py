from __future__ import annotations

import json

import pytest

from hopfcode.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    return code, json.loads(out) if out else None, err


def test_construct_examples(capsys):
    code, out, _ = run_json(capsys, "construct", "--algebra", "taft", "--N", "2", "--prime", "7")
    assert code == 0 and out["dim"] == 4 and all(out["hopf_axioms"].values())
    code, out, _ = run_json(capsys, "construct", "--algebra", "cdmm", "--prime", "7")
    assert code == 0 and out["dim"] == 24
    code, out, _ = run_json(capsys, "construct", "--algebra", "omega", "--S", "3", "--omega", "1,2,0", "--N", "2", "--prime", "5")
    assert code == 0 and out["dim"] == 6 and out["associative"]


def test_ideals_examples(capsys):
    assert run_json(capsys, "ideals", "--algebra", "taft", "--N", "2", "--prime", "7")[1]["count"] == 4
    assert run_json(capsys, "ideals", "--algebra", "cdmm", "--prime", "7")[1]["count"] == 24
    code, out, _ = run_json(capsys, "ideals", "--algebra", "cyclic", "--n", "3", "--prime", "7")
    assert out["count"] == 3 and {r["t"] for r in out["representatives"]} == {0}


def test_ideals_exhaustive(capsys):
    code, out, _ = run_json(capsys, "ideals", "--algebra", "omega", "--S", "2", "--omega", "1,0", "--N", "2", "--prime", "3", "--exhaustive")
    assert code == 0 and out["cross_check"] and out["indecomposable_count"] == out["family_size"] == 8


def test_orthogonal_examples(capsys):
    code, out, _ = run_json(capsys, "orthogonal", "--algebra", "taft", "--N", "2", "--prime", "7", "--ideal", "0,0")
    assert code == 0 and out["equal"] and out["self_orthogonal"]
    code, out, _ = run_json(capsys, "orthogonal", "--algebra", "cyclic", "--n", "7", "--prime", "2", "--generator", "1,1,0,1")
    assert code == 0 and out["dual"]["generator_poly"] == "1 + X^2 + X^3 + X^4"
    code, out, _ = run_json(capsys, "orthogonal", "--algebra", "cyclic", "--n", "7", "--prime", "2", "--generator", "1")
    assert out["orthogonal"]["dim"] == 0
    code, out, _ = run_json(capsys, "orthogonal", "--algebra", "cdmm", "--prime", "7", "--ideal", "1,4,1", "--unit-poly", "1,5")
    assert code == 0 and out["equal"] and out["computed"]["dim"] == 23
    code, out, _ = run_json(capsys, "orthogonal", "--algebra", "omega", "--S", "3", "--omega", "1,2,0", "--N", "3", "--prime", "5", "--mu", "2,0,1", "--d", "3", "--ideal", "1,2")
    assert code == 0 and out["equal"] and out["left_orthogonal_partner"]["equal"]


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--algebra", "taft", "--N", "3", "--prime", "7"),
        ("verify", "--algebra", "cyclic", "--n", "4", "--prime", "3"),
    ],
)
def test_verify_examples(capsys, argv):
    code, out, _ = run_json(capsys, *argv)
    assert code == 0 and out["passed"]
    if "cyclic" in argv:
        assert out["entries"]["symmetric_form"]["passed"] and out["entries"]["involutory"]["passed"]


def test_verify_cdmm(capsys):
    code, out, _ = run_json(capsys, "verify", "--algebra", "cdmm", "--prime", "7", "--samples", "100")
    assert code == 0 and out["passed"]
    assert out["entries"]["orthogonal_theorem"]["checks"] == 96


def test_exit_codes(capsys):
    assert run(capsys, "construct", "--algebra", "taft", "--N", "2", "--prime", "9")[0] == 2
    assert run(capsys, "construct", "--algebra", "bogus")[0] == 2
    assert run(capsys, "construct")[0] == 2
    assert run(capsys, "construct", "--algebra", "taft", "--N", "3", "--prime", "5")[0] == 3
    assert run(capsys, "construct", "--algebra", "cdmm", "--prime", "3")[0] == 3
    assert run(capsys, "orthogonal", "--algebra", "omega", "--S", "2", "--N", "2", "--nu", "0,1", "--ideal", "0,0", "--prime", "3")[0] == 4
    assert run(capsys, "ideals", "--algebra", "omega", "--S", "2", "--N", "2", "--prime", "3", "--exhaustive", "--budget", "5")[0] == 4
    assert run(capsys, "orthogonal", "--algebra", "taft", "--N", "2", "--ideal", "0,5")[0] == 2
    assert run(capsys, "orthogonal", "--algebra", "taft", "--N", "2", "--ideal", "0,0", "--unit-poly", "0,1")[0] == 2
    assert run(capsys, "orthogonal", "--algebra", "cyclic", "--n", "7", "--generator", "1,1,1")[0] == 2
    assert run(capsys, "construct", "--algebra", "omega", "--S", "2", "--omega", "0,0", "--N", "2")[0] == 2
    assert run(capsys, "ideals", "--algebra", "omega", "--S", "1", "--N", "2", "--budget", "0")[0] == 2


def test_budget_env(capsys, monkeypatch):
    monkeypatch.setenv("HOPFCODE_BUDGET", "3")
    assert run(capsys, "ideals", "--algebra", "omega", "--S", "1", "--N", "2", "--prime", "2", "--exhaustive")[0] == 4


def test_deterministic_output(capsys):
    argv = ("verify", "--algebra", "taft", "--N", "2", "--prime", "7", "--samples", "20")
    assert run(capsys, *argv)[1] == run(capsys, *argv)[1]


def test_config_file(capsys, tmp_path):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({"command": "construct", "algebra": "taft", "N": 3, "field": {"kind": "prime", "p": 7}}))
    code, out, _ = run_json(capsys, "--config", str(cfg))
    assert code == 0 and out["dim"] == 9 and out["field"] == {"kind": "prime", "p": 7}
    # flags override the file
    code, out, _ = run_json(capsys, "--config", str(cfg), "--N", "2")
    assert out["dim"] == 4
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    assert run(capsys, "--config", str(bad))[0] == 2


def test_formats(capsys):
    code, out, _ = run(capsys, "gram", "--algebra", "taft", "--N", "2", "--prime", "7", "--format", "csv")
    assert out.splitlines() == [",e0,e0x,e1,e1x", "e0,0,0,0,4", "e0x,0,0,4,0", "e1,0,3,0,0", "e1x,4,0,0,0"]
    code, out, _ = run(capsys, "ideals", "--algebra", "taft", "--N", "2", "--format", "csv")
    assert out.splitlines()[0] == "s,t,dim"
    code, out, _ = run(capsys, "construct", "--algebra", "cyclic", "--n", "3", "--format", "table")
    assert code == 0 and "dim: 3" in out
    code, out, _ = run_json(capsys, "gram", "--algebra", "cdmm")
    assert out["monomial"] and not out["symmetric"]


def test_cyclotomic_field(capsys):
    code, out, _ = run_json(capsys, "construct", "--algebra", "taft", "--N", "3", "--cyclotomic-order", "3")
    assert code == 0 and out["field"] == {"kind": "cyclotomic", "n": 3}
