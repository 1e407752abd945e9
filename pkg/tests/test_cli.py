import json
import os
import subprocess
import sys

import jsonschema
import pytest

from polarinv.cli import main, render_text
from polarinv.schema import ERROR_SCHEMA, REPORT_SCHEMA

X_X2Y = ["--mode", "fiber", "--poly", "x + x^2*y", "--vars", "x,y", "--param", "t"]


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv, "--format", "json")
    data = json.loads(out)
    jsonschema.validate(data, ERROR_SCHEMA if code else REPORT_SCHEMA)
    return code, data


def test_analyze_x_x2y(capsys):
    code, rep = run_json(capsys, "analyze", *X_X2Y)
    assert code == 0
    assert rep["atypical_values"] == ["t"]
    top = rep["gamma_profile"][0]
    assert top["generic"] == 3
    assert top["atypical"][0] == {"min_poly": "t", "degree": 1, "gamma": 2, "value_sum": 2, "defect": 1}
    assert rep["lambda_profile"][0]["defects"] == [{"min_poly": "t", "lambda": 1}]
    verdicts = {v["c"]: v for v in rep["verdicts"]}
    assert not verdicts["0"]["t_equisingular_at_infinity"]
    fibers = {f["c"]: f for f in rep["fibers"]}
    assert fibers["0"]["chi"] == 1


def test_analyze_text(capsys):
    code, out, _ = run(capsys, "analyze", *X_X2Y, "--at", "0,1")
    assert code == 0
    assert "atypical values: {t = 0}" in out
    assert "verdict at 0: not t-equisingular at infinity" in out
    assert "verdict at 1: t-equisingular at infinity" in out


def test_analyze_x_x2yz(capsys):
    code, rep = run_json(capsys, "analyze", "--poly", "x + x^2*y*z", "--vars", "x,y,z", "--at", "0")
    assert code == 0
    (fiber,) = rep["fibers"]
    assert fiber["chi"] == 1
    lam2, lam1, _ = rep["verdicts"][0]["defects"]
    assert lam2 >= 1 and lam1 >= 1


def test_analyze_linear(capsys):
    code, rep = run_json(capsys, "analyze", "--mode", "general", "--poly", "x1 - t", "--vars", "x1,x2",
                         "--at", "0,1,-3/2")
    assert code == 0
    assert all(v["t_equisingular_at_infinity"] for v in rep["verdicts"])


def test_gamma(capsys):
    code, rep = run_json(capsys, "gamma", *X_X2Y, "--at", "0")
    assert code == 0
    assert rep["gamma_at"] == [{"c": "0", "gamma": [2, 3], "lambda": [1, 0]}]


def test_atypical(capsys):
    code, rep = run_json(capsys, "atypical", "--poly", "x^2+y^2", "--vars", "x,y")
    assert code == 0
    assert rep["atypical_values"] == []
    assert rep["singular_values"] == ["t"]
    _, out, _ = run(capsys, "atypical", "--poly", "x^2+y^2", "--vars", "x,y")
    assert "singular fibres: {t = 0}" in out


def test_euler(capsys):
    code, rep = run_json(capsys, "euler", *X_X2Y, "--at", "1")
    assert code == 0
    assert rep["fibers"][0]["chi"] == 0


def test_hypothesis_failure(capsys):
    code, rep = run_json(capsys, "analyze", "--poly", "x^2*y", "--vars", "x,y")
    assert code == 2
    assert rep["error"]["type"] == "HypothesisFailed"


def test_force(capsys):
    code, rep = run_json(capsys, "analyze", "--poly", "x^2*y", "--vars", "x,y", "--force", "--at", "0")
    assert code == 0
    assert rep["warnings"]
    assert all(v["implied"] == [] for v in rep["verdicts"])


@pytest.mark.parametrize("argv", [
    ["analyze", "--poly", "x^^2", "--vars", "x,y"],
    ["analyze", "--poly", "x + w", "--vars", "x,y"],
    ["analyze", "--poly", "x + t", "--vars", "x,y"],
    ["analyze", "--poly", "x", "--vars", "x,t"],
    ["analyze", "--poly", "x", "--vars", "x", "--at", "1/0"],
])
def test_usage_errors(capsys, argv):
    code, rep = run_json(capsys, *argv)
    assert code == 1
    assert rep["error"]["exit_code"] == 1


def test_argparse_errors_exit_1(capsys):
    with pytest.raises(SystemExit) as info:
        main(["analyze", "--poly", "x"])
    assert info.value.code == 1


def test_retries_exhausted(capsys):
    code, rep = run_json(capsys, "gamma", *X_X2Y, "--retries", "0")
    assert code == 3


def test_seed_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("POLARINV_SEED", "7")
    _, rep = run_json(capsys, "gamma", *X_X2Y)
    assert rep["generic_choice"]["seed"] == 7


def test_text_matches_json(capsys):
    _, rep = run_json(capsys, "analyze", *X_X2Y)
    _, out, _ = run(capsys, "analyze", *X_X2Y)
    assert out == render_text(rep)


def test_repeatable_in_process(capsys):
    outs = {run(capsys, "analyze", *X_X2Y, "--format", fmt, "--seed", "3")[1] for fmt in ("json",) * 3}
    assert len(outs) == 1


def test_byte_identical_across_processes():
    outputs = set()
    for hashseed in ("0", "1", "12345"):
        env = dict(os.environ, PYTHONHASHSEED=hashseed)
        env.pop("POLARINV_SEED", None)
        proc = subprocess.run(
            [sys.executable, "-m", "polarinv", "analyze", "--poly", "x + x^2*y*z", "--vars", "x,y,z",
             "--format", "json", "--seed", "11"],
            capture_output=True, env=env, check=True,
        )
        outputs.add(proc.stdout)
    assert len(outputs) == 1
