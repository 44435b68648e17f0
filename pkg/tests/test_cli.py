import json
import math
import subprocess
import sys

import pytest

from lauricella_fc.cli import (ConfigError, _load_config, dumps_report, main,
                               run)


def _args(**kw):
    class NS:
        config = None
        out = None
        seed = None
        trials = None
        tol = None
        timing = False

    ns = NS()
    for key, val in kw.items():
        setattr(ns, key, val)
    return ns


def _run_config(raw, **argkw):
    return run(_load_config(raw, _args(**argkw)))


TPR_CONFIG = {"command": "tpr", "m": 1, "a": [0.3, 0.0], "b": [0.45, 0.0],
              "c": [[0.7, 0.0]], "x": [[0.05, 0.0]], "seed": 7}


def test_tpr_report_has_three_passing_identities(capsys):
    report, status = _run_config(dict(TPR_CONFIG))
    assert status == 0
    assert report["verdict"] == "pass"
    names = [rep["identity"] for rep in report["results"]["groups"][0]["identities"]]
    assert names == ["tpr1_reduced", "tpr2_reduced", "tpr1_raw"]
    assert all(rep["verdict"] == "pass"
               for rep in report["results"]["groups"][0]["identities"])
    assert list(report) == ["command", "inputs", "results", "verdict", "runtime_ms"]
    assert report["runtime_ms"] == 0


def test_ic_flag_table_m2(capsys):
    report, status = _run_config({"command": "ic", "m": 2, "a": 0.3, "b": 0.45,
                                  "c": [0.7, 0.85]})
    assert status == 0
    res = report["results"]
    assert res["flag_count"] == 2
    assert res["flags"] == [[[1]], [[2]]]
    assert res["phi_phiprime"] == [0.0, 0.0]


def test_eval_at_origin(capsys):
    report, status = _run_config({"command": "eval", "m": 2, "a": 0.3, "b": 0.45,
                                  "c": [0.7, 0.85], "x": [0, 0]})
    assert status == 0
    assert report["results"]["value"] == [1.0, 0.0]
    assert report["results"]["order"] == 0


def test_config_errors():
    for raw in [
        {"command": "bogus", "m": 1},
        {"command": "tpr", "m": 0},
        {"command": "tpr", "m": 2, "a": 0.3, "b": 0.45, "c": [0.7]},
        {"command": "eval", "m": 1, "a": 0.3, "b": 0.45, "c": [0.7]},
        {"command": "tpr", "m": 1, "a": 0.3, "b": 0.45, "c": [0.7],
         "x": [0.05], "nonsense": 1},
        {"command": "euler", "m": 2, "a": 0.3, "b": 0.45, "c": [0.7, 0.85],
         "x": [0.01, 0.01]},
    ]:
        with pytest.raises(ConfigError):
            _run_config(raw)


def test_nongeneric_parameters_rejected():
    with pytest.raises(ConfigError):
        _run_config({"command": "eval", "m": 1, "a": 1.0, "b": 0.45,
                     "c": [0.7], "x": [0.01]})


def test_verification_failure_exit_code(capsys):
    report, status = _run_config(dict(TPR_CONFIG), tol=1e-20)
    assert status == 1
    assert report["verdict"] == "fail"


def test_float_serialization_round_trips():
    report, _ = _run_config(dict(TPR_CONFIG))
    text = dumps_report(report)
    parsed = json.loads(text)
    lhs = parsed["results"]["groups"][0]["identities"][0]["lhs"]
    orig = report["results"]["groups"][0]["identities"][0]["lhs"]
    assert lhs == orig  # 17 significant digits round-trip exactly
    assert "0.29999999999999999" in text


def test_seeded_trials_are_deterministic(capsys):
    raw = {"command": "tpr", "m": 2, "seed": 42, "trials": 3}
    rep_a, status_a = _run_config(dict(raw))
    rep_b, status_b = _run_config(dict(raw))
    assert status_a == status_b == 0
    assert dumps_report(rep_a) == dumps_report(rep_b)
    groups = rep_a["results"]["groups"]
    assert len(groups) == 3
    # m=2 trials include the raw identity
    assert [r["identity"] for r in groups[0]["identities"]] == [
        "tpr1_reduced", "tpr2_reduced", "tpr1_raw"]


def test_cli_process_round_trip(tmp_path):
    cfg = tmp_path / "job.json"
    cfg.write_text(json.dumps(TPR_CONFIG))
    out1 = tmp_path / "rep1.json"
    out2 = tmp_path / "rep2.json"
    for out in (out1, out2):
        proc = subprocess.run(
            [sys.executable, "-m", "lauricella_fc.cli",
             "--config", str(cfg), "--out", str(out)],
            capture_output=True, text=True)
        assert proc.returncode == 0, proc.stderr
    assert out1.read_bytes() == out2.read_bytes()
    report = json.loads(out1.read_text())
    assert report["verdict"] == "pass"


def test_cli_stdin_stdout(tmp_path, monkeypatch, capsys):
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(
        {"command": "ih", "m": 1, "a": 0.3, "b": 0.45, "c": [0.7]})))
    status = main([])
    captured = capsys.readouterr()
    assert status == 0
    report = json.loads(captured.out)
    assert report["command"] == "ih"
    assert len(report["results"]["diagonal"]) == 2


def test_cli_bad_config_no_partial_report(capsys):
    status = main(["--config", "/nonexistent/path.json"])
    captured = capsys.readouterr()
    assert status == 2
    assert captured.out == ""
    assert "cannot read config" in captured.err


def test_pde_command_with_degree(capsys):
    report, status = _run_config({"command": "pde", "m": 1, "a": 0.3, "b": 0.45,
                                  "c": [0.7], "degree": 12})
    assert status == 0
    labels = [e["subset"] for e in report["results"]["groups"][0]["residuals"]]
    assert labels == [None, [1]]
    assert report["results"]["worst_residual"] <= 1e-12


def test_euler_command(capsys):
    report, status = _run_config({"command": "euler", "m": 1, "a": 0.2, "b": 0.3,
                                  "c": [0.9], "x": [0.05]})
    assert status == 0
    assert report["results"]["checks"][0]["report"]["verdict"] == "pass"


def test_basis_command_with_values(capsys):
    report, status = _run_config({"command": "basis", "m": 2, "a": 0.3, "b": 0.45,
                                  "c": [0.7, 0.85], "x": [0.01, 0.02]})
    assert status == 0
    res = report["results"]
    assert res["count"] == 4 and res["distinct_prefactor_exponents"]
    assert all("value" in sol for sol in res["solutions"])


def test_timing_flag_fills_runtime(capsys):
    report, _ = _run_config(dict(TPR_CONFIG), timing=True)
    assert isinstance(report["runtime_ms"], int)


def test_non_finite_numbers_rejected():
    with pytest.raises(ValueError):
        dumps_report({"bad": math.inf})
