"""End-to-end checks of the command-line tool."""

import json
import os
import subprocess

import pytest

CLI = os.environ.get("LGK3_CLI")

pytestmark = pytest.mark.skipif(CLI is None, reason="LGK3_CLI not set")


def run(*args, check=True, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    proc = subprocess.run(
        [CLI, *args], capture_output=True, text=True, env=full_env
    )
    if check:
        assert proc.returncode == 0, proc.stderr
    return proc


def test_eval_family(tmp_path):
    out = tmp_path / "eval.json"
    proc = run(
        "eval",
        "--family",
        "pi/5,0.7,1.2,0.5,0.3",
        "--format",
        "json",
        "--out",
        str(out),
    )
    assert "K3  = 1.5" in proc.stdout
    payload = json.loads(out.read_text())["payload"]
    assert abs(payload["k3"] - 1.5) < 1e-12
    assert payload["map12"]["unital"] is True
    assert len(payload["map12"]["record"]) == 12


def test_eval_rejects_non_cp_map():
    proc = run("eval", "--map12", "diag:1,1,-1", "--map23", "identity", check=False)
    assert proc.returncode == 2
    assert "completely-positive check failed" in proc.stderr


def test_eval_positive_only_constraint():
    proc = run(
        "eval",
        "--map12",
        "diag:1,1,-1",
        "--map23",
        "identity",
        "--constraint",
        "positive",
    )
    assert "K3  = 1" in proc.stdout


def test_check_reports_flags(tmp_path):
    out = tmp_path / "check.csv"
    run("check", "--map", "diag:1,1,-1", "--out", str(out))
    header, row = out.read_text().strip().splitlines()
    cells = dict(zip(header.split(","), row.split(",")))
    assert cells["completely_positive"] == "0"
    assert cells["positive"] == "1"
    assert cells["divisibility_witness"] == "0"
    assert cells["determinant"] == "-1"


def test_outputs_are_byte_identical(tmp_path):
    a, b = tmp_path / "a.csv", tmp_path / "b.csv"
    args = ["maximize", "--constraint", "shrink=0.4", "--grid", "7", "--seed", "9"]
    run(*args, "--out", str(a))
    run(*args, "--out", str(b))
    assert a.read_bytes() == b.read_bytes()
    header = a.read_text().splitlines()[0]
    assert header.startswith("best_k3,evaluations,constraint_violations")


def test_sweep_csv_schema(tmp_path):
    out = tmp_path / "sweep.csv"
    run("sweep", "--grid", "7", "--s-values", "0.5,1.0", "--out", str(out))
    lines = out.read_text().strip().splitlines()
    assert lines[0].startswith("s,max_k3")
    assert len(lines) == 3
    s, k3 = lines[1].split(",")[:2]
    assert abs(float(s) - 0.5) < 1e-15
    assert abs(float(k3) - 1.125) < 1e-6


def test_trajectory_csv_schema(tmp_path):
    out = tmp_path / "traj.csv"
    run(
        "trajectory",
        "--family",
        "0.3,0.5,0.2,0.6,0.7",
        "--samples",
        "5",
        "--out",
        str(out),
    )
    lines = out.read_text().strip().splitlines()
    assert lines[0] == "leg,step,x,y,z"
    assert len(lines) == 11
    last = lines[-1].split(",")
    assert last[0] == "1" and last[1] == "4"
    assert abs(float(last[4]) + 0.5) < 1e-12


def test_reversed_trajectory_endpoint(tmp_path):
    out = tmp_path / "rev.csv"
    run(
        "trajectory",
        "--family",
        "0.3,0.5,0.2,0.6,0.7",
        "--order",
        "reversed",
        "--samples",
        "5",
        "--out",
        str(out),
    )
    last = out.read_text().strip().splitlines()[-1].split(",")
    import math

    expected = 0.25 * (1 - 3 * 0.6 * 0.7 * math.cos(0.5 + 0.2))
    assert abs(float(last[4]) - expected) < 1e-12


def test_config_file_with_flag_override(tmp_path):
    cfg = tmp_path / "exp.cfg"
    cfg.write_text(
        "# family point\n"
        "family = 0.1,0.2,0.3,0.5,0.5\n"
        "format = json\n"
        "out = from_config.json\n"
    )
    out = tmp_path / "override.json"
    proc = run("eval", "--config", str(cfg), "--out", str(out))
    assert out.exists()
    record = json.loads(out.read_text())
    assert record["input"]["family"] == "0.1,0.2,0.3,0.5,0.5"
    assert "K3  = 1.5" in proc.stdout


def test_out_dir_environment(tmp_path):
    run(
        "eval",
        "--family",
        "0,0,0,0.5,0.5",
        "--out",
        "nested/result.csv",
        env={"LGK3_OUT_DIR": str(tmp_path)},
    )
    assert (tmp_path / "nested" / "result.csv").exists()


def test_maximize_reversed_order():
    proc = run(
        "maximize",
        "--order",
        "reversed",
        "--family",
        "0,0,0,0.9,0.9",
        "--grid",
        "9",
    )
    line = [l for l in proc.stdout.splitlines() if l.startswith("best K3")][0]
    assert abs(float(line.split("=")[1]) - 1.3575) < 1e-6


def test_missing_required_setting():
    proc = run("eval", check=False)
    assert proc.returncode == 2
    assert "map12" in proc.stderr


def test_unknown_flag_is_validation_failure():
    proc = run("eval", "--nonsense", "1", check=False)
    assert proc.returncode == 2
