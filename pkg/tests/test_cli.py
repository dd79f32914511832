import json
import subprocess
import sys

import numpy as np
import pytest

import orbitlab as ol


def run_cli(*args, input_text=None):
    return subprocess.run(
        [sys.executable, "-m", "orbitlab.cli", *args],
        capture_output=True, text=True, input=input_text)


@pytest.fixture(scope="module")
def problem_file(tmp_path_factory):
    rep = ol.alt_bilinear(ol.special_linear(6, "complex"))
    v0 = ol.standard_symplectic_form(6, "complex")
    path = tmp_path_factory.mktemp("cli") / "problem.json"
    path.write_text(json.dumps({
        "representation": rep.to_json(),
        "vector": ol.reps.vector_to_json(rep, v0),
    }))
    return path


def test_catalog_lists_example1():
    result = run_cli("catalog")
    assert result.returncode == 0
    names = {s["name"] for s in json.loads(result.stdout)["scenarios"]}
    assert "example1" in names


def test_closedness_of_zero_vector_exits_zero():
    rep = ol.alt_bilinear(ol.special_linear(6, "complex"))
    payload = json.dumps({
        "representation": rep.to_json(),
        "vector": ol.reps.vector_to_json(rep, np.zeros((6, 6), dtype=complex)),
    })
    result = run_cli("closedness", "--in", "-", input_text=payload)
    assert result.returncode == 0
    assert json.loads(result.stdout)["status"] == "closed"


def test_closedness_of_base_form(problem_file):
    result = run_cli("closedness", "--in", str(problem_file))
    assert result.returncode == 0
    verdict = json.loads(result.stdout)
    assert verdict["status"] == "closed"
    assert verdict["start_orbit_dim"] == 14


def test_minimal_subcommand(problem_file):
    result = run_cli("minimal", "--in", str(problem_file))
    assert result.returncode == 0
    assert json.loads(result.stdout)["minimal"] is True


def test_stabilizer_subcommand(problem_file):
    result = run_cli("stabilizer", "--in", str(problem_file))
    assert result.returncode == 0
    assert json.loads(result.stdout)["dimension"] == 21


def test_orbit_dim_with_subgroup(tmp_path):
    rep = ol.alt_bilinear(ol.special_linear(6, "complex"))
    g = np.eye(6, dtype=complex)
    g[0, 2] = 1.0
    x = ol.act(rep, g, ol.standard_symplectic_form(6, "complex"))
    path = tmp_path / "problem.json"
    path.write_text(json.dumps({
        "representation": rep.to_json(),
        "vector": ol.reps.vector_to_json(rep, x),
        "subgroup": ol.block_embedding(
            ol.special_linear(2, "complex"), 6, 0).to_json(),
    }))
    result = run_cli("orbit-dim", "--in", str(path))
    assert result.returncode == 0
    assert json.loads(result.stdout)["orbit_dim"] == 2


def test_reductive_subcommand():
    e12 = np.zeros((6, 6))
    e12[0, 1] = 1.0
    basis = ol.LieAlgebraBasis(np.array([e12], dtype=complex), "complex", 6)
    payload = json.dumps({"algebra": basis.to_json()})
    result = run_cli("reductive", "--in", "-", input_text=payload)
    assert result.returncode == 0
    assert json.loads(result.stdout)["verdict"] == "not_reductive"


def test_experiment_example1_exit_zero_and_keys(tmp_path):
    out = tmp_path / "report.json"
    result = run_cli("experiment", "--scenario", "example1",
                     "--out", str(out))
    assert result.returncode == 0
    report = json.loads(out.read_text())
    assert report["summary"]["stabilizer_dim"] == 1
    assert report["summary"]["h_orbit_status"] == "non_closed"
    assert report["passed"] is True


def test_experiment_zero_trials_is_config_error():
    result = run_cli("experiment", "--scenario", "example1", "--trials", "0")
    assert result.returncode == 2
    error = json.loads(result.stderr.strip().splitlines()[-1])
    assert error["error"] == "configuration"


def test_unknown_scenario_is_config_error():
    result = run_cli("experiment", "--scenario", "not-a-scenario")
    assert result.returncode == 2


def test_malformed_input_is_config_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    result = run_cli("closedness", "--in", str(path))
    assert result.returncode == 2


def test_non_theta_stable_group_is_config_error():
    # this form is not compatible with conjugate transpose, so no Cartan
    # split exists and the flow cannot run
    form = np.array([[0, 2, 0, 0], [-2, 0, 1, 0],
                     [0, -1, 0, 1], [0, 0, -1, 0]], dtype=float)
    rep = ol.sym2(ol.symplectic(form=form, field="real"))
    payload = json.dumps({
        "representation": rep.to_json(),
        "vector": ol.reps.vector_to_json(rep, np.eye(4)),
    })
    result = run_cli("closedness", "--in", "-", input_text=payload)
    assert result.returncode == 2
    error = json.loads(result.stderr.strip().splitlines()[-1])
    assert error["error"] == "configuration"


def test_experiment_reports_identical_across_workers(tmp_path):
    args = ["experiment", "--scenario", "sl4-block", "--trials", "6",
            "--seed", "11"]
    out1 = tmp_path / "w1.json"
    out2 = tmp_path / "w2.json"
    assert run_cli(*args, "--workers", "1", "--out", str(out1)).returncode == 0
    assert run_cli(*args, "--workers", "3", "--out", str(out2)).returncode == 0
    a = json.loads(out1.read_text())
    b = json.loads(out2.read_text())
    a.pop("wall_time_ms")
    b.pop("wall_time_ms")
    assert json.dumps(a, sort_keys=True) == json.dumps(b, sort_keys=True)


def test_experiment_csv_format(tmp_path):
    out = tmp_path / "report.csv"
    result = run_cli("experiment", "--scenario", "sym2-sum", "--trials", "4",
                     "--format", "csv", "--out", str(out))
    assert result.returncode == 0
    lines = out.read_text().strip().splitlines()
    assert len(lines) == 5
    assert lines[0].split(",")[0] == "index"


def test_experiment_kind_override():
    result = run_cli("experiment", "--scenario", "example1", "--kind",
                     "theorem1", "--trials", "4")
    assert result.returncode == 0
    report = json.loads(result.stdout)
    assert report["kind"] == "theorem1"
    assert report["summary"]["closed"] == 4
