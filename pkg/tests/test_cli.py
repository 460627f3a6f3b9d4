"""The command-line surface: formats, exit codes, determinism, file output."""

import json
import subprocess
import sys

import numpy as np
import pytest

from twospinors import fiber_projector, shell_point
from twospinors.cli import main

GAMMA0 = [
    [[0, 0], [0, 0], [0, 0], [-1, 0]],
    [[0, 0], [0, 0], [1, 0], [0, 0]],
    [[0, 0], [1, 0], [0, 0], [0, 0]],
    [[-1, 0], [0, 0], [0, 0], [0, 0]],
]


def run_json(capsys, argv):
    code = main([argv[0], "--format", "json"] + argv[1:])
    out = capsys.readouterr().out
    return code, json.loads(out)


# --- gamma -------------------------------------------------------------------


def test_gamma_json_payload(capsys):
    code, doc = run_json(capsys, ["gamma"])
    assert code == 0
    assert set(doc) >= {"header", "gamma0", "gamma1", "gamma2", "gamma3", "eta"}
    np.testing.assert_allclose(doc["gamma0"], GAMMA0, atol=1e-14)
    assert doc["relation_residual"] <= 1e-13
    assert doc["header"]["basis_order"] == "e1, e2, e1bar, e2bar"


def test_gamma_text_embeds_conventions(capsys):
    assert main(["gamma"]) == 0
    out = capsys.readouterr().out
    assert "2 h(X, Y) Id" in out
    assert "gamma0" in out


# --- lorentz -----------------------------------------------------------------


def test_lorentz_identity(capsys):
    code, doc = run_json(capsys, ["lorentz", "--", "1", "0", "0", "0", "0", "0", "1", "0"])
    assert code == 0
    np.testing.assert_allclose(doc["lorentz"], np.eye(4), atol=1e-14)
    assert doc["eta_defect"] <= 1e-12


def test_lorentz_boost_example(capsys):
    s = 2**0.5
    code, doc = run_json(
        capsys, ["lorentz", "--", repr(s), "0", "0", "0", "0", "0", repr(1 / s), "0"]
    )
    assert code == 0
    lam = np.asarray(doc["lorentz"])
    assert abs(lam[0, 0] - 1.25) <= 1e-12
    assert abs(lam[0, 3] - 0.75) <= 1e-12


def test_lorentz_rejects_bad_determinant(capsys):
    code = main(["lorentz", "--", "2", "0", "0", "0", "0", "0", "2", "0"])
    assert code == 3


# --- verify --------------------------------------------------------------------


def test_verify_passes(capsys):
    code, doc = run_json(capsys, ["verify", "--seed", "42", "--samples", "25"])
    assert code == 0
    assert doc["passed"] is True
    assert all(c["passed"] for c in doc["checks"])


def test_verify_corruption_fails_with_named_relation(capsys):
    code, doc = run_json(
        capsys, ["verify", "--seed", "42", "--samples", "5", "--corrupt-gamma", "0,0,1"]
    )
    assert code == 1
    bad = [c for c in doc["checks"] if not c["passed"]]
    assert bad and any("gamma(" in c["detail"] for c in bad)


# --- solve ---------------------------------------------------------------------


def test_solve_rest_solutions(capsys):
    code, doc = run_json(capsys, ["solve", "-m", "1", "--", "0", "0", "0"])
    assert code == 0
    psis = [sol["psi"] for sol in doc["solutions"]]
    assert psis[0] == [[1, 0], [0, 0], [0, 0], [-1, 0]]
    assert psis[1] == [[0, 0], [1, 0], [1, 0], [0, 0]]
    assert all(sol["residual"] == 0 for sol in doc["solutions"])


def test_solve_boosted_residual(capsys):
    code, doc = run_json(capsys, ["solve", "-m", "1", "--", "0", "0", "0.75"])
    assert code == 0
    np.testing.assert_allclose(doc["momentum"], [1.25, 0, 0, 0.75], atol=1e-12)
    assert all(sol["residual"] <= 1e-10 for sol in doc["solutions"])


def test_solve_solutions_fixed_by_projector(capsys):
    code, doc = run_json(capsys, ["solve", "-m", "1.5", "--", "0.4", "-0.2", "0.9"])
    assert code == 0
    q = shell_point(1.5, 0.4, -0.2, 0.9)
    proj = fiber_projector(q)
    for sol in doc["solutions"]:
        psi = np.array([complex(re, im) for re, im in sol["psi"]])
        np.testing.assert_allclose(proj @ psi, psi, atol=1e-10)


def test_solve_rejects_bad_mass(capsys):
    assert main(["solve", "-m", "-1", "--", "0", "0", "0"]) == 3


# --- planewave-check --------------------------------------------------------------


def test_planewave_check_rest(capsys):
    code, doc = run_json(
        capsys, ["planewave-check", "-m", "1", "--step", "1e-3", "--", "0", "0", "0"]
    )
    assert code == 0
    assert doc["residual"] <= 1e-5
    assert doc["mode"] == "central-difference"


def test_planewave_check_halving_quarters(capsys):
    def args(step):
        return ["planewave-check", "-m", "1", "--point", "0.1", "0.2", "-0.3", "0.5",
                "--step", step, "--", "0.5", "0.3", "0.4"]

    _, doc1 = run_json(capsys, args("1e-2"))
    _, doc2 = run_json(capsys, args("5e-3"))
    assert 3.6 <= doc1["residual"] / doc2["residual"] <= 4.4


def test_planewave_check_analytic(capsys):
    code, doc = run_json(
        capsys, ["planewave-check", "-m", "1", "--analytic", "--", "0.5", "0.3", "0.4"]
    )
    assert code == 0
    assert doc["mode"] == "analytic"
    assert doc["residual"] <= 1e-12


def test_planewave_check_rejects_bad_step(capsys):
    assert main(["planewave-check", "-m", "1", "--step", "-1", "--", "0", "0", "0"]) == 3


# --- sample-field -------------------------------------------------------------------


def read_records(path):
    lines = path.read_text(encoding="utf-8").splitlines()
    header = json.loads(lines[0])
    records = [json.loads(line) for line in lines[1:]]
    return header, records


def test_sample_field_single_node(tmp_path, capsys):
    out = tmp_path / "field.ndjson"
    code = main(["sample-field", "-m", "1", "--grid", "1:0:0", "--out", str(out)])
    assert code == 0
    header, records = read_records(out)
    assert header["record"] == "header"
    assert header["schema"] == 1
    assert "clifford_anticommutator" in header
    assert len(records) == 2
    assert records[0]["s"] == [[1, 0], [0, 0]]
    assert records[1]["s"] == [[0, 0], [1, 0]]


def test_sample_field_conjugate_pair_exact(tmp_path, capsys):
    out = tmp_path / "field.ndjson"
    assert main(["sample-field", "-m", "1", "--grid", "3:-1:1", "--out", str(out)]) == 0
    _, records = read_records(out)
    assert len(records) == 2 * 27
    for rec in records:
        assert rec["residual"] <= 1e-9
        assert rec["ok"] is True
        s = [complex(re, im) for re, im in rec["s"]]
        sbar = [complex(re, im) for re, im in rec["sbar"]]
        assert sbar == [z.conjugate() for z in s]


def test_sample_field_byte_identical(tmp_path, capsys):
    a, b = tmp_path / "a.ndjson", tmp_path / "b.ndjson"
    argv = ["sample-field", "-m", "1", "--grid", "4:-2:2", "--seed", "9"]
    assert main(argv + ["--out", str(a)]) == 0
    assert main(argv + ["--out", str(b)]) == 0
    assert a.read_bytes() == b.read_bytes()


def test_sample_field_rapidity_grid(tmp_path, capsys):
    out = tmp_path / "field.ndjson"
    assert main(
        ["sample-field", "-m", "2", "--grid", "3:-1:1", "--rapidity", "--out", str(out)]
    ) == 0
    header, records = read_records(out)
    assert header["grid"]["kind"] == "rapidity"
    # extreme axis value is m*sinh(1) in each spatial direction
    p3_values = {rec["p"][3] for rec in records}
    assert any(abs(v - 2 * np.sinh(1.0)) <= 1e-12 for v in p3_values)


def test_sample_field_io_error_mentions_path(tmp_path, capsys):
    missing = tmp_path / "no" / "such" / "dir" / "f.ndjson"
    code = main(["sample-field", "-m", "1", "--grid", "1:0:0", "--out", str(missing)])
    assert code == 1
    err = capsys.readouterr().err
    assert str(missing) in err


# --- process-level behavior ----------------------------------------------------------


def test_usage_error_exit_code():
    proc = subprocess.run(
        [sys.executable, "-m", "twospinors", "frobnicate"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 2


def test_module_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "twospinors", "gamma", "--format", "json"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    doc = json.loads(proc.stdout)
    assert doc["relation_residual"] <= 1e-13
