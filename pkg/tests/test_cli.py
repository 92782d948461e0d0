import csv
import json
import math
import subprocess
import sys

import pytest

from stadirac.cli import CSV_COLUMNS, ConfigError, RunConfig, main, run_check_algebra
from stadirac.sta_core import blade_mask, blade_mul

SUMMARY_KEYS = {"mode", "passed", "max_errors", "drift", "runtime_s"}


def write_config(tmp_path, cfg, name="cfg.json"):
    path = tmp_path / name
    path.write_text(json.dumps(cfg))
    return str(path)


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.reader(fh))


# configuration --------------------------------------------------------------------

def test_config_defaults_and_round_trip():
    cfg = RunConfig.from_dict({"mode": "simulate", "steps": 10, "seed": 4})
    assert cfg.steps == 10 and cfg.seed == 4 and cfg.cfl == 0.25
    assert cfg.grid_spec().dims == (64, 1, 1)
    assert cfg.tol("drift") == 1e-6


@pytest.mark.parametrize("raw", [
    {"mode": "simulate", "colour": 1},
    {"mode": "simulate", "grid": {"dims": [8, 1, 1], "spacing": 0.1}},
    {"mode": "simulate", "scenario": {"name": "zero", "extra": 1}},
    {"mode": "check-algebra", "tolerances": {"nonsense": 1.0}},
    {"mode": "dance"},
    {"mode": "simulate", "steps": -1},
])
def test_config_rejects_bad_documents(raw):
    with pytest.raises(ConfigError):
        RunConfig.from_dict(raw)


@pytest.mark.parametrize("raw", [
    {"colour": 1},
    {"grid": {"dims": [8, 1, 1], "spacing": 0.1}},
    {"mode": "check-lorentz"},
])
def test_cli_exit_code_two_on_bad_config(tmp_path, raw, capsys):
    assert main(["simulate", "--config", write_config(tmp_path, raw), "--out", str(tmp_path / "x.csv")]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_rejects_invalid_json(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("{not json")
    assert main(["check-algebra", "--config", str(path)]) == 2


def test_cli_rejects_missing_config(tmp_path):
    assert main(["check-algebra", "--config", str(tmp_path / "missing.json")]) == 2


# check modes -------------------------------------------------------------------------

def test_check_algebra_passes_and_counts_entries(tmp_path, capsys):
    out = tmp_path / "alg.json"
    assert main(["check-algebra", "--out", str(out)]) == 0
    summary = json.loads(out.read_text())
    assert SUMMARY_KEYS <= set(summary)
    assert summary["passed"] is True
    assert summary["counts"]["product_table_entries"] == 256
    assert summary["counts"]["roots_plus"] == 6 and summary["counts"]["roots_minus"] == 10
    assert "product_table_entries: 256" in capsys.readouterr().out


def test_check_algebra_names_injected_fault():
    target = (blade_mask("e1"), blade_mask("e2"))

    def faulty(a, b):
        sign, c = blade_mul(a, b)
        return (-sign, c) if (a, b) == target else (sign, c)

    rep = run_check_algebra(RunConfig(), mul=faulty)
    assert not rep.passed
    assert set(rep.failures) == {"product_table[e1*e2]", "product_table"}


def test_check_bilinears_passes(tmp_path):
    out = tmp_path / "bil.json"
    assert main(["check-bilinears", "--out", str(out), "--seed", "3"]) == 0
    summary = json.loads(out.read_text())
    errs = summary["max_errors"]
    for key in ("point_scalar", "point_pseudoscalar", "point_j", "point_j5", "point_project",
                "jet_analytic_lagrangian", "jet_analytic_momentum", "jet_analytic_angular_momentum"):
        assert errs[key] < 1e-12
    for key in ("jet_fd_lagrangian", "jet_fd_momentum", "jet_fd_angular_momentum"):
        assert errs[key] < 1e-6


def test_check_lorentz_passes(tmp_path):
    out = tmp_path / "lor.json"
    assert main(["check-lorentz", "--out", str(out)]) == 0
    summary = json.loads(out.read_text())
    names = {c["name"] for c in summary["checks"]}
    assert "full_turn_negates_w[e1^e2]" in names and "identity_rotor_unchanged" in names
    assert all(v < 1e-10 for v in summary["max_errors"].values())


def test_tightened_tolerance_fails_and_is_logged(tmp_path):
    cfg = write_config(tmp_path, {"samples": 50, "jet_samples": 5, "tolerances": {"jet_fd": 1e-30}})
    out = tmp_path / "bil.json"
    assert main(["check-bilinears", "--config", cfg, "--out", str(out)]) == 1
    summary = json.loads(out.read_text())
    assert summary["passed"] is False
    assert summary["tolerance_overrides"] == {"jet_fd": 1e-30}


# simulate ------------------------------------------------------------------------------

def simulate(tmp_path, cfg, name="run.csv"):
    out = tmp_path / name
    code = main(["simulate", "--config", write_config(tmp_path, cfg, name + ".json"), "--out", str(out)])
    summary = json.loads(out.with_name(out.stem + ".summary.json").read_text())
    return code, read_csv(out), summary


def test_simulate_plane_wave_short_run(tmp_path):
    code, rows, summary = simulate(tmp_path, {"steps": 40})
    assert code == 0
    assert rows[0] == CSV_COLUMNS
    assert len(rows) == 42
    assert [int(r[0]) for r in rows[1:]] == list(range(41))
    assert math.isnan(float(rows[1][-1])) and math.isnan(float(rows[-1][-1]))
    assert all(float(r[-1]) < 1e-3 for r in rows[2:-1])
    assert SUMMARY_KEYS <= set(summary)
    assert summary["drift"]["Q0_relative"] < 1e-6
    assert summary["max_errors"]["field_error_vs_analytic"] < 1e-6


def test_simulate_is_byte_deterministic(tmp_path):
    cfg = {"scenario": {"name": "noise", "params": {"seed": 5}}, "grid": {"dims": [16, 16, 1], "dx": 1 / 16},
           "steps": 10}
    simulate(tmp_path, cfg, "a.csv")
    simulate(tmp_path, cfg, "b.csv")
    assert (tmp_path / "a.csv").read_bytes() == (tmp_path / "b.csv").read_bytes()


def test_simulate_zero_field(tmp_path):
    code, rows, summary = simulate(tmp_path, {"scenario": {"name": "zero"}, "steps": 20})
    assert code == 0
    for r in rows[1:]:
        values = [float(v) for v in r[2:]]
        assert all(v == 0.0 or math.isnan(v) for v in values)
    assert summary["drift"]["Q0_relative"] == 0.0


def test_simulate_longitudinal_drift_and_standing_scalar_trace(tmp_path):
    code, rows, summary = simulate(tmp_path, {"scenario": {"name": "longitudinal"}, "steps": 200})
    assert code == 0 and summary["drift"]["Q0_relative"] < 1e-6
    code, rows, summary = simulate(
        tmp_path, {"scenario": {"name": "longitudinal", "params": {"direction": 0}}, "steps": 200}, "standing.csv")
    assert code == 0
    s_col = [float(r[CSV_COLUMNS.index("S")]) for r in rows[1:]]
    assert s_col[0] == pytest.approx(0.5, abs=1e-12)
    assert max(s_col) - min(s_col) > 0.5


def test_simulate_rejects_cfl_violation(tmp_path):
    cfg = write_config(tmp_path, {"cfl": 0.75, "steps": 3})
    assert main(["simulate", "--config", cfg, "--out", str(tmp_path / "c.csv")]) == 2
    cfg = write_config(tmp_path, {"dt": 0.1, "steps": 3})
    assert main(["simulate", "--config", cfg, "--out", str(tmp_path / "c.csv")]) == 2


def test_simulate_rejects_incommensurate_wave(tmp_path):
    cfg = write_config(tmp_path, {"scenario": {"name": "plane_wave", "params": {"wavenumber": 3.0}}})
    assert main(["simulate", "--config", cfg, "--out", str(tmp_path / "c.csv")]) == 2


def test_simulate_non_finite_abort_writes_marker_row(tmp_path):
    cfg = {"scenario": {"name": "plane_wave", "params": {"amplitude": 1e307}}, "steps": 20}
    code, rows, summary = simulate(tmp_path, cfg)
    assert code == 3
    assert rows[-1][0] == "ERROR"
    assert rows[0] == CSV_COLUMNS
    assert summary["passed"] is False and "non-finite" in summary["error"]


def test_module_entry_point(tmp_path):
    proc = subprocess.run([sys.executable, "-m", "stadirac", "check-algebra"], capture_output=True, text=True)
    assert proc.returncode == 0
    assert "check-algebra: PASSED" in proc.stdout
