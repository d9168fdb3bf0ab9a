import json
import math
import subprocess
import sys
from pathlib import Path

import numpy as np
import pytest

from seplane.cli import main
from seplane.schemas import load_schema, validate


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def tail_json(csv_text: str) -> dict:
    lines = [l[2:] for l in csv_text.splitlines() if l.startswith("# ")]
    return json.loads("\n".join(lines))


class TestParamsCommand:
    def test_cubic_reference_values(self, capsys):
        code, out, _ = run_cli(capsys, "params", "-p", "2", "-q", "3", "-c", "0")
        assert code == 0
        doc = json.loads(out)
        validate(doc, load_schema("params"))
        assert doc["beta_q"] == 1.0
        assert doc["lambda_q"] == 1.0
        assert doc["c_q"] == 1.0
        assert doc["b"] == -1.0 and doc["d"] == 0.0
        assert doc["M_q"] == pytest.approx(1.0, rel=1e-10)
        assert doc["mode_bounds"]["k_q"] == 2
        assert doc["mode_bounds"]["positive_modes"] == []

    def test_p1_values(self, capsys):
        code, out, _ = run_cli(capsys, "params", "-p", "1", "-q", "2", "-c", "0")
        assert code == 0
        doc = json.loads(out)
        assert doc["c_q"] == -1.0
        assert doc["b"] == 1.0 and doc["d"] == 0.0

    def test_center_metadata(self, capsys):
        code, out, _ = run_cli(capsys, "params", "-p", "2", "-q", "3", "-c", "2")
        doc = json.loads(out)
        assert doc["a"] == pytest.approx(1.0)
        assert doc["m_d"] == pytest.approx(1.0, abs=1e-10)
        assert doc["regime"]["b_plus_d_positive"]

    def test_invalid_exponent_exits_2(self, capsys):
        code, _, err = run_cli(capsys, "params", "-p", "0.5", "-q", "3", "-c", "0")
        assert code == 2
        assert "invalid input" in err


class TestOrbitCommand:
    def test_p1_circle(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "-p", "1", "-q", "2", "-c", "0",
                               "--start", "0", "2", "--span", "7")
        assert code == 0
        meta = tail_json(out)
        validate(meta, load_schema("orbit_meta"))
        assert meta["orbit_class"] == "closed-around-origin"
        rows = np.array([l.split(",") for l in out.splitlines()
                         if l and not l.startswith(("#", "tau"))], dtype=float)
        radii = np.hypot(rows[:, 1], rows[:, 2])
        assert np.max(np.abs(radii - 2.0)) < 1e-8
        y_events = [e for e in meta["events"] if e["kind"] == "y=0"]
        assert abs(y_events[0]["tau"] - math.pi / 2.0) < 1e-9

    def test_homoclinic_metadata(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "2",
                               "--homoclinic")
        assert code == 0
        meta = tail_json(out)
        assert meta["homoclinic"]["m_d"] == pytest.approx(1.0, abs=1e-10)
        assert meta["homoclinic"]["apex_w"] == pytest.approx(math.sqrt(2.0), abs=1e-8)

    def test_stationary_start(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "2",
                               "--start", "1", "0")
        assert code == 0
        rows = [l for l in out.splitlines() if l and not l.startswith(("#", "tau"))]
        assert len(rows) == 1
        meta = tail_json(out)
        assert meta.get("stationary") is True

    def test_first_integral_drift_reported(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "0",
                               "--start", "0", "1", "--span", "10")
        meta = tail_json(out)
        assert meta["first_integral_drift"] < 1e-8

    def test_json_format(self, capsys):
        code, out, _ = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "0",
                               "--start", "0", "1", "--span", "3",
                               "--format", "json")
        assert code == 0
        doc = json.loads(out)
        assert doc["orbit_class"] == "closed-around-origin"
        assert len(doc["samples"]) > 100

    def test_missing_start(self, capsys):
        code, _, err = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "0")
        assert code == 2


class TestPeriodScanCommand:
    def test_p1_constant_scan(self, capsys):
        code, out, _ = run_cli(capsys, "period-scan", "-p", "1", "-q", "2",
                               "-c", "0", "--kind", "positive",
                               "--grid", "0.1:0.9:7")
        assert code == 0
        assert "# verdict: constant" in out
        rows = [l.split(",") for l in out.splitlines()
                if l and not l.startswith(("#", "amplitude"))]
        for row in rows:
            assert abs(float(row[1]) - 2.0 * math.pi) < 1e-8

    def test_sign_changing_decreasing(self, capsys):
        code, out, _ = run_cli(capsys, "period-scan", "-p", "2", "-q", "3",
                               "-c", "0", "--kind", "sign-changing",
                               "--grid", "0.01:100:12:log")
        assert code == 0
        assert "# verdict: decreasing" in out

    def test_partial_failure_rows(self, capsys):
        # amplitudes beyond the admissible interval flush error rows, exit 3
        code, out, _ = run_cli(capsys, "period-scan", "-p", "1", "-q", "2",
                               "-c", "0", "--kind", "positive",
                               "--grid", "0.5:1.5:3")
        assert code == 3
        rows = [l.split(",") for l in out.splitlines()
                if l and not l.startswith(("#", "amplitude"))]
        assert any(r[-1] for r in rows)       # error marker populated
        assert any(not r[-1] for r in rows)   # good rows still flushed

    def test_bad_grid(self, capsys):
        code, _, err = run_cli(capsys, "period-scan", "-p", "2", "-q", "3",
                               "-c", "0", "--kind", "sign-changing",
                               "--grid", "5:1:0")
        assert code == 2


class TestSolveSetCommand:
    def test_p1_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "solve-set", "-p", "1", "-q", "2", "-c", "3")
        assert code == 0
        doc = json.loads(out)
        validate(doc, load_schema("solution_set"))
        assert [e["k"] for e in doc["positive"]] == [3]
        assert doc["constants"] == [pytest.approx(2.0)]

    def test_cubic_modes_stdout(self, capsys):
        code, out, _ = run_cli(capsys, "solve-set", "-p", "2", "-q", "3",
                               "-c", "0", "--k-max", "3")
        assert code == 0
        doc = json.loads(out)
        assert [e["k"] for e in doc["sign_changing"]] == [2, 3]
        assert doc["positive"] == [] and doc["constants"] == []
        assert all(e["passed"] for e in doc["sign_changing"])

    def test_output_directory(self, capsys, tmp_path):
        code, _, _ = run_cli(capsys, "solve-set", "-p", "1", "-q", "2", "-c", "3",
                             "--out", str(tmp_path))
        assert code == 0
        doc = json.loads((tmp_path / "solution_set.json").read_text())
        validate(doc, load_schema("solution_set"))
        csvs = sorted(p.name for p in tmp_path.glob("*.csv"))
        assert csvs == ["mode_pos_k3.csv"]
        header, first = (tmp_path / "mode_pos_k3.csv").read_text().splitlines()[:2]
        assert header == "sigma,omega"
        assert float(first.split(",")[1]) > 0.0


class TestSectorCommand:
    def test_boundary(self, capsys):
        code, out, _ = run_cli(capsys, "sector", "-p", "2", "-q", "3",
                               "--theta", repr(math.pi))
        assert code == 0
        doc = json.loads(out)
        validate(doc, load_schema("sector"))
        assert doc["exists"] is False

    def test_exists(self, capsys):
        code, out, _ = run_cli(capsys, "sector", "-p", "2", "-q", "5",
                               "--theta", repr(math.pi))
        assert json.loads(out)["exists"] is True

    def test_shortcut(self, capsys):
        code, out, _ = run_cli(capsys, "sector", "-p", "1.5", "-q", "2.5",
                               "--theta", "5.0")
        doc = json.loads(out)
        assert doc["exists"] and doc["unconditional"]

    def test_domain(self, capsys):
        code, _, _ = run_cli(capsys, "sector", "-p", "2", "-q", "3",
                             "--theta", "7.0")
        assert code == 2


class TestReproducibility:
    def test_bit_identical_reruns(self, capsys):
        argv = ["params", "-p", "2.5", "-q", "4", "-c", "1.5"]
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2

    def test_orbit_reruns(self, capsys):
        argv = ["orbit", "-p", "2", "-q", "3", "-c", "0",
                "--start", "0.3", "0.4", "--span", "5"]
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2

    def test_solve_set_reruns(self, capsys):
        argv = ["solve-set", "-p", "1", "-q", "2", "-c", "3"]
        _, out1, _ = run_cli(capsys, *argv)
        _, out2, _ = run_cli(capsys, *argv)
        assert out1 == out2


class TestConfigAndChecks:
    def test_config_file(self, capsys, tmp_path):
        cfg = tmp_path / "integ.cfg"
        cfg.write_text("rel_tol = 1e-8\nabs_tol = 1e-10\n")
        code, out, _ = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "0",
                               "--start", "0", "1", "--span", "3",
                               "--config", str(cfg))
        assert code == 0

    def test_bad_config_key(self, capsys, tmp_path):
        cfg = tmp_path / "integ.cfg"
        cfg.write_text("order = 7\n")
        code, _, err = run_cli(capsys, "orbit", "-p", "2", "-q", "3", "-c", "0",
                               "--start", "0", "1", "--config", str(cfg))
        assert code == 2

    def test_paper_check_sector(self, capsys):
        code, out, _ = run_cli(capsys, "sector", "-p", "2", "-q", "3",
                               "--theta", "1.0", "--paper-check")
        assert code == 0
        assert "criterion 10" in out and "PASS" in out

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "seplane", "params", "-p", "2", "-q", "3"],
            capture_output=True, text=True,
            cwd=Path(__file__).resolve().parents[1],
            env={"PYTHONPATH": "src", "PATH": "/usr/bin:/bin"})
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["beta_q"] == 1.0
