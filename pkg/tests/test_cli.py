import csv
import json
from pathlib import Path

import pytest

from framepcm.cli import EXIT_CHECK_FAILED, EXIT_CONFIG, EXIT_OK, EXIT_PRECISION, main


def run(tmp_path, *argv):
    return main(["--outdir", str(tmp_path)] + list(argv))


def read_csv(path):
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def test_verify(tmp_path):
    assert run(tmp_path, "verify", "--max", "8") == EXIT_OK
    rows = read_csv(tmp_path / "verify.csv")
    assert len(rows) == 6 and all(r["ok"] == "True" for r in rows)


def test_bessel_grid(tmp_path):
    assert run(tmp_path, "bessel", "--orders", "1", "2.5", "--xs", "1", "10", "30") == EXIT_OK
    rows = read_csv(tmp_path / "bessel.csv")
    assert len(rows) == 6
    assert all(r["envelope_ok"] == "True" for r in rows)


def test_limit_all_methods(tmp_path):
    code = run(tmp_path, "limit", "--d", "3", "--r", "10.25", "--delta", "1",
               "--methods", "all", "--samples", "50000", "--seed", "1")
    assert code == EXIT_OK
    rows = read_csv(tmp_path / "limit.csv")
    assert {r["method"] for r in rows} == {"quadrature", "bessel_series", "monte_carlo"}
    assert list(rows[0].keys()) == ["r", "delta", "eps", "d", "method", "value", "error_estimate"]


def test_limit_rerun_from_config_reproduces(tmp_path):
    out1 = tmp_path / "a"
    out2 = tmp_path / "b"
    assert main(["--outdir", str(out1), "limit", "--d", "3", "--r", "7.25",
                 "--delta", "1", "--methods", "monte_carlo",
                 "--samples", "20000", "--seed", "3"]) == EXIT_OK
    cfg = out1 / "run_config_limit.json"
    assert cfg.exists()
    assert main(["--outdir", str(out2), "--config", str(cfg)]) == EXIT_OK
    assert (out1 / "limit.csv").read_text() == (out2 / "limit.csv").read_text()


def test_bounds_point_and_slope(tmp_path):
    assert run(tmp_path, "bounds", "--d", "5", "--r", "100.25", "--delta", "1") == EXIT_OK
    code = run(tmp_path, "bounds", "--slope", "--d-list", "3", "--eps", "0.25",
               "--kmin", "60", "--kmax", "300", "--points", "5")
    assert code == EXIT_OK
    rows = read_csv(tmp_path / "slopes.csv")
    assert rows[0]["ok"] == "True"


def test_bounds_defect_cell_fails(tmp_path):
    code = run(tmp_path, "bounds", "--d", "4", "--r", "100.375", "--delta", "1")
    assert code == EXIT_CHECK_FAILED


def test_simulate(tmp_path):
    assert run(tmp_path, "simulate", "--d", "2", "--N", "4000", "--delta", "0.5",
               "--r", "3.26", "--seed", "2", "--frame", "harmonic") == EXIT_OK
    rows = read_csv(tmp_path / "simulate.csv")
    assert rows[0]["frame"] == "harmonic"
    assert float(rows[0]["E_delta"]) > 0


def test_report_and_plot_script(tmp_path):
    run(tmp_path, "verify", "--max", "5")
    out = tmp_path / "summary.json"
    script = tmp_path / "plot.py"
    assert run(tmp_path, "report", "--inputs", str(tmp_path / "verify.csv"),
               "--out", str(out), "--plot-script", str(script)) == EXIT_OK
    summary = json.loads(out.read_text())
    entry = summary[str(tmp_path / "verify.csv")]
    assert entry["rows"] == 6 and entry["ok_failures"] == 0
    assert "matplotlib" in script.read_text()


def test_exit_codes(tmp_path):
    assert run(tmp_path, "limit", "--d", "1", "--r", "5", "--delta", "1") == EXIT_CONFIG
    assert run(tmp_path, "limit", "--d", "3", "--r", "5.5", "--delta", "1",
               "--methods", "bessel_series", "--tol", "1e-30") == EXIT_PRECISION
    with pytest.raises(SystemExit) as info:
        main(["limit", "--bogus", "3"])  # unknown flag -> argparse config error
    assert info.value.code == 2


def test_no_subcommand_is_config_error(tmp_path):
    assert run(tmp_path) == EXIT_CONFIG
