"""Command-line surface: JSON in/out, exit codes, determinism."""

import json

import numpy as np
import pytest

from gft.cli import main
from gft.series import SchlichtSeries, from_json, to_json


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def write_series(tmp_path, name, coeffs):
    path = tmp_path / name
    path.write_text(to_json(SchlichtSeries.from_coeffs(coeffs)) + "\n")
    return str(path)


def test_kernel_geometric(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--sigma", "1", "--n", "1", "--order", "4")
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, 1, 1, 1])


def test_kernel_counting_and_inverse(capsys):
    code, out, _ = run_cli(capsys, "kernel", "--sigma", "1", "--n", "0", "--order", "4")
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, 2, 3, 4])
    code, out, _ = run_cli(capsys, "kernel", "--sigma", "1", "--n", "0", "--order", "4", "--inverse")
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, 0.5, 1 / 3, 0.25])


def test_kernel_rejects_invalid_parameters(capsys):
    code, out, err = run_cli(capsys, "kernel", "--sigma", "0.5", "--n", "2")
    assert code == 2
    assert out == ""
    assert err.startswith("gft: error:")


def test_default_order_env_is_honored(capsys, monkeypatch):
    monkeypatch.setenv("GFT_DEFAULT_ORDER", "16")
    code, out, _ = run_cli(capsys, "kernel", "--sigma", "1", "--n", "1")
    assert code == 0
    assert from_json(out).order == 16


def test_apply_raising_operator(capsys, tmp_path):
    infile = write_series(tmp_path, "f.json", [0.0, 1.0, 1.0])
    code, out, _ = run_cli(capsys, "apply", "--op", "L", "--sigma", "1", "--n", "1", "--in", infile)
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, 2])


def test_apply_round_trip_through_files(capsys, tmp_path):
    infile = write_series(tmp_path, "f.json", [0.0, 1.0, 0.5, -0.25, 0.125])
    lowered = tmp_path / "lowered.json"
    code, _, _ = run_cli(capsys, "apply", "--op", "l", "--sigma", "3.5", "--n", "2",
                         "--in", infile, "--out", str(lowered))
    assert code == 0
    code, out, _ = run_cli(capsys, "apply", "--op", "L", "--sigma", "3.5", "--n", "2",
                           "--in", str(lowered))
    assert code == 0
    original = from_json((tmp_path / "f.json").read_text())
    assert np.allclose(from_json(out).coeffs, original.coeffs, rtol=1e-13)


def test_apply_bernardi(capsys, tmp_path):
    infile = write_series(tmp_path, "f.json", [0.0, 1.0, 1.0])
    code, out, _ = run_cli(capsys, "apply", "--op", "bernardi", "--c", "1", "--in", infile)
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, 2 / 3])


def test_apply_flag_validation(capsys, tmp_path):
    infile = write_series(tmp_path, "f.json", [0.0, 1.0, 1.0])
    code, _, err = run_cli(capsys, "apply", "--op", "L", "--sigma", "1", "--in", infile)
    assert code == 2 and "requires --sigma and --n" in err
    code, _, err = run_cli(capsys, "apply", "--op", "bernardi", "--in", infile)
    assert code == 2 and "requires --c" in err


def test_apply_rejects_unnormalized_input(capsys, tmp_path):
    path = tmp_path / "p.json"
    path.write_text('{"order": 1, "coeffs": [[1.0, 0.0], [2.0, 0.0]]}')
    code, _, err = run_cli(capsys, "apply", "--op", "L", "--sigma", "1", "--n", "1", "--in", str(path))
    assert code == 2 and "gft: error:" in err


def test_apply_missing_file(capsys, tmp_path):
    code, _, err = run_cli(capsys, "apply", "--op", "L", "--sigma", "1", "--n", "1",
                           "--in", str(tmp_path / "absent.json"))
    assert code == 2 and "gft: error:" in err


def test_iterate_and_inverse(capsys, tmp_path):
    path = tmp_path / "p.json"
    pairs = [[1.0, 0.0]] + [[2.0, 0.0]] * 4
    path.write_text(json.dumps({"order": 4, "coeffs": pairs}))
    code, out, _ = run_cli(capsys, "iterate", "--sigma", "1", "--n", "1", "--in", str(path))
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [1.0, 1.0, 2 / 3, 0.5, 0.4])
    back = tmp_path / "q.json"
    back.write_text(out)
    code, out, _ = run_cli(capsys, "iterate", "--sigma", "1", "--n", "1", "--inverse", "--in", str(back))
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [1.0, 2.0, 2.0, 2.0, 2.0])


def test_extremal_families(capsys):
    code, out, _ = run_cli(capsys, "extremal", "--family", "upper", "--sigma", "1", "--n", "1",
                           "--order", "4")
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, 1, 2 / 3, 0.5])  # a_k = 2/k
    code, out, _ = run_cli(capsys, "extremal", "--family", "iterate", "--sigma", "1", "--n", "1",
                           "--order", "3", "--sign", "-1")
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [1, -1, 2 / 3, -0.5])
    code, out, _ = run_cli(capsys, "extremal", "--family", "lower", "--sigma", "1", "--n", "1",
                           "--order", "4", "--beta", "0.5")
    assert code == 0
    assert np.allclose(from_json(out).coeffs, [0, 1, -0.5, 1 / 3, -0.25])


def test_bounds_csv(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--sigma", "1", "--n", "1", "--beta", "0",
                           "--radii", "0.5")
    assert code == 0
    lines = out.strip().split("\n")
    assert len(lines) == 2
    assert lines[0].split(",")[0] == "sigma"
    row = lines[1].split(",")
    assert float(row[4]) == pytest.approx(1 / 3, abs=1e-9)   # m at r = 0.5
    assert float(row[5]) == pytest.approx(3.0, abs=1e-9)     # M at r = 0.5


def test_bounds_skips_invalid_pairs_but_rejects_empty(capsys):
    code, out, _ = run_cli(capsys, "bounds", "--sigma", "0.5,1", "--n", "1,2", "--beta", "0",
                           "--radii", "0.5")
    assert code == 0
    # (0.5, 2) and (1, 2) are invalid; only (0.5, 1) and (1, 1) survive
    assert len(out.strip().split("\n")) == 3
    code, _, err = run_cli(capsys, "bounds", "--sigma", "0.5", "--n", "2", "--radii", "0.5")
    assert code == 2 and "no valid" in err
    code, _, err = run_cli(capsys, "bounds", "--radii", "1.5")
    assert code == 2
    code, _, err = run_cli(capsys, "bounds", "--sigma", "1;2")
    assert code == 2 and "comma-separated" in err


def test_verify_single_suite(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "7", "--trials", "5")
    assert code == 0
    report = json.loads(out)
    assert report["theorem"] == "7" and report["verdict"] == "pass"


def test_verify_reports_are_byte_identical(capsys):
    _, first, _ = run_cli(capsys, "verify", "--theorem", "7", "--seed", "42", "--trials", "20")
    _, second, _ = run_cli(capsys, "verify", "--theorem", "7", "--seed", "42", "--trials", "20")
    assert first == second


def test_verify_all(capsys):
    code, out, _ = run_cli(capsys, "verify", "--theorem", "all", "--trials", "1")
    assert code == 0
    reports = json.loads(out)
    assert len(reports) == 13
    assert all(r["verdict"] == "pass" for r in reports)


def test_verify_unknown_theorem(capsys):
    code, _, err = run_cli(capsys, "verify", "--theorem", "99")
    assert code == 2
    assert "unknown theorem id" in err


def test_output_file_written(capsys, tmp_path):
    target = tmp_path / "kernel.json"
    code, out, _ = run_cli(capsys, "kernel", "--sigma", "2", "--n", "1", "--order", "3",
                           "--out", str(target))
    assert code == 0 and out == ""
    assert np.allclose(from_json(target.read_text()).coeffs, [0, 1, 2, 3])
