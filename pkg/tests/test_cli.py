import json

import numpy as np
import pytest

from relsingosc.cli import main

VALID = ["--dims", "3", "--l", "1", "--omega0", "0.1", "--g0", "1.0"]
FAST_CHECKS = "eigen-residual,su11-ladder-bracket,casimir-bargmann"


def run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_spectrum_free_case_alpha_is_one(capsys):
    code, out, _ = run(capsys, ["spectrum", "--dims", "3", "--l", "0",
                                "--omega0", "0.2", "--g0", "0", "--n-max", "1"])
    assert code == 0
    rows = [ln.split() for ln in out.splitlines()[1:] if ln and not ln.startswith("#")]
    assert all(float(r[5]) == pytest.approx(1.0, abs=1e-12) for r in rows)


def test_spectrum_equal_spacing_and_example_energy(capsys):
    code, out, _ = run(capsys, ["spectrum"] + VALID + ["--n-max", "3", "--format", "csv"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "N,l,n,omega0,g0,alpha,nu,s,energy,excitation,nonrel_limit"
    energies = [float(ln.split(",")[8]) for ln in lines[1:]]
    assert energies[0] == pytest.approx(1.290521263313001, rel=1e-12)
    gaps = np.diff(energies)
    assert np.allclose(gaps, 2 * 0.1, atol=1e-12)


def test_spectrum_skips_invalid_points(capsys):
    code, out, _ = run(capsys, ["spectrum", "--dims", "3", "--l", "0,2",
                                "--omega0", "1.0", "--g0", "0.1", "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert any(s["l"] == 2 for s in data["skipped"])
    assert all(r["l"] == 0 for r in data["rows"])


def test_eval_csv_columns_and_origin(capsys):
    code, out, _ = run(capsys, ["eval", "--dims", "3", "--l", "0", "--omega0", "0.2",
                                "--g0", "0.5", "--n-max", "0", "--grid", "1e-8:25:400"])
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "rho,re,im,abs2"
    first = [float(x) for x in lines[1].split(",")]
    assert first[3] < 1e-12  # R(0) = 0


def test_eval_abs2_integrates_to_one(capsys):
    code, out, _ = run(capsys, ["eval", "--dims", "3", "--l", "0", "--omega0", "0.2",
                                "--g0", "0.5", "--n-max", "0", "--grid", "1e-8:25:3000"])
    assert code == 0
    lines = out.strip().splitlines()[1:]
    rho = np.array([float(ln.split(",")[0]) for ln in lines])
    abs2 = np.array([float(ln.split(",")[3]) for ln in lines])
    assert np.trapezoid(abs2, rho) == pytest.approx(1.0, abs=1e-3)


def test_eval_n1_single_interior_node(capsys):
    code, out, _ = run(capsys, ["eval", "--dims", "3", "--l", "0", "--omega0", "0.2",
                                "--g0", "0.5", "--n-max", "1", "--grid", "1e-8:25:3000"])
    assert code == 0
    blocks = out.split("# ")
    n1 = next(b for b in blocks if b.startswith("N3_l0_n1"))
    lines = n1.strip().splitlines()[2:]
    abs2 = np.array([float(ln.split(",")[3]) for ln in lines])
    kept = abs2 > 1e-12 * abs2.max()
    d = np.diff(abs2[kept])
    flips = int(np.sum(np.sign(d[1:]) * np.sign(d[:-1]) < 0))
    # max, node-minimum, max: exactly three derivative sign changes
    assert flips == 3


def test_eval_writes_suffixed_files(tmp_path, capsys):
    out_file = tmp_path / "wf.csv"
    code, _, _ = run(capsys, ["eval", "--dims", "3", "--l", "0", "--omega0", "0.2",
                              "--g0", "0.5", "--n-max", "1", "--grid", "1e-8:20:50",
                              "--out", str(out_file)])
    assert code == 0
    files = sorted(p.name for p in tmp_path.iterdir())
    assert len(files) == 2
    assert all(f.startswith("wf.N3_l0_n") for f in files)
    text = (tmp_path / files[0]).read_text()
    assert text.splitlines()[0] == "rho,re,im,abs2"


def test_eval_invalid_point_exits_2(capsys):
    code, _, err = run(capsys, ["eval", "--dims", "3", "--l", "2", "--omega0", "1.0",
                                "--g0", "1.0", "--n-max", "0"])
    assert code == 2
    assert "skipped" in err


def test_verify_small_grid_passes(capsys):
    code, out, _ = run(capsys, ["verify"] + VALID + ["--checks", FAST_CHECKS])
    assert code == 0
    assert "failed=0" in out


def test_verify_tolerance_override_flips_to_failure(capsys):
    code, out, _ = run(capsys, ["verify"] + VALID +
                       ["--checks", "eigen-residual", "--tol-eigen-residual", "1e-16"])
    assert code == 1
    assert "FAIL" in out


def test_verify_skips_invalid_points_and_continues(capsys):
    code, out, _ = run(capsys, ["verify", "--dims", "3", "--l", "1,2",
                                "--omega0", "1.0", "--g0", "0.1",
                                "--checks", "eigen-residual"])
    # l=1: D = 1 - 0.8 - 8 = negative -> skipped; l=2 also; exit reflects the rest
    assert "SKIP" in out
    assert code in (0, 1)


def test_verify_json_schema_and_invariant(capsys):
    code, out, _ = run(capsys, ["verify"] + VALID +
                       ["--checks", FAST_CHECKS, "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["report_version"] == 1
    assert set(data["summary"]) == {"total", "passed", "failed", "skipped"}
    for e in data["entries"]:
        assert set(e) == {"check_id", "params", "residual", "tolerance", "pass",
                          "status", "reason", "runtime_ms"}
        if e["status"] == "ran":
            assert e["pass"] == (e["residual"] <= e["tolerance"])


def test_verify_deterministic_reports(capsys):
    argv = ["verify"] + VALID + ["--checks", FAST_CHECKS, "--format", "json"]
    _, out1, _ = run(capsys, argv)
    _, out2, _ = run(capsys, argv)
    d1, d2 = json.loads(out1), json.loads(out2)
    assert d1["canonical_hash"] == d2["canonical_hash"]
    strip = lambda d: [{k: v for k, v in e.items() if k != "runtime_ms"}
                       for e in d["entries"]]
    assert strip(d1) == strip(d2)


def test_verify_thread_env_same_hash(capsys, monkeypatch):
    argv = ["verify", "--dims", "3,5", "--l", "0", "--omega0", "0.2", "--g0", "0.1",
            "--checks", "eigen-residual,su11-ladder-bracket", "--format", "json"]
    monkeypatch.setenv("REL_SINGOSC_THREADS", "1")
    _, out1, _ = run(capsys, argv)
    monkeypatch.setenv("REL_SINGOSC_THREADS", "4")
    _, out2, _ = run(capsys, argv)
    assert json.loads(out1)["canonical_hash"] == json.loads(out2)["canonical_hash"]


def test_verify_bad_thread_env_exits_2(capsys, monkeypatch):
    monkeypatch.setenv("REL_SINGOSC_THREADS", "many")
    code, _, err = run(capsys, ["verify"] + VALID + ["--checks", "eigen-residual"])
    assert code == 2
    assert "REL_SINGOSC_THREADS" in err


def test_config_file_and_flag_override(tmp_path, capsys):
    cfg = tmp_path / "run.json"
    cfg.write_text(json.dumps({
        "dims": [5], "l": [0], "omega0": [0.2], "g0": [0.1],
        "checks": "eigen-residual", "tol-eigen-residual": 1e-16,
        "format": "json",
    }))
    # file alone: fails on the absurd tolerance
    code, out, _ = run(capsys, ["verify", "--config", str(cfg)])
    assert code == 1
    data = json.loads(out)
    assert data["config"]["dims"] == [5]
    # flag overrides the file tolerance
    code, out, _ = run(capsys, ["verify", "--config", str(cfg),
                                "--tol-eigen-residual", "1e-6"])
    assert code == 0


def test_report_written_to_file(tmp_path, capsys):
    out_file = tmp_path / "report.json"
    code, _, _ = run(capsys, ["verify"] + VALID +
                     ["--checks", "su11-ladder-bracket", "--format", "json",
                      "--out", str(out_file)])
    assert code == 0
    data = json.loads(out_file.read_text())
    assert data["summary"]["failed"] == 0


def test_negative_control_report_semantics(capsys):
    code, out, _ = run(capsys, ["verify"] + VALID +
                       ["--checks", "eigen-negative-control", "--format", "json"])
    assert code == 0
    entry = json.loads(out)["entries"][0]
    # margin ratio: threshold/observed <= 1 means the control tripped loudly
    assert entry["tolerance"] == 1.0
    assert entry["residual"] <= 1.0


def test_config_errors_exit_2(capsys):
    for argv in (
        ["verify", "--checks", "nope"],
        ["verify", "--tol-nope", "1e-3"],
        ["eval", "--grid", "1:2"],
        ["verify", "--config", "/nonexistent/path.json"],
    ):
        code, _, err = run(capsys, argv)
        assert code == 2, argv
        assert err.startswith("error:")


def test_list_checks(capsys):
    code, out, _ = run(capsys, ["verify", "--list-checks"])
    assert code == 0
    assert "eigen-residual" in out
    assert "planewave-eigenvalue" in out


def test_rho_sample_override(capsys):
    code, out, _ = run(capsys, ["verify"] + VALID +
                       ["--checks", "eigen-residual", "--rho", "0.4,1.7,6.0",
                        "--format", "json"])
    assert code == 0
    data = json.loads(out)
    assert data["config"]["rho_samples"] == [0.4, 1.7, 6.0]
    assert data["entries"][0]["pass"] is True
