import json
import subprocess
import sys

from kbound.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# bound ------------------------------------------------------------------------

def test_bound_castelnuovo_table(capsys):
    code, out, _ = run_cli(capsys, "bound", "castelnuovo", "--r", "5", "--d", "18")
    assert code == 0
    assert "bound          28" in out


def test_bound_pi2_with_profile(capsys):
    code, out, _ = run_cli(capsys, "bound", "pi2", "--d", "31")
    assert code == 0
    assert "87" in out
    assert "4 9 14 19 24 29 31" in out


def test_bound_halphen_json(capsys):
    code, out, _ = run_cli(capsys, "bound", "halphen", "--d", "10", "--s", "2", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["bound"] == "16"
    assert payload["is_integer"] is True
    assert payload["params"] == {"s": 2, "m": 4, "eps": 1}


def test_bound_floor_flag(capsys):
    code, out, _ = run_cli(capsys, "bound", "halphen", "--d", "22", "--s", "4", "--floor")
    assert code == 0
    assert "bound    60" in out


def test_bound_propagate(capsys):
    code, out, _ = run_cli(capsys, "bound", "propagate", "--seed", "4,9,16", "--d", "31", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["formula_id"] == "propagated"
    assert payload["profile"]["prefix"][:4] == [4, 9, 16, 19]


def test_bound_out_of_domain_exit_code(capsys):
    code, _, err = run_cli(capsys, "bound", "halphen", "--d", "6", "--s", "3")
    assert code == 2
    assert "error:" in err


def test_bound_csv_header(capsys):
    code, out, _ = run_cli(capsys, "bound", "pi1", "--d", "33", "--format", "csv")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "formula,d,bound,floor,is_integer,params"
    assert lines[1].startswith("pi1,33,120,120,True")


def test_bound_range_sweep_csv(capsys):
    code, out, _ = run_cli(
        capsys, "bound", "castelnuovo", "--r", "5", "--d", "18", "--d-to", "21",
        "--format", "csv",
    )
    assert code == 0
    lines = out.splitlines()
    assert len(lines) == 5  # header + four degrees
    assert lines[1].startswith("castelnuovo,18,28")
    assert lines[4].startswith("castelnuovo,21,40")


# scroll ------------------------------------------------------------------------

def test_scroll_extremal(capsys):
    code, out, _ = run_cli(capsys, "scroll", "extremal", "--d", "18")
    assert code == 0
    assert "alpha  9" in out and "beta   -9" in out
    assert "k2     -216" in out and "genus  28" in out


def test_scroll_extremal_odd_degree_fails(capsys):
    code, _, err = run_cli(capsys, "scroll", "extremal", "--d", "19")
    assert code == 2


def test_scroll_scan_covers_full_range(capsys):
    code, out, _ = run_cli(capsys, "scroll", "scan", "--d", "18", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [row["a"] for row in rows] == list(range(-5, 4))
    assert rows[-1]["extremal"] is True
    assert rows[-1]["k2"] == -216


def test_scroll_scan_csv_header(capsys):
    code, out, _ = run_cli(capsys, "scroll", "scan", "--d", "8", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "d,a,alpha,beta,degree,k2,genus,admissible,extremal"


def test_scroll_class_inadmissible(capsys):
    code, out, _ = run_cli(capsys, "scroll", "class", "--alpha", "1", "--beta", "0")
    assert code == 0
    assert "inadmissible" in out
    assert "degree 3 < 4" in out


def test_scroll_minimize(capsys):
    code, out, _ = run_cli(capsys, "scroll", "minimize", "--d", "19", "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["k2_min"] == -72 and payload["a_min"] == 2
    assert payload["k2_min_closed_form"] == "-72"


# verify ------------------------------------------------------------------------

def test_verify_appendix_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "verify", "appendix", "--from", "18", "--to", "120")
    assert code == 0
    assert "APPENDIX.min  verified" in out
    assert "overall: verified" in out


def test_verify_r5_below_range_warns_but_exits_zero(capsys):
    code, out, err = run_cli(capsys, "verify", "r5", "--from", "10", "--to", "20")
    assert code == 0
    assert "out-of-asserted-range" in out
    assert "warning" in err


def test_verify_all_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "all", "--from", "36", "--to", "60",
        "--format", "json", "--no-timestamp",
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["overall"] is True
    assert "generated_at" not in payload
    assert len(payload["certificates"]) == 21


def test_verify_json_timestamp_present_by_default(capsys):
    code, out, _ = run_cli(capsys, "verify", "r3", "--format", "json")
    assert code == 0
    assert "generated_at" in json.loads(out)


def test_verify_csv_header(capsys):
    code, out, _ = run_cli(capsys, "verify", "r6", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "claim_id,status,params,witness"


def test_verify_jobs_env_fallback(capsys, monkeypatch):
    monkeypatch.setenv("KBOUND_JOBS", "2")
    code, out, _ = run_cli(capsys, "verify", "sharpness", "--from", "36", "--to", "90", "--format", "json", "--no-timestamp")
    assert code == 0
    monkeypatch.setenv("KBOUND_JOBS", "1")
    code2, out2, _ = run_cli(capsys, "verify", "sharpness", "--from", "36", "--to", "90", "--format", "json", "--no-timestamp")
    assert code2 == 0
    assert out == out2


def test_verify_output_file(tmp_path, capsys):
    target = tmp_path / "report.json"
    code, out, _ = run_cli(
        capsys, "verify", "r4", "--from", "36", "--to", "60",
        "--format", "json", "--no-timestamp", "--out", str(target),
    )
    assert code == 0
    assert out == ""
    payload = json.loads(target.read_text())
    assert len(payload["certificates"]) == 5


def test_verify_io_error_exit_code(capsys):
    code, _, err = run_cli(
        capsys, "verify", "r3", "--out", "/nonexistent-dir/report.json",
    )
    assert code == 3
    assert "i/o error" in err


def test_verify_counterexample_exit_code(capsys, monkeypatch):
    # exit status must reflect certificate statuses exactly
    import kbound.verify as verify

    broken = verify.Certificate(
        claim_id="R3.direct",
        anchor=verify.CLAIM_ANCHORS["R3.direct"],
        params={},
        status="counterexample",
        witness={"failed_check": "synthetic", "d": 7},
    )
    monkeypatch.setattr(verify, "verify_r3", lambda: broken)
    code, out, _ = run_cli(capsys, "verify", "r3")
    assert code == 1
    assert "overall: FAILED" in out


def test_cli_module_entrypoint_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "kbound", "bound", "castelnuovo", "--r", "5", "--d", "21"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "40" in proc.stdout
