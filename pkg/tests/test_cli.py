import json
import os
from pathlib import Path

from sposchur.cli import main

GOLDEN = Path(__file__).parent / "golden"


def run_cli(tmp_path, *argv) -> tuple[int, str]:
    out = tmp_path / "out.csv"
    code = main([*argv, "--output", str(out)])
    return code, (out.read_text() if out.exists() else "")


def test_verify_identities_golden(tmp_path):
    code, text = run_cli(
        tmp_path, "verify-identities", "--degree", "3", "--trials", "1", "--seed", "7"
    )
    assert code == 0
    assert text == (GOLDEN / "verify_identities_d3.csv").read_text()


def test_kernel_golden(tmp_path):
    code, text = run_cli(
        tmp_path, "kernel-eval", "--family", "o", "--rep", "bessel", "--theta", "0.5",
        "--range=-1:1",
    )
    assert code == 0
    assert text == (GOLDEN / "kernel_o_bessel.csv").read_text()


def test_th_dets_golden(tmp_path):
    code, text = run_cli(
        tmp_path, "th-dets", "--theta", "0.25", "--sizes", "1:3", "--which", "D1,D3"
    )
    assert code == 0
    assert text == (GOLDEN / "th_dets_plancherel.csv").read_text()


def test_byte_identical_reruns(tmp_path):
    args = ("verify-identities", "--degree", "2", "--trials", "1", "--seed", "3")
    _, first = run_cli(tmp_path, *args)
    _, second = run_cli(tmp_path, *args)
    assert first == second


def test_threaded_output_is_identical(tmp_path, monkeypatch):
    args = ("kernel-eval", "--family", "sp", "--rep", "bessel", "--theta", "0.4",
            "--range=-2:2")
    _, single = run_cli(tmp_path, *args)
    monkeypatch.setenv("SPOSCHUR_THREADS", "4")
    _, threaded = run_cli(tmp_path, *args)
    assert single == threaded


def test_csv_schema_and_config_echo(tmp_path):
    code, text = run_cli(
        tmp_path, "correlations", "--family", "sp", "--theta", "0.2", "--points", "0"
    )
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[0].startswith("# config: ")
    echoed = json.loads(lines[0][len("# config: "):])
    assert echoed["command"] == "correlations"
    assert lines[1] == "points,cutoff,value,est_tail"
    fields = lines[2].split(",")
    assert len(fields) == 4
    float(fields[2])  # parseable value column


def test_bo_exit_code_on_tolerance_failure(tmp_path):
    code, _ = run_cli(
        tmp_path, "bo-check", "--family", "sp", "--theta", "0.5", "--m", "2:2",
        "--tol", "1e-30",
    )
    assert code == 1


def test_config_error_exit_codes(tmp_path):
    code, _ = run_cli(tmp_path, "correlations", "--points", "0")
    assert code == 2
    code2, _ = run_cli(tmp_path, "correlations", "--points", "0", "--measure", "{bad json")
    assert code2 == 2
    assert main(["not-a-command"]) == 2


def test_measure_json_file(tmp_path):
    doc = {
        "family": "sp",
        "rho_plus": {"powersums": {"1": "1"}, "truncation_degree": None},
        "rho_minus": {"powersums": {"1": "1/2"}, "truncation_degree": None},
    }
    path = tmp_path / "measure.json"
    path.write_text(json.dumps(doc))
    code, text = run_cli(
        tmp_path, "correlations", "--measure", str(path), "--points", "0"
    )
    assert code == 0
    assert "points,cutoff,value,est_tail" in text


def test_verify_identities_degree_zero_vacuous(tmp_path):
    code, text = run_cli(
        tmp_path, "verify-identities", "--degree", "0", "--trials", "1", "--seed", "1"
    )
    assert code == 0
    assert "FAIL" not in text


def test_tw_command_without_theta(tmp_path):
    code, text = run_cli(tmp_path, "tw-cdf", "--sign", "+", "--s", "0:1:1")
    assert code == 0
    lines = text.strip().split("\n")
    assert lines[1] == "s,x,y,discrete,limit,abs_error"
    assert len(lines) == 4


def test_config_file_defaults_with_flag_override(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"theta": 0.5, "sizes": "1:2", "which": "D1"}))
    code, text = run_cli(tmp_path, "th-dets", "--config", str(cfg))
    assert code == 0
    assert text.count("\nD1,") == 2
    # flag overrides config
    code2, text2 = run_cli(
        tmp_path, "th-dets", "--config", str(cfg), "--which", "D3"
    )
    assert code2 == 0
    assert "\nD3," in text2 and "\nD1," not in text2
    code3, _ = run_cli(tmp_path, "th-dets", "--config", str(tmp_path / "nope.json"))
    assert code3 == 2
