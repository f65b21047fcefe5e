from __future__ import annotations

import csv
import io
import json
import logging
import math

import pytest

from src.cloning.domain.value_object import OptimizerConfig
from src.main.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, main


@pytest.fixture(autouse=True)
def restore_root_logging():
    root = logging.getLogger()
    original_handlers = list(root.handlers)
    original_level = root.level
    yield
    for handler in list(root.handlers):
        if handler not in original_handlers:
            handler.close()
        root.removeHandler(handler)
    for handler in original_handlers:
        root.addHandler(handler)
    root.setLevel(original_level)


@pytest.fixture(autouse=True)
def default_format_env(monkeypatch: pytest.MonkeyPatch) -> None:
    monkeypatch.setenv("PCCLONE_FORMAT", "csv")


def _csv_rows(text: str) -> list[dict[str, str]]:
    return list(csv.DictReader(io.StringIO(text)))


def test_parser_defaults() -> None:
    args = build_parser().parse_args(["clone", "--phi", "0.5"])

    assert args.convention == "xz"
    assert args.format is None
    assert args.log_level == "WARNING"
    assert args.log_dir is None


def test_bound_csv(capsys: pytest.CaptureFixture[str]) -> None:
    code = main(["bound", "--n", "1", "--m-max", "2", "--format", "csv"])
    out = capsys.readouterr().out

    assert code == EXIT_OK
    assert out.splitlines()[0] == "N,M,F_pcc_bound,F_universal"
    assert out.endswith("\n")
    assert "\r" not in out
    rows = _csv_rows(out)
    assert [row["M"] for row in rows] == ["1", "2", "inf"]
    assert rows[0]["F_pcc_bound"] == "1.0"
    assert float(rows[1]["F_pcc_bound"]) == pytest.approx(0.8535533905932737, abs=1e-15)
    assert rows[1]["F_universal"] == "0.8333333333333334"
    assert float(rows[2]["F_pcc_bound"]) == pytest.approx(0.75)


def test_bound_formats_carry_identical_numbers(capsys: pytest.CaptureFixture[str]) -> None:
    main(["bound", "--n", "2", "--m-max", "4", "--format", "csv"])
    csv_rows = _csv_rows(capsys.readouterr().out)
    main(["bound", "--n", "2", "--m-max", "4", "--format", "json"])
    json_rows = json.loads(capsys.readouterr().out)["rows"]
    main(["bound", "--n", "2", "--m-max", "4", "--format", "tsv"])
    tsv_rows = list(csv.DictReader(io.StringIO(capsys.readouterr().out), delimiter="\t"))

    assert len(csv_rows) == len(json_rows) == len(tsv_rows) == 4
    for c, j, t in zip(csv_rows, json_rows, tsv_rows):
        assert float(c["F_pcc_bound"]) == float(j["F_pcc_bound"]) == float(t["F_pcc_bound"])
        assert c["M"] == str(j["M"]) == t["M"]


def test_format_defaults_to_environment(monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]) -> None:
    monkeypatch.setenv("PCCLONE_FORMAT", "json")

    assert main(["bb84"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)["report"]
    assert report["mutual_info_ab"] == pytest.approx(0.3991, abs=1e-4)


@pytest.mark.parametrize(
    "argv",
    [
        [],
        ["bound", "--n", "2", "--m-max", "1"],
        ["bound", "--n", "x", "--m-max", "2"],
        ["clone", "--phi", "abc"],
        ["clone", "--phi", "0.1", "--convention", "yz"],
        ["figure", "--m-max", "1"],
        ["estimate", "--n", "2", "--nodes", "5"],
        ["estimate", "--n", "0"],
        ["bound", "--n", "1", "--m-max", "2", "--format", "xml"],
        ["verify", "--suite", "everything"],
    ],
)
def test_usage_errors_exit_with_two(argv: list[str], capsys: pytest.CaptureFixture[str]) -> None:
    assert main(argv) == EXIT_USAGE
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err


def test_help_exits_cleanly(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["bound", "--help"]) == EXIT_OK
    assert "--m-max" in capsys.readouterr().out


def test_clone_in_both_conventions(capsys: pytest.CaptureFixture[str]) -> None:
    for convention in ("xz", "xy"):
        assert main(["clone", "--phi", "1.2", "--convention", convention, "--format", "json"]) == EXIT_OK
        data = json.loads(capsys.readouterr().out)
        assert data["params"]["convention"] == convention
        assert data["report"]["fidelity"] == pytest.approx(0.5 + math.sqrt(0.125), abs=1e-12)


def test_figure_emits_single_input_series(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["figure", "--m-max", "30"]) == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)

    assert len(rows) == 30
    assert {row["F_pcc_limit"] for row in rows} == {"0.75"}
    assert abs(float(rows[-1]["F_pcc_bound"]) - 0.75) < 0.01


def test_estimate_reports_closed_form_residual(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["estimate", "--n", "3", "--format", "json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)["report"]

    assert report["nodes"] == 20
    assert report["residual"] <= 1e-10


def test_verify_estimation_suite_passes(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", "--suite", "estimation"]) == EXIT_OK
    rows = _csv_rows(capsys.readouterr().out)

    assert {row["passed"] for row in rows} == {"True"}


def test_verify_with_impossible_tolerance_fails(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["verify", "--suite", "estimation", "--tol", "1e-30"]) == EXIT_FAILED
    captured = capsys.readouterr()

    assert "False" in captured.out
    assert "failed checks" in captured.err


def test_optimize_symmetric(capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["optimize", "--symmetric", "--format", "json"]) == EXIT_OK
    report = json.loads(capsys.readouterr().out)["report"]

    assert report["fidelity"] == pytest.approx(0.5)
    assert report["theta"] == pytest.approx(math.pi / 4)
    assert report["b"] == 0.0


def test_optimizer_budget_exhaustion_is_a_failure(
    monkeypatch: pytest.MonkeyPatch, capsys: pytest.CaptureFixture[str]
) -> None:
    monkeypatch.setattr("src.main.main.load_optimizer_config", lambda: OptimizerConfig(max_evaluations=10))

    assert main(["optimize"]) == EXIT_FAILED
    assert "did not converge" in capsys.readouterr().err


def test_log_dir_receives_daily_file(tmp_path, capsys: pytest.CaptureFixture[str]) -> None:
    assert main(["optimize", "--log-level", "INFO", "--log-dir", str(tmp_path)]) == EXIT_OK
    capsys.readouterr()

    logs = list(tmp_path.glob("pcclone_*.log"))
    assert len(logs) == 1
    assert "ansatz optimum" in logs[0].read_text(encoding="utf-8")
