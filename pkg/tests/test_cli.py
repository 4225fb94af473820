"""End-to-end tests for the batch command-line front-end."""

from __future__ import annotations

import csv
import json
from pathlib import Path

import pytest

from phys_sims_quadrotor.cli import (
    EXIT_ACCEPTANCE,
    EXIT_CONFIG,
    EXIT_OK,
    EXIT_RUN,
    build_parser,
    main,
)
from phys_sims_quadrotor.config import load_config
from phys_sims_quadrotor.sim import engine

SHORT = ["--set", "sim.duration=2"]


def _rows(path: Path) -> list[list[str]]:
    with path.open(encoding="utf-8", newline="") as handle:
        return list(csv.reader(handle))


def _tree(root: Path) -> dict[str, bytes]:
    return {
        path.relative_to(root).as_posix(): path.read_bytes()
        for path in sorted(root.rglob("*"))
        if path.is_file()
    }


def test_simulate_writes_trace_metrics_and_resolved_config(tmp_path: Path) -> None:
    out = tmp_path / "out"
    code = main(["simulate", "--controller", "backstepping", "--seed", "1", "--out", str(out)])
    assert code == EXIT_OK

    trace = _rows(out / "traces" / "white" / "backstepping-seed1.csv")
    assert len(trace) == 1 + 6001
    assert trace[0][0] == "t"
    metrics = _rows(out / "metrics" / "white" / "backstepping-seed1.csv")
    assert [row[1] for row in metrics[1:]] == ["roll", "pitch", "yaw", "altitude"]

    resolved = load_config(out / "resolved-config")
    assert resolved.run.seeds == (1,)
    assert resolved.run.controller == "backstepping"
    assert (out / "runs.jsonl").exists()
    assert json.loads((out / "runs.metadata.json").read_text())["command"] == "simulate"


def test_simulate_reports_a_halted_run(
    tmp_path: Path,
    monkeypatch: pytest.MonkeyPatch,
    capsys: pytest.CaptureFixture[str],
) -> None:
    monkeypatch.setattr(engine, "DIVERGENCE_LIMIT", 0.5)
    code = main(["simulate", "--noise", "none", "--out", str(tmp_path)])
    assert code == EXIT_RUN
    assert "divergence" in capsys.readouterr().err
    status = json.loads((tmp_path / "runs.jsonl").read_text().splitlines()[0])["status"]
    assert status == "divergence"


def test_invalid_config_value_exits_with_config_error(
    tmp_path: Path,
    capsys: pytest.CaptureFixture[str],
) -> None:
    config_path = tmp_path / "exp.cfg"
    config_path.write_text("# bad mass\nquadrotor.mass = -1\n", encoding="utf-8")
    code = main(["simulate", "--config", str(config_path), "--out", str(tmp_path / "out")])
    assert code == EXIT_CONFIG
    err = capsys.readouterr().err
    assert "exp.cfg:2: quadrotor.mass" in err
    assert not (tmp_path / "out").exists()


@pytest.mark.parametrize(
    "extra",
    [
        ["--set", "quadrotor.mass=-1"],
        ["--set", "no_equals_sign"],
        ["--set", "quadrotor.colour=1"],
        ["--noise", "grey"],
        ["--seeds", "5..1"],
    ],
)
def test_invalid_flags_exit_with_config_error(
    tmp_path: Path,
    extra: list[str],
    capsys: pytest.CaptureFixture[str],
) -> None:
    assert main(["compare", "--out", str(tmp_path), *extra]) == EXIT_CONFIG
    assert capsys.readouterr().err.startswith("config error:")


def test_seed_flags_are_mutually_exclusive() -> None:
    with pytest.raises(SystemExit):
        build_parser().parse_args(["compare", "--seed", "1", "--seeds", "1..3"])


def test_compare_without_noise_writes_summary(tmp_path: Path) -> None:
    out = tmp_path / "out"
    code = main(["compare", "--noise", "none", "--seeds", "1", "--out", str(out), *SHORT])
    assert code == EXIT_OK
    summary = _rows(out / "summary.csv")
    assert len(summary) == 1 + 12
    assert {row[2] for row in summary[1:]} == {"none"}
    payload = json.loads((out / "summary.json").read_text())
    assert payload["noise"] == "none"
    assert payload["seeds"] == [1]
    assert len(payload["config_hash"]) == 64


def test_identical_invocations_produce_identical_trees(
    tmp_path: Path,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    trees = []
    for name in ("first", "second"):
        workdir = tmp_path / name
        workdir.mkdir()
        monkeypatch.chdir(workdir)
        argv = ["compare", "--noise", "brown", "--seeds", "1,2", "--out", "results", *SHORT]
        assert main(argv) == EXIT_OK
        trees.append(_tree(workdir / "results"))
    assert trees[0] == trees[1]
    assert "metrics/brown/median.csv" in trees[0]
    assert "traces/brown/pid-seed2.csv" in trees[0]


def test_sweep_writes_ordering_table_and_verdict(tmp_path: Path) -> None:
    # One second is too short for any altitude loop to enter the 2% band.
    code = main(["sweep", "--seeds", "1", "--out", str(tmp_path), "--set", "sim.duration=1"])
    payload = json.loads((tmp_path / "summary.json").read_text())
    assert code == EXIT_ACCEPTANCE
    assert payload["acceptance"]["passed"] is False
    assert set(payload["acceptance"]["backstepping_settling_fraction"].values()) == {0.0}
    assert payload["noises"] == ["white", "pink", "brown", "blue", "purple"]
    ordering = _rows(tmp_path / "summary.csv")
    assert len(ordering) == 1 + 5 * 4
    assert ordering[0][0] == "noise"
    for noise in payload["noises"]:
        assert (tmp_path / "metrics" / noise / "seed1.csv").exists()


def test_sweep_output_tree_is_byte_identical(
    tmp_path: Path,
    monkeypatch: pytest.MonkeyPatch,
) -> None:
    trees = []
    for name in ("first", "second"):
        workdir = tmp_path / name
        workdir.mkdir()
        monkeypatch.chdir(workdir)
        main(["sweep", "--seeds", "1,2", "--out", "results", *SHORT])
        trees.append(_tree(workdir / "results"))
    assert trees[0] == trees[1]
    assert "summary.json" in trees[0]
    assert "summary.csv" in trees[0]
    assert "traces/purple/backstepping-seed2.csv" in trees[0]
    assert "metrics/blue/median.csv" in trees[0]


@pytest.mark.slow
def test_default_sweep_passes_acceptance(tmp_path: Path) -> None:
    code = main(["sweep", "--seeds", "1..5", "--workers", "2", "--out", str(tmp_path)])
    acceptance = json.loads((tmp_path / "summary.json").read_text())["acceptance"]
    assert acceptance["overshoot_win_fraction"] >= 0.8
    settling = acceptance["backstepping_settling_fraction"]
    assert sorted(settling) == ["blue", "brown", "pink", "purple", "white"]
    assert all(value >= 0.8 for value in settling.values())
    assert acceptance["passed"] is True
    assert code == EXIT_OK


@pytest.mark.slow
def test_noise_command_reports_pink_slope(tmp_path: Path) -> None:
    code = main(["noise", "--noise", "pink", "--seed", "1", "--out", str(tmp_path)])
    assert code == EXIT_OK
    summary = json.loads((tmp_path / "noise" / "summary.json").read_text())
    assert summary["passed"] is True
    assert abs(summary["slope_db_per_decade"] - summary["target_db_per_decade"]) <= 3.0
    assert len(_rows(tmp_path / "noise" / "samples.csv")) == 1 + 2**16


def test_noise_command_needs_a_color(tmp_path: Path) -> None:
    assert main(["noise", "--noise", "none", "--out", str(tmp_path)]) == EXIT_CONFIG


def test_zero_amplitude_sweep_gives_identical_tables(tmp_path: Path) -> None:
    argv = ["sweep", "--seeds", "1", "--band", "2", "--out", str(tmp_path), *SHORT]
    main([*argv, "--set", "noise.power=0"])
    tables = []
    for noise in ("white", "pink", "brown", "blue", "purple"):
        rows = _rows(tmp_path / "metrics" / noise / "seed1.csv")
        assert {row[2] for row in rows[1:]} == {noise}
        tables.append([row[:2] + row[3:] for row in rows])
    assert all(table == tables[0] for table in tables)
