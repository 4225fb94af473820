"""Seed-battery execution of single runs, controller comparisons and noise sweeps."""

from __future__ import annotations

import logging
from collections.abc import Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path

from phys_sims_quadrotor.config.models import ExperimentConfig
from phys_sims_quadrotor.control.base import ControllerKind
from phys_sims_quadrotor.harness.logging import RunLogger
from phys_sims_quadrotor.harness.metrics import aggregate_channel
from phys_sims_quadrotor.harness.records import (
    CompareResult,
    OrderingCell,
    RunRecord,
    SweepOutcome,
)
from phys_sims_quadrotor.harness.reporting import table_rows, write_metrics_table
from phys_sims_quadrotor.metrics.analysis import CHANNEL_ORDER, analyze
from phys_sims_quadrotor.metrics.step import DegenerateChannel, ResponseMetrics
from phys_sims_quadrotor.noise.spec import NoiseColor
from phys_sims_quadrotor.shared.errors import RunHaltedError
from phys_sims_quadrotor.sim.engine import run

logger = logging.getLogger(__name__)

CONTROLLER_ORDER = (ControllerKind.PID, ControllerKind.LYAPUNOV, ControllerKind.BACKSTEPPING)
CONTROLLER_NAMES = tuple(kind.value for kind in CONTROLLER_ORDER)
SWEEP_COLORS = (
    NoiseColor.WHITE,
    NoiseColor.PINK,
    NoiseColor.BROWN,
    NoiseColor.BLUE,
    NoiseColor.PURPLE,
)
ATTITUDE_CHANNELS = ("roll", "pitch", "yaw")
ACCEPTANCE_FRACTION = 0.8


def noise_label(color: NoiseColor | None) -> str:
    return "none" if color is None else color.value


def trace_relpath(controller: str, noise: str, seed: int) -> Path:
    return Path("traces") / noise / f"{controller}-seed{seed}.csv"


@dataclass(frozen=True)
class RunTask:
    """Everything one worker needs; the worker alone writes its trace file."""

    config: ExperimentConfig
    controller: ControllerKind
    color: NoiseColor | None
    seed: int
    output_dir: Path | None = None


def execute_run(task: RunTask) -> RunRecord:
    """Run one scenario and reduce it to a record; halts become failure records."""
    config = task.config
    noise = noise_label(task.color)
    band = config.band_for(task.color)
    scenario = config.scenario(task.controller, task.color, task.seed)
    relpath = trace_relpath(task.controller.value, noise, task.seed)
    trace_path = "" if task.output_dir is None else relpath.as_posix()

    try:
        trace = run(scenario, config.params())
    except RunHaltedError as exc:
        logger.info(
            "run halted controller=%s noise=%s seed=%d: %s",
            task.controller.value,
            noise,
            task.seed,
            exc,
        )
        if task.output_dir is not None:
            exc.trace.to_csv(task.output_dir / relpath)
        return RunRecord(
            controller=task.controller.value,
            noise=noise,
            seed=task.seed,
            band_pct=band,
            error=exc.reason,
            message=exc.message,
            rows=len(exc.trace),
            trace_path=trace_path,
        )

    if task.output_dir is not None:
        trace.to_csv(task.output_dir / relpath)
    return RunRecord(
        controller=task.controller.value,
        noise=noise,
        seed=task.seed,
        band_pct=band,
        metrics=analyze(trace, scenario.reference, band),
        rows=len(trace),
        trace_path=trace_path,
    )


def run_tasks(tasks: Sequence[RunTask], workers: int = 1) -> list[RunRecord]:
    """Execute tasks serially or on a process pool; results keep task order."""
    if workers <= 1 or len(tasks) <= 1:
        return [execute_run(task) for task in tasks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(execute_run, tasks))


def run_compare(
    config: ExperimentConfig,
    color: NoiseColor | None,
    *,
    output_dir: Path | None = None,
    run_logger: RunLogger | None = None,
) -> CompareResult:
    """Run all three controllers over the seed battery on shared noise realizations."""
    seeds = config.run.seeds
    noise = noise_label(color)
    band = config.band_for(color)
    tasks = [
        RunTask(config, kind, color, seed, output_dir)
        for seed in seeds
        for kind in CONTROLLER_ORDER
    ]
    logger.info("compare noise=%s seeds=%d runs=%d", noise, len(seeds), len(tasks))
    records = run_tasks(tasks, config.run.workers)
    if run_logger is not None:
        for record in records:
            run_logger.log_run(record)

    aggregate = {
        (controller, channel): aggregate_channel(
            [record for record in records if record.controller == controller], channel, band
        )
        for controller in CONTROLLER_NAMES
        for channel in CHANNEL_ORDER
    }
    result = CompareResult(
        noise=noise,
        band_pct=band,
        seeds=seeds,
        records=tuple(records),
        aggregate=aggregate,
    )
    if output_dir is not None:
        write_compare_tables(result, output_dir)
    return result


def write_compare_tables(result: CompareResult, output_dir: Path) -> Path:
    """Write per-seed tables and, for batteries of two or more seeds, the median table.

    Returns the path of the table that represents the comparison.
    """
    directory = output_dir / "metrics" / result.noise
    per_seed: Path | None = None
    for seed in result.seeds:
        results = {
            (record.controller, channel): value
            for record in result.records
            if record.seed == seed
            for channel, value in _record_channels(record).items()
        }
        rows = table_rows(results, CONTROLLER_NAMES, result.noise, result.band_pct)
        per_seed = write_metrics_table(directory / f"seed{seed}.csv", rows)
    if len(result.seeds) == 1 and per_seed is not None:
        return per_seed
    rows = table_rows(result.aggregate, CONTROLLER_NAMES, result.noise, result.band_pct)
    return write_metrics_table(directory / "median.csv", rows)


def run_sweep(
    config: ExperimentConfig,
    *,
    output_dir: Path | None = None,
    run_logger: RunLogger | None = None,
) -> SweepOutcome:
    compares = tuple(
        run_compare(config, color, output_dir=output_dir, run_logger=run_logger)
        for color in SWEEP_COLORS
    )
    return summarize_sweep(compares)


def summarize_sweep(
    compares: Sequence[CompareResult],
    min_fraction: float = ACCEPTANCE_FRACTION,
) -> SweepOutcome:
    """Overshoot ordering per (noise, channel) cell plus settling and absence fractions."""
    cells: list[OrderingCell] = []
    settling: dict[str, float] = {}
    absence: dict[str, dict[str, float]] = {}
    for compare in compares:
        for channel in CHANNEL_ORDER:
            overshoot: dict[str, float | None] = {}
            settled: list[str] = []
            for controller in CONTROLLER_NAMES:
                value = compare.aggregate[(controller, channel)]
                if isinstance(value, ResponseMetrics):
                    overshoot[controller] = value.overshoot_pct
                    if value.settling_time is not None:
                        settled.append(controller)
                else:
                    overshoot[controller] = None
            cells.append(
                OrderingCell(
                    noise=compare.noise,
                    channel=channel,
                    band_pct=compare.band_pct,
                    overshoot=overshoot,
                    beats_pid=_strictly_less(overshoot, "pid"),
                    beats_lyapunov=_strictly_less(overshoot, "lyapunov"),
                    settled=tuple(settled),
                )
            )
        settling[compare.noise] = _fraction_all_settled(compare, "backstepping", CHANNEL_ORDER)
        absence[compare.noise] = {
            controller: 1.0 - _fraction_all_settled(compare, controller, ATTITUDE_CHANNELS)
            for controller in ("pid", "lyapunov")
        }

    wins = sum(1 for cell in cells if cell.beats_pid and cell.beats_lyapunov)
    return SweepOutcome(
        compares=tuple(compares),
        cells=tuple(cells),
        overshoot_win_fraction=wins / len(cells) if cells else 0.0,
        settling_fraction=settling,
        absence_fraction=absence,
        min_fraction=min_fraction,
    )


def _strictly_less(overshoot: dict[str, float | None], rival: str) -> bool:
    ours, theirs = overshoot.get("backstepping"), overshoot.get(rival)
    if ours is None or theirs is None:
        return False
    return ours < theirs


def _fraction_all_settled(
    compare: CompareResult,
    controller: str,
    channels: Sequence[str],
) -> float:
    """Fraction of seeds whose run settled on every listed channel with a step."""
    records = [record for record in compare.records if record.controller == controller]
    if not records:
        return 0.0
    settled = 0
    for record in records:
        if not record.ok:
            continue
        if all(
            isinstance(record.metrics[channel], DegenerateChannel)
            or _settling(record.metrics[channel]) is not None
            for channel in channels
        ):
            settled += 1
    return settled / len(records)


def _settling(result: ResponseMetrics | DegenerateChannel) -> float | None:
    return result.settling_time if isinstance(result, ResponseMetrics) else None


def _record_channels(record: RunRecord) -> dict[str, ResponseMetrics | DegenerateChannel]:
    """Channel results for a table row; failed runs render as absent overshoot and times."""
    if record.ok:
        return dict(record.metrics)
    failed = ResponseMetrics(
        rise_time=None,
        overshoot_pct=float("inf"),
        settling_time=None,
        band_pct=record.band_pct,
    )
    return {channel: failed for channel in CHANNEL_ORDER}


__all__ = [
    "ACCEPTANCE_FRACTION",
    "CONTROLLER_NAMES",
    "CONTROLLER_ORDER",
    "SWEEP_COLORS",
    "RunTask",
    "execute_run",
    "noise_label",
    "run_compare",
    "run_sweep",
    "run_tasks",
    "summarize_sweep",
    "trace_relpath",
    "write_compare_tables",
]
