"""Deterministic CSV tables and JSON summaries for compare and sweep runs."""

from __future__ import annotations

import csv
import json
import math
from collections.abc import Iterable, Mapping, Sequence
from pathlib import Path
from typing import Any

from phys_sims_quadrotor.harness.records import (
    CompareResult,
    OrderingCell,
    SweepOutcome,
    channel_to_dict,
)
from phys_sims_quadrotor.metrics.analysis import CHANNEL_ORDER, ChannelResult
from phys_sims_quadrotor.metrics.step import DegenerateChannel

METRICS_HEADER = (
    "controller",
    "channel",
    "noise",
    "rise_time_s",
    "overshoot_pct",
    "settling_time_s",
    "band_pct",
)
ORDERING_HEADER = (
    "noise",
    "channel",
    "band_pct",
    "pid_overshoot_pct",
    "lyapunov_overshoot_pct",
    "backstepping_overshoot_pct",
    "backstepping_beats_pid",
    "backstepping_beats_lyapunov",
    "settled",
)
ABSENT = "-"


def format_metric(value: float | None) -> str:
    """Render a metric value, using ``-`` for absent or unbounded entries."""
    if value is None or not math.isfinite(value):
        return ABSENT
    return format(value, ".10g")


def metrics_row(
    controller: str,
    channel: str,
    noise: str,
    result: ChannelResult,
    band_pct: float,
) -> list[str]:
    if isinstance(result, DegenerateChannel):
        timing = [ABSENT, ABSENT, ABSENT]
    else:
        timing = [
            format_metric(result.rise_time),
            format_metric(result.overshoot_pct),
            format_metric(result.settling_time),
        ]
    return [controller, channel, noise, *timing, format_metric(band_pct)]


def table_rows(
    results: Mapping[tuple[str, str], ChannelResult],
    controllers: Sequence[str],
    noise: str,
    band_pct: float,
) -> list[list[str]]:
    """Rows grouped by channel then controller, skipping missing pairs."""
    rows: list[list[str]] = []
    for channel in CHANNEL_ORDER:
        for controller in controllers:
            result = results.get((controller, channel))
            if result is not None:
                rows.append(metrics_row(controller, channel, noise, result, band_pct))
    return rows


def write_csv(path: str | Path, header: Sequence[str], rows: Iterable[Sequence[str]]) -> Path:
    destination = Path(path)
    destination.parent.mkdir(parents=True, exist_ok=True)
    with destination.open("w", encoding="utf-8", newline="") as handle:
        writer = csv.writer(handle, lineterminator="\n")
        writer.writerow(header)
        writer.writerows(rows)
    return destination


def write_metrics_table(path: str | Path, rows: Iterable[Sequence[str]]) -> Path:
    return write_csv(path, METRICS_HEADER, rows)


def ordering_rows(cells: Sequence[OrderingCell]) -> list[list[str]]:
    rows: list[list[str]] = []
    for cell in cells:
        rows.append(
            [
                cell.noise,
                cell.channel,
                format_metric(cell.band_pct),
                format_metric(cell.overshoot.get("pid")),
                format_metric(cell.overshoot.get("lyapunov")),
                format_metric(cell.overshoot.get("backstepping")),
                _flag(cell.beats_pid),
                _flag(cell.beats_lyapunov),
                ";".join(cell.settled) if cell.settled else ABSENT,
            ]
        )
    return rows


def build_compare_summary(result: CompareResult, *, config_hash: str = "") -> dict[str, Any]:
    """Build a stable summary artifact for one noise condition."""
    return {
        "run_type": "compare",
        "noise": result.noise,
        "band_pct": result.band_pct,
        "seeds": list(result.seeds),
        "num_runs": len(result.records),
        "config_hash": config_hash,
        "failures": [
            {"controller": item.controller, "seed": item.seed, "reason": item.error}
            for item in result.failures
        ],
        "aggregate": {
            f"{controller}/{channel}": channel_to_dict(value)
            for (controller, channel), value in sorted(result.aggregate.items())
        },
    }


def build_sweep_summary(outcome: SweepOutcome, *, config_hash: str = "") -> dict[str, Any]:
    """Build a stable summary artifact with the acceptance verdict."""
    return {
        "run_type": "sweep",
        "config_hash": config_hash,
        "noises": [compare.noise for compare in outcome.compares],
        "compares": [build_compare_summary(compare) for compare in outcome.compares],
        "acceptance": {
            "min_fraction": outcome.min_fraction,
            "overshoot_win_fraction": outcome.overshoot_win_fraction,
            "backstepping_settling_fraction": dict(sorted(outcome.settling_fraction.items())),
            "attitude_unsettled_fraction": {
                noise: dict(sorted(values.items()))
                for noise, values in sorted(outcome.absence_fraction.items())
            },
            "passed": outcome.passed,
        },
    }


def save_summary(summary: dict[str, Any], path: str | Path) -> Path:
    """Persist a summary artifact as deterministic JSON."""
    destination = Path(path)
    destination.parent.mkdir(parents=True, exist_ok=True)
    destination.write_text(json.dumps(summary, sort_keys=True, indent=2), encoding="utf-8")
    return destination


def _flag(value: bool) -> str:
    return "yes" if value else "no"


__all__ = [
    "ABSENT",
    "METRICS_HEADER",
    "ORDERING_HEADER",
    "build_compare_summary",
    "build_sweep_summary",
    "format_metric",
    "metrics_row",
    "ordering_rows",
    "save_summary",
    "table_rows",
    "write_csv",
    "write_metrics_table",
]
