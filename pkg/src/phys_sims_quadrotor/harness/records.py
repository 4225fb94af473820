"""Canonical batch result records."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any

from phys_sims_quadrotor.metrics.analysis import ChannelResult
from phys_sims_quadrotor.metrics.step import DegenerateChannel, ResponseMetrics


@dataclass(frozen=True)
class RunRecord:
    """Outcome of one (controller, noise, seed) run.

    ``error`` is ``None`` for a complete run, otherwise the halt reason
    (``"divergence"`` or ``"tilt"``) and ``metrics`` is empty.
    """

    controller: str
    noise: str
    seed: int
    band_pct: float
    metrics: dict[str, ChannelResult] = field(default_factory=dict)
    error: str | None = None
    message: str = ""
    rows: int = 0
    trace_path: str = ""

    @property
    def ok(self) -> bool:
        return self.error is None

    def to_dict(self) -> dict[str, Any]:
        return {
            "controller": self.controller,
            "noise": self.noise,
            "seed": self.seed,
            "band_pct": self.band_pct,
            "status": "ok" if self.ok else self.error,
            "message": self.message,
            "rows": self.rows,
            "trace": self.trace_path,
            "metrics": {name: channel_to_dict(result) for name, result in self.metrics.items()},
        }


@dataclass(frozen=True)
class CompareResult:
    """All controllers on one noise condition, per seed and aggregated."""

    noise: str
    band_pct: float
    seeds: tuple[int, ...]
    records: tuple[RunRecord, ...]
    aggregate: dict[tuple[str, str], ChannelResult]

    def record(self, controller: str, seed: int) -> RunRecord:
        for item in self.records:
            if item.controller == controller and item.seed == seed:
                return item
        msg = f"no run for controller={controller} seed={seed}"
        raise KeyError(msg)

    @property
    def failures(self) -> tuple[RunRecord, ...]:
        return tuple(item for item in self.records if not item.ok)


@dataclass(frozen=True)
class OrderingCell:
    """Overshoot ordering and settling outcome for one (noise, channel) cell."""

    noise: str
    channel: str
    band_pct: float
    overshoot: dict[str, float | None]
    beats_pid: bool
    beats_lyapunov: bool
    settled: tuple[str, ...]


@dataclass(frozen=True)
class SweepOutcome:
    compares: tuple[CompareResult, ...]
    cells: tuple[OrderingCell, ...]
    overshoot_win_fraction: float
    settling_fraction: dict[str, float]
    absence_fraction: dict[str, dict[str, float]]
    min_fraction: float = 0.8

    @property
    def passed(self) -> bool:
        return self.overshoot_win_fraction >= self.min_fraction and all(
            value >= self.min_fraction for value in self.settling_fraction.values()
        )


def channel_to_dict(result: ChannelResult) -> dict[str, Any]:
    if isinstance(result, DegenerateChannel):
        return {"degenerate": True, "value": _json_number(result.value)}
    return metrics_to_dict(result)


def metrics_to_dict(result: ResponseMetrics) -> dict[str, Any]:
    return {
        "rise_time": _json_number(result.rise_time),
        "overshoot_pct": _json_number(result.overshoot_pct),
        "settling_time": _json_number(result.settling_time),
        "band_pct": result.band_pct,
    }


def _json_number(value: float | None) -> float | None:
    if value is None or not math.isfinite(value):
        return None
    return value


__all__ = [
    "CompareResult",
    "OrderingCell",
    "RunRecord",
    "SweepOutcome",
    "channel_to_dict",
    "metrics_to_dict",
]
