"""Seed-battery aggregation of per-run step metrics."""

from __future__ import annotations

import math
from collections.abc import Callable, Sequence
from dataclasses import dataclass
from statistics import mean, median

from phys_sims_quadrotor.harness.records import RunRecord
from phys_sims_quadrotor.metrics.analysis import ChannelResult
from phys_sims_quadrotor.metrics.step import DegenerateChannel, ResponseMetrics

AggregatorFn = Callable[[list[float]], float]


@dataclass(frozen=True)
class MetricSpec:
    """Metric field of :class:`ResponseMetrics` with its reducer across seeds."""

    name: str
    aggregate: str = "median"


METRIC_SPECS = (
    MetricSpec("rise_time"),
    MetricSpec("overshoot_pct"),
    MetricSpec("settling_time"),
)


def metric_value(record: RunRecord, channel: str, spec: MetricSpec) -> float | None:
    """Per-seed value; absent metrics and failed runs count as ``+inf``.

    Returns ``None`` when the channel had no step to measure.
    """
    if not record.ok:
        return math.inf
    result = record.metrics.get(channel)
    if result is None or isinstance(result, DegenerateChannel):
        return None
    value = getattr(result, spec.name)
    return math.inf if value is None else float(value)


def aggregate_channel(
    records: Sequence[RunRecord],
    channel: str,
    band_pct: float,
    specs: tuple[MetricSpec, ...] = METRIC_SPECS,
) -> ChannelResult:
    """Reduce one controller's channel across seeds into a single metrics row."""
    reduced: dict[str, float] = {}
    for spec in specs:
        values = [
            value
            for value in (metric_value(record, channel, spec) for record in records)
            if value is not None
        ]
        if values:
            reduced[spec.name] = _resolve_aggregator(spec.aggregate)(values)
    if not reduced:
        return DegenerateChannel(channel=channel, value=math.nan)
    return ResponseMetrics(
        rise_time=_finite_or_none(reduced.get("rise_time", math.inf)),
        overshoot_pct=reduced.get("overshoot_pct", math.inf),
        settling_time=_finite_or_none(reduced.get("settling_time", math.inf)),
        band_pct=band_pct,
    )


def _finite_or_none(value: float) -> float | None:
    return value if math.isfinite(value) else None


def _resolve_aggregator(name: str) -> AggregatorFn:
    normalized = name.lower()
    if normalized == "median":
        return lambda values: float(median(values))
    if normalized == "mean":
        return lambda values: float(mean(values))
    if normalized == "min":
        return lambda values: float(min(values))
    if normalized == "max":
        return lambda values: float(max(values))
    msg = f"unsupported metric aggregator: {name}"
    raise ValueError(msg)


__all__ = ["METRIC_SPECS", "MetricSpec", "aggregate_channel", "metric_value"]
