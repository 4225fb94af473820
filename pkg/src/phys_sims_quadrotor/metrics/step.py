"""Step-response quantities: 10-90% rise time, overshoot and band settling time."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import numpy.typing as npt

from phys_sims_quadrotor.model.state import FloatArray

RISE_LOW = 0.1
RISE_HIGH = 0.9
_GRID_RTOL = 1e-6


@dataclass(frozen=True, eq=False)
class StepChannel:
    """One response column paired with the step it should follow."""

    time: FloatArray
    values: FloatArray
    initial: float
    reference: float

    def __post_init__(self) -> None:
        if self.time.ndim != 1 or self.time.size == 0 or self.time.shape != self.values.shape:
            msg = "step channel needs non-empty 1-D time and values of equal length"
            raise ValueError(msg)
        if self.time.size > 1:
            steps = np.diff(self.time)
            if steps[0] <= 0.0 or not np.allclose(steps, steps[0], rtol=_GRID_RTOL, atol=0.0):
                msg = "step channel time grid must be uniform and increasing"
                raise ValueError(msg)
        if self.reference == self.initial:
            msg = "step channel reference equals its initial value; no step to measure"
            raise ValueError(msg)

    @classmethod
    def from_values(
        cls,
        time: npt.ArrayLike,
        values: npt.ArrayLike,
        reference: float,
        initial: float | None = None,
    ) -> StepChannel:
        samples = np.asarray(values, dtype=np.float64)
        if samples.size == 0:
            msg = "step channel needs non-empty 1-D time and values of equal length"
            raise ValueError(msg)
        start = float(samples[0]) if initial is None else initial
        return cls(np.asarray(time, dtype=np.float64), samples, start, reference)

    def normalized(self) -> FloatArray:
        """Sign-corrected progress: 0 at the initial value, 1 at the reference."""
        result: FloatArray = (self.values - self.initial) / (self.reference - self.initial)
        return result


@dataclass(frozen=True)
class ResponseMetrics:
    rise_time: float | None
    overshoot_pct: float
    settling_time: float | None
    band_pct: float


@dataclass(frozen=True)
class DegenerateChannel:
    """Marker for a channel whose reference equals its initial value."""

    channel: str
    value: float


def rise_time(ch: StepChannel) -> float | None:
    progress = ch.normalized()
    t_low = _first_crossing(ch.time, progress, RISE_LOW)
    t_high = _first_crossing(ch.time, progress, RISE_HIGH)
    if t_low is None or t_high is None:
        return None
    return t_high - t_low


def overshoot(ch: StepChannel) -> float:
    peak = float(np.max(ch.normalized()))
    return max(0.0, 100.0 * peak - 100.0)


def settling_time(ch: StepChannel, band_pct: float) -> float | None:
    """Earliest time after which the response stays in the band to the end of the trace."""
    if not math.isfinite(band_pct) or band_pct <= 0.0:
        msg = f"band_pct must be > 0, got {band_pct!r}"
        raise ValueError(msg)
    tolerance = band_pct / 100.0
    progress = ch.normalized()
    outside = np.flatnonzero(np.abs(progress - 1.0) > tolerance)
    if outside.size == 0:
        return 0.0
    last = int(outside[-1])
    if last == progress.size - 1:
        return None

    before, after = float(progress[last]), float(progress[last + 1])
    edge = 1.0 + tolerance if before > 1.0 else 1.0 - tolerance
    t0, t1 = float(ch.time[last]), float(ch.time[last + 1])
    crossing = t0 + (t1 - t0) * (edge - before) / (after - before)
    return crossing - float(ch.time[0])


def step_metrics(ch: StepChannel, band_pct: float) -> ResponseMetrics:
    return ResponseMetrics(
        rise_time=rise_time(ch),
        overshoot_pct=overshoot(ch),
        settling_time=settling_time(ch, band_pct),
        band_pct=band_pct,
    )


def _first_crossing(time: FloatArray, progress: FloatArray, level: float) -> float | None:
    reached = np.flatnonzero(progress >= level)
    if reached.size == 0:
        return None
    index = int(reached[0])
    if index == 0:
        return float(time[0])
    y0, y1 = float(progress[index - 1]), float(progress[index])
    t0, t1 = float(time[index - 1]), float(time[index])
    return t0 + (t1 - t0) * (level - y0) / (y1 - y0)


__all__ = [
    "DegenerateChannel",
    "ResponseMetrics",
    "StepChannel",
    "overshoot",
    "rise_time",
    "settling_time",
    "step_metrics",
]
