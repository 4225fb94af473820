"""Per-channel step metrics of a closed-loop trace."""

from __future__ import annotations

from phys_sims_quadrotor.control.types import ReferenceSignal
from phys_sims_quadrotor.metrics.step import (
    DegenerateChannel,
    ResponseMetrics,
    StepChannel,
    step_metrics,
)
from phys_sims_quadrotor.sim.trace import Trace

# Report order of the comparison tables.
CHANNEL_ORDER = ("roll", "pitch", "yaw", "altitude")
CHANNEL_STATE = {"roll": "phi", "pitch": "theta", "yaw": "psi", "altitude": "Z"}
CHANNEL_REFERENCE = {"roll": "phi_d", "pitch": "theta_d", "yaw": "psi_d", "altitude": "z_d"}

ChannelResult = ResponseMetrics | DegenerateChannel


def analyze(
    trace: Trace,
    references: ReferenceSignal,
    band_pct: float,
) -> dict[str, ChannelResult]:
    """Metrics for roll, pitch, yaw and altitude computed on the true state."""
    if not trace.complete:
        msg = "analyze requires a complete trace; the run halted early"
        raise ValueError(msg)
    results: dict[str, ChannelResult] = {}
    for name in CHANNEL_ORDER:
        values = trace.channel(CHANNEL_STATE[name])
        reference = float(getattr(references, CHANNEL_REFERENCE[name]))
        initial = float(values[0])
        if reference == initial:
            results[name] = DegenerateChannel(channel=name, value=reference)
            continue
        channel = StepChannel(trace.time, values, initial, reference)
        results[name] = step_metrics(channel, band_pct)
    return results


__all__ = [
    "CHANNEL_ORDER",
    "CHANNEL_REFERENCE",
    "CHANNEL_STATE",
    "ChannelResult",
    "analyze",
]
