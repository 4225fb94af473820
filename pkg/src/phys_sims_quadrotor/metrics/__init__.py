"""Step-response metrics used to compare controller robustness."""

from phys_sims_quadrotor.metrics.analysis import CHANNEL_ORDER, ChannelResult, analyze
from phys_sims_quadrotor.metrics.step import (
    DegenerateChannel,
    ResponseMetrics,
    StepChannel,
    overshoot,
    rise_time,
    settling_time,
    step_metrics,
)

__all__ = [
    "CHANNEL_ORDER",
    "ChannelResult",
    "DegenerateChannel",
    "ResponseMetrics",
    "StepChannel",
    "analyze",
    "overshoot",
    "rise_time",
    "settling_time",
    "step_metrics",
]
