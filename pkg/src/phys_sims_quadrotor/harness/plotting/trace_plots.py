"""Reference-tracking figures for closed-loop traces."""

from __future__ import annotations

from collections.abc import Mapping
from pathlib import Path

from phys_sims_quadrotor.control.types import ReferenceSignal
from phys_sims_quadrotor.harness.plotting.common import create_figure, finalize_figure
from phys_sims_quadrotor.metrics.analysis import CHANNEL_ORDER, CHANNEL_REFERENCE, CHANNEL_STATE
from phys_sims_quadrotor.sim.trace import Trace

_UNITS = {"roll": "rad", "pitch": "rad", "yaw": "rad", "altitude": "m"}


def plot_reference_tracking(
    traces: Mapping[str, Trace],
    reference: ReferenceSignal,
    output_path: str | Path,
    *,
    title: str = "",
    dpi: int = 150,
) -> Path:
    """One panel per channel with every controller's response and the dashed reference."""
    if not traces:
        msg = "at least one trace is required"
        raise ValueError(msg)

    fig, axes = create_figure(nrows=2, ncols=2, figsize=(10.0, 7.0))
    for ax, channel in zip(axes.flat, CHANNEL_ORDER, strict=True):
        for label, trace in traces.items():
            ax.plot(trace.time, trace.channel(CHANNEL_STATE[channel]), linewidth=1.2, label=label)
        ax.axhline(
            float(getattr(reference, CHANNEL_REFERENCE[channel])),
            color="black",
            linestyle="--",
            linewidth=0.8,
            label="reference",
        )
        ax.set_xlabel("time [s]")
        ax.set_ylabel(f"{channel} [{_UNITS[channel]}]")
        ax.grid(alpha=0.3)
    axes.flat[0].legend(loc="lower right", fontsize="small")
    if title:
        fig.suptitle(title)
    return finalize_figure(fig, output_path, dpi=dpi)


__all__ = ["plot_reference_tracking"]
