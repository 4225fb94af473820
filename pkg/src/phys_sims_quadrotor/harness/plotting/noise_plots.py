"""Spectral figures for generated noise streams."""

from __future__ import annotations

from pathlib import Path

import numpy as np

from phys_sims_quadrotor.harness.plotting.common import create_figure, finalize_figure
from phys_sims_quadrotor.model.state import FloatArray


def plot_noise_psd(
    freqs: FloatArray,
    power: FloatArray,
    output_path: str | Path,
    *,
    band: tuple[float, float] | None = None,
    label: str = "",
    dpi: int = 150,
) -> Path:
    """Log-log Welch estimate; the fitting band is shaded when given."""
    positive = freqs > 0.0
    fig, ax = create_figure()
    ax.loglog(freqs[positive], np.maximum(power[positive], np.finfo(float).tiny), linewidth=1.0)
    if band is not None:
        ax.axvspan(band[0], band[1], color="tab:orange", alpha=0.15, label="fit band")
        ax.legend(loc="best", fontsize="small")
    ax.set_xlabel("frequency [Hz]")
    ax.set_ylabel("PSD [units^2/Hz]")
    if label:
        ax.set_title(label)
    ax.grid(alpha=0.3, which="both")
    return finalize_figure(fig, output_path, dpi=dpi)


__all__ = ["plot_noise_psd"]
