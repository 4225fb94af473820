"""Optional matplotlib figures for traces and noise spectra."""

from phys_sims_quadrotor.harness.plotting.noise_plots import plot_noise_psd
from phys_sims_quadrotor.harness.plotting.trace_plots import plot_reference_tracking

__all__ = ["plot_noise_psd", "plot_reference_tracking"]
