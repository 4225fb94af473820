"""Tests for the optional reference-tracking and spectrum figures."""

from __future__ import annotations

from pathlib import Path

import numpy as np
import pytest

from phys_sims_quadrotor.cli import EXIT_OK, main
from phys_sims_quadrotor.control import ControllerKind, ReferenceSignal, default_gains
from phys_sims_quadrotor.harness.plotting import plot_noise_psd, plot_reference_tracking
from phys_sims_quadrotor.model import QuadrotorParams
from phys_sims_quadrotor.noise import NoiseColor, NoiseSpec, NoiseStream
from phys_sims_quadrotor.noise.spectrum import welch_psd
from phys_sims_quadrotor.sim import Scenario, run


def _configure_agg_backend() -> None:
    matplotlib = pytest.importorskip("matplotlib")
    matplotlib.use("Agg", force=True)
    assert "agg" in matplotlib.get_backend().lower()


def test_reference_tracking_plot_creates_output_file(tmp_path: Path) -> None:
    _configure_agg_backend()
    reference = ReferenceSignal(z_d=1.0, phi_d=0.2, theta_d=0.2, psi_d=0.2)
    traces = {
        kind.value: run(
            Scenario(
                controller=kind,
                gains=default_gains(kind),
                reference=reference,
                duration=2.0,
            ),
            QuadrotorParams(),
        )
        for kind in (ControllerKind.PID, ControllerKind.BACKSTEPPING)
    }

    output = plot_reference_tracking(traces, reference, tmp_path / "tracking", title="step")

    assert output == tmp_path / "tracking.png"
    assert output.stat().st_size > 0


def test_reference_tracking_plot_needs_a_trace(tmp_path: Path) -> None:
    _configure_agg_backend()
    with pytest.raises(ValueError, match="trace"):
        plot_reference_tracking({}, ReferenceSignal(), tmp_path / "empty.png")


def test_noise_psd_plot_creates_output_file(tmp_path: Path) -> None:
    _configure_agg_backend()
    spec = NoiseSpec(color=NoiseColor.BROWN, power=0.3, sample_time=0.1, seed=5)
    samples = NoiseStream(spec).take(4096)
    freqs, power = welch_psd(samples, spec.sample_time, nperseg=512)

    output = plot_noise_psd(
        freqs,
        power,
        tmp_path / "psd.png",
        band=(0.1, 4.0),
        label="brown",
    )

    assert output.exists()
    assert output.stat().st_size > 0
    assert np.all(power >= 0.0)


def test_cli_plots_flag_writes_figures(tmp_path: Path) -> None:
    _configure_agg_backend()
    argv = ["compare", "--seeds", "1", "--out", str(tmp_path), "--plots"]
    assert main([*argv, "--set", "sim.duration=2"]) == EXIT_OK
    assert (tmp_path / "plots" / "white-seed1.png").exists()
