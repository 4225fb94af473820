"""Tests for seeded colored-noise streams and spectral slope fitting."""

from __future__ import annotations

import math
from dataclasses import replace

import numpy as np
import pytest

from phys_sims_quadrotor.noise import (
    MIN_SLOPE_SAMPLES,
    NoiseColor,
    NoiseHistory,
    NoiseSpec,
    NoiseStream,
    kasdin_coefficients,
    next_sample,
    psd_slope,
    target_slope,
    value_at,
    welch_psd,
)
from phys_sims_quadrotor.shared.errors import BandError

WHITE_STD = math.sqrt(0.01 / 0.1)


def _spec(color: NoiseColor, seed: int = 7) -> NoiseSpec:
    power = 0.01 if color is NoiseColor.WHITE else WHITE_STD
    return NoiseSpec(color=color, power=power, sample_time=0.1, seed=seed)


def test_white_noise_standard_deviation() -> None:
    samples = NoiseStream(_spec(NoiseColor.WHITE, seed=1)).take(100_000)
    assert float(np.std(samples)) == pytest.approx(0.3162, abs=0.01)


@pytest.mark.parametrize("color", list(NoiseColor))
def test_zero_power_gives_zero_samples(color: NoiseColor) -> None:
    stream = NoiseStream(NoiseSpec(color=color, power=0.0, sample_time=0.1, seed=3))
    assert np.all(stream.take(500) == 0.0)


@pytest.mark.parametrize("color", list(NoiseColor))
def test_equal_specs_replay_bit_identically(color: NoiseColor) -> None:
    first = NoiseStream(_spec(color)).take(1000)
    second = NoiseStream(_spec(color)).take(1000)
    np.testing.assert_array_equal(first, second)


def test_different_seeds_differ() -> None:
    first = NoiseStream(_spec(NoiseColor.PINK, seed=1)).take(100)
    second = NoiseStream(_spec(NoiseColor.PINK, seed=2)).take(100)
    assert not np.array_equal(first, second)


def test_clone_replays_from_the_same_point() -> None:
    stream = NoiseStream(_spec(NoiseColor.BLUE))
    stream.take(37)
    branch = stream.clone()
    np.testing.assert_array_equal(stream.take(200), branch.take(200))


def test_next_sample_holds_and_counts_ticks() -> None:
    stream = NoiseStream(_spec(NoiseColor.WHITE))
    value = next_sample(stream)
    assert stream.held == value
    assert stream.ticks == 1


@pytest.mark.parametrize("color", list(NoiseColor))
def test_amplitude_scaling_is_exact(color: NoiseColor) -> None:
    base = _spec(color)
    scaled_power = 4.0 * base.power if color is NoiseColor.WHITE else 2.0 * base.power
    scaled = replace(base, power=scaled_power)
    np.testing.assert_array_equal(
        NoiseStream(scaled).take(300), 2.0 * NoiseStream(base).take(300)
    )


@pytest.mark.parametrize("color", [NoiseColor.WHITE, NoiseColor.BLUE, NoiseColor.PURPLE])
def test_sample_mean_is_near_zero(color: NoiseColor) -> None:
    spec = _spec(color, seed=11)
    samples = NoiseStream(spec).take(100_000)
    assert abs(float(np.mean(samples))) < 5.0 * spec.std / math.sqrt(samples.size)


# Pink and brown keep most of their power near the tempering corner, so the
# 1e5-sample mean wanders past the white-noise bound (brown, seed 1: |mean| 0.0254
# against 0.0249). They are held to a fixed fraction of the target std instead.
@pytest.mark.parametrize("color", [NoiseColor.PINK, NoiseColor.BROWN])
def test_low_frequency_colors_have_small_mean(color: NoiseColor) -> None:
    samples = NoiseStream(_spec(color, seed=1)).take(100_000)
    assert abs(float(np.mean(samples))) < 0.25 * WHITE_STD


@pytest.mark.parametrize("color", [NoiseColor.PINK, NoiseColor.BROWN])
def test_low_frequency_colors_have_target_std(color: NoiseColor) -> None:
    samples = NoiseStream(_spec(color, seed=5)).take(100_000)
    assert float(np.std(samples)) == pytest.approx(WHITE_STD, rel=0.25)


@pytest.mark.parametrize(
    ("color", "expected"),
    [
        (NoiseColor.WHITE, 0.0),
        (NoiseColor.PINK, -10.0),
        (NoiseColor.BROWN, -20.0),
        (NoiseColor.BLUE, 10.0),
        (NoiseColor.PURPLE, 20.0),
    ],
)
def test_spectral_slopes_match_colors(color: NoiseColor, expected: float) -> None:
    assert target_slope(color) == expected
    samples = NoiseStream(_spec(color, seed=21)).take(2**16)
    slope = psd_slope(samples, 0.1, 0.1, 4.0)
    assert abs(slope - expected) <= 3.0


def test_psd_slope_rejects_silent_input() -> None:
    with pytest.raises(BandError):
        psd_slope(np.zeros(MIN_SLOPE_SAMPLES), 0.1, 0.1, 4.0)


def test_psd_slope_preconditions() -> None:
    samples = NoiseStream(_spec(NoiseColor.WHITE)).take(MIN_SLOPE_SAMPLES)
    with pytest.raises(ValueError, match="at least"):
        psd_slope(samples[:1000], 0.1, 0.1, 4.0)
    with pytest.raises(ValueError, match="band"):
        psd_slope(samples, 0.1, 4.0, 0.1)
    with pytest.raises(ValueError, match="band"):
        psd_slope(samples, 0.1, 0.1, 6.0)
    with pytest.raises(BandError, match="bins"):
        psd_slope(samples, 0.1, 1.0, 1.02)


def test_welch_psd_is_one_sided_density() -> None:
    samples = NoiseStream(_spec(NoiseColor.WHITE)).take(MIN_SLOPE_SAMPLES)
    freqs, power = welch_psd(samples, 0.1, nperseg=256)
    assert freqs[0] == 0.0
    assert freqs[-1] == pytest.approx(5.0)
    # Integrated density recovers the variance.
    variance = float(np.sum(power) * (freqs[1] - freqs[0]))
    assert variance == pytest.approx(float(np.var(samples)), rel=0.1)


def test_kasdin_coefficients_recurrence() -> None:
    np.testing.assert_allclose(kasdin_coefficients(1.0, 3), [1.0, -0.5, -0.125])
    np.testing.assert_allclose(kasdin_coefficients(2.0, 3), [1.0, -1.0, 0.0])


def test_value_at_holds_left_closed_intervals() -> None:
    history = NoiseHistory.record(NoiseStream(_spec(NoiseColor.WHITE)), 4)
    assert value_at(history, 0.05) == history.samples[0]
    assert value_at(history, 0.1) == history.samples[1]
    assert value_at(history, 0.19) == history.samples[1]
    assert value_at(history, 0.3) == history.samples[3]
    with pytest.raises(ValueError):
        value_at(history, -0.01)
    with pytest.raises(ValueError, match="beyond"):
        value_at(history, 0.4)


def test_noise_spec_invariants() -> None:
    with pytest.raises(ValueError, match="power"):
        NoiseSpec(color=NoiseColor.WHITE, power=-1.0, sample_time=0.1)
    with pytest.raises(ValueError, match="sample_time"):
        NoiseSpec(color=NoiseColor.PINK, power=1.0, sample_time=0.0)
    assert NoiseColor.PURPLE.alpha == -2
