"""Seeded colored-noise streams and spectral verification tools."""

from phys_sims_quadrotor.noise.spec import NoiseColor, NoiseSpec, target_slope
from phys_sims_quadrotor.noise.spectrum import MIN_SLOPE_SAMPLES, psd_slope, welch_psd
from phys_sims_quadrotor.noise.stream import (
    KASDIN_TAPS,
    NoiseHistory,
    NoiseStream,
    kasdin_coefficients,
    value_at,
)


def next_sample(stream: NoiseStream) -> float:
    return stream.next_sample()


__all__ = [
    "KASDIN_TAPS",
    "MIN_SLOPE_SAMPLES",
    "NoiseColor",
    "NoiseHistory",
    "NoiseSpec",
    "NoiseStream",
    "kasdin_coefficients",
    "next_sample",
    "psd_slope",
    "target_slope",
    "value_at",
    "welch_psd",
]
