"""Welch spectral estimation and power-law slope fitting."""

from __future__ import annotations

import numpy as np
import numpy.typing as npt
from scipy.signal import welch

from phys_sims_quadrotor.model.state import FloatArray
from phys_sims_quadrotor.shared.errors import BandError

MIN_SLOPE_SAMPLES = 2**14
MIN_BAND_BINS = 8
DEFAULT_NPERSEG = 1024


def welch_psd(
    samples: npt.ArrayLike,
    sample_time: float,
    *,
    nperseg: int = DEFAULT_NPERSEG,
) -> tuple[FloatArray, FloatArray]:
    """One-sided Welch density estimate with Hann segments and 50% overlap."""
    data = np.asarray(samples, dtype=np.float64)
    if sample_time <= 0.0:
        msg = f"sample_time must be > 0, got {sample_time!r}"
        raise ValueError(msg)
    segment = min(nperseg, data.size)
    freqs, power = welch(data, fs=1.0 / sample_time, nperseg=segment, scaling="density")
    return np.asarray(freqs, dtype=np.float64), np.asarray(power, dtype=np.float64)


def psd_slope(
    samples: npt.ArrayLike,
    sample_time: float,
    f_lo: float,
    f_hi: float,
    *,
    nperseg: int = DEFAULT_NPERSEG,
) -> float:
    """Least-squares slope of ``10*log10(PSD)`` against ``log10(f)`` in dB/decade."""
    data = np.asarray(samples, dtype=np.float64)
    if data.size < MIN_SLOPE_SAMPLES:
        msg = f"psd_slope needs at least {MIN_SLOPE_SAMPLES} samples, got {data.size}"
        raise ValueError(msg)
    nyquist = 0.5 / sample_time
    if not 0.0 < f_lo < f_hi < nyquist:
        msg = f"band must satisfy 0 < f_lo < f_hi < {nyquist:g} Hz, got [{f_lo!r}, {f_hi!r}]"
        raise ValueError(msg)

    freqs, power = welch_psd(data, sample_time, nperseg=nperseg)
    window = (freqs >= f_lo) & (freqs <= f_hi)
    bins = int(np.count_nonzero(window))
    if bins < MIN_BAND_BINS:
        msg = f"[{f_lo:g}, {f_hi:g}] Hz holds {bins} bins, need {MIN_BAND_BINS}"
        raise BandError(msg)
    band = power[window]
    if not np.all(np.isfinite(band)) or np.any(band <= 0.0):
        msg = "periodogram has no usable power inside the fitting band"
        raise BandError(msg)

    slope, _ = np.polyfit(np.log10(freqs[window]), 10.0 * np.log10(band), 1)
    return float(slope)


__all__ = ["DEFAULT_NPERSEG", "MIN_BAND_BINS", "MIN_SLOPE_SAMPLES", "psd_slope", "welch_psd"]
