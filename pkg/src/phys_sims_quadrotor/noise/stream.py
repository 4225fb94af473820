"""Seeded streaming generators for white and power-law colored noise."""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np
from scipy.signal import lfilter

from phys_sims_quadrotor.model.state import FloatArray
from phys_sims_quadrotor.noise.spec import NoiseSpec

KASDIN_TAPS = 1024
# Pole radius applied as rho**k to the autoregressive taps so pink and brown stay
# stationary; the corner sits far below the fitted band.
TEMPERING = 1.0 - 2.0**-8
_IMPULSE_LENGTH = 2**14
_DRAW_BLOCK = 1024


def kasdin_coefficients(beta: float, taps: int) -> FloatArray:
    """Power-law filter taps ``c_k = c_{k-1} * (k - 1 - beta/2) / k`` with ``c_0 = 1``."""
    coefficients = np.empty(taps, dtype=np.float64)
    coefficients[0] = 1.0
    for k in range(1, taps):
        coefficients[k] = coefficients[k - 1] * (k - 1 - 0.5 * beta) / k
    return coefficients


@lru_cache(maxsize=None)
def _shaping_filter(alpha: int, taps: int) -> tuple[FloatArray, float]:
    """Return history-ordered taps and the unit-input standard deviation."""
    if alpha > 0:
        ar = kasdin_coefficients(alpha, taps + 1) * TEMPERING ** np.arange(taps + 1)
        impulse = np.zeros(_IMPULSE_LENGTH)
        impulse[0] = 1.0
        response = lfilter([1.0], ar, impulse)
        weights = ar[1:][::-1].copy()
        std = float(math.sqrt(np.sum(response**2)))
    else:
        ma = kasdin_coefficients(-alpha, taps)
        weights = ma[::-1].copy()
        std = float(math.sqrt(np.sum(ma**2)))
    weights.setflags(write=False)
    return weights, std


class NoiseStream:
    """Single-owner sample source; every call advances one ``sample_time`` tick.

    Gaussian variates come from numpy's ``PCG64`` bit generator seeded with the
    spec seed. Colored streams run a Kasdin filter over ``taps`` past values
    (autoregressive for pink and brown, moving average for blue and purple) and
    discard ``2 * taps`` start-up samples.
    """

    def __init__(self, spec: NoiseSpec, *, taps: int = KASDIN_TAPS) -> None:
        self.spec = spec
        self.held = 0.0
        self.ticks = 0
        self._taps = taps
        self._rng = np.random.Generator(np.random.PCG64(spec.seed))
        self._draws: FloatArray = np.empty(0)
        self._draw_index = 0
        self._history = np.zeros(2 * taps, dtype=np.float64)
        self._cursor = taps - 1

        alpha = spec.color.alpha
        if alpha == 0:
            self._weights: FloatArray = np.empty(0)
            unit_std = 1.0
        else:
            self._weights, unit_std = _shaping_filter(alpha, taps)
        self._scale = spec.std / unit_std

        if alpha != 0 and self._scale != 0.0:
            for _ in range(2 * taps):
                self._shape(self._draw())

    def next_sample(self) -> float:
        """Advance one tick and return the newly held value."""
        if self._scale == 0.0:
            value = 0.0
        else:
            value = self._scale * self._shape(self._draw())
        self.held = value
        self.ticks += 1
        return value

    def take(self, count: int) -> FloatArray:
        return np.array([self.next_sample() for _ in range(count)], dtype=np.float64)

    def clone(self) -> NoiseStream:
        """Duplicate the full generator state so both copies replay identically."""
        return copy.deepcopy(self)

    def _draw(self) -> float:
        if self._draw_index >= self._draws.size:
            self._draws = self._rng.standard_normal(_DRAW_BLOCK)
            self._draw_index = 0
        value = float(self._draws[self._draw_index])
        self._draw_index += 1
        return value

    def _shape(self, white: float) -> float:
        alpha = self.spec.color.alpha
        if alpha == 0:
            return white
        if alpha > 0:
            shaped = white - float(np.dot(self._window(), self._weights))
            self._push(shaped)
            return shaped
        self._push(white)
        return float(np.dot(self._window(), self._weights))

    def _window(self) -> FloatArray:
        # Oldest to newest, length taps.
        start = self._cursor + 1
        return self._history[start : start + self._taps]

    def _push(self, value: float) -> None:
        self._cursor = (self._cursor + 1) % self._taps
        self._history[self._cursor] = value
        self._history[self._cursor + self._taps] = value


@dataclass(frozen=True)
class NoiseHistory:
    """Held samples of one stream; sample ``k`` covers ``[k*Ts, (k+1)*Ts)``."""

    sample_time: float
    samples: tuple[float, ...] = field(default_factory=tuple)

    @classmethod
    def record(cls, stream: NoiseStream, count: int) -> NoiseHistory:
        values = tuple(float(value) for value in stream.take(count))
        return cls(sample_time=stream.spec.sample_time, samples=values)


def value_at(history: NoiseHistory, t: float) -> float:
    """Zero-order-hold lookup with left-closed sample intervals."""
    if t < 0.0:
        msg = f"t must be >= 0, got {t!r}"
        raise ValueError(msg)
    index = math.floor(t / history.sample_time + 1e-9)
    if index >= len(history.samples):
        msg = f"t={t!r} lies beyond the {len(history.samples)} recorded samples"
        raise ValueError(msg)
    return history.samples[index]


__all__ = [
    "KASDIN_TAPS",
    "TEMPERING",
    "NoiseHistory",
    "NoiseStream",
    "kasdin_coefficients",
    "value_at",
]
