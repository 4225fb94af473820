"""Noise colors and the seeded specification of one disturbance stream."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

_MAX_SEED = 2**64


class NoiseColor(str, Enum):
    WHITE = "white"
    PINK = "pink"
    BROWN = "brown"
    BLUE = "blue"
    PURPLE = "purple"

    @property
    def alpha(self) -> int:
        """Exponent of the ``1/f**alpha`` power spectral density."""
        return _ALPHA[self]


_ALPHA = {
    NoiseColor.WHITE: 0,
    NoiseColor.PINK: 1,
    NoiseColor.BROWN: 2,
    NoiseColor.BLUE: -1,
    NoiseColor.PURPLE: -2,
}


def target_slope(color: NoiseColor) -> float:
    """Ideal spectral slope in dB per decade."""
    return -10.0 * color.alpha


@dataclass(frozen=True)
class NoiseSpec:
    """One zero-order-hold noise source.

    For white noise ``power`` is a spectral power and the sample variance is
    ``power / sample_time``. For the other colors ``power`` is the target
    standard deviation of the shaped stream.
    """

    color: NoiseColor
    power: float
    sample_time: float
    seed: int = 0

    def __post_init__(self) -> None:
        if not math.isfinite(self.power) or self.power < 0.0:
            msg = f"noise power must be finite and >= 0, got {self.power!r}"
            raise ValueError(msg)
        if not math.isfinite(self.sample_time) or self.sample_time <= 0.0:
            msg = f"noise sample_time must be > 0, got {self.sample_time!r}"
            raise ValueError(msg)
        if not 0 <= self.seed < _MAX_SEED:
            msg = f"noise seed must fit in 64 unsigned bits, got {self.seed!r}"
            raise ValueError(msg)

    @property
    def std(self) -> float:
        """Standard deviation of every emitted sample."""
        if self.color is NoiseColor.WHITE:
            return math.sqrt(self.power / self.sample_time)
        return self.power


__all__ = ["NoiseColor", "NoiseSpec", "target_slope"]
