"""Closed-loop scenario definition."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

from phys_sims_quadrotor.control.base import ControllerKind
from phys_sims_quadrotor.control.registry import GainSet, default_gains
from phys_sims_quadrotor.control.types import ReferenceSignal
from phys_sims_quadrotor.model.state import RigidBodyState
from phys_sims_quadrotor.noise.spec import NoiseSpec

_GRID_TOLERANCE = 1e-9
DEFAULT_DURATION = 60.0


class NoiseInjection(str, Enum):
    """Where the four noise channels enter the loop."""

    ROTOR = "rotor"
    SENSOR = "sensor"


@dataclass(frozen=True)
class Scenario:
    """One closed-loop run: controller, step reference, optional noise.

    ``noise`` describes four channels (z, phi, theta, psi); each channel gets its
    own stream whose seed is derived from ``seed`` and the channel index, so
    ``noise.seed`` itself is not used. With ``ROTOR`` injection the channels are
    rotor-speed jitter in rad/s along the collective, roll, pitch and yaw
    patterns; with ``SENSOR`` injection they are added to the measured outputs.
    """

    controller: ControllerKind
    gains: GainSet
    reference: ReferenceSignal = ReferenceSignal()
    noise: NoiseSpec | None = None
    duration: float = DEFAULT_DURATION
    dt: float = 0.01
    initial_state: RigidBodyState = RigidBodyState()
    seed: int = 0
    injection: NoiseInjection = NoiseInjection.ROTOR

    def __post_init__(self) -> None:
        if not math.isfinite(self.duration) or self.duration <= 0.0:
            msg = f"duration must be > 0, got {self.duration!r}"
            raise ValueError(msg)
        if not math.isfinite(self.dt) or self.dt <= 0.0:
            msg = f"dt must be > 0, got {self.dt!r}"
            raise ValueError(msg)
        if self.seed < 0:
            msg = f"seed must be non-negative, got {self.seed!r}"
            raise ValueError(msg)
        if not is_grid_multiple(self.duration, self.dt):
            msg = f"duration {self.duration!r} is not a whole number of dt={self.dt!r} steps"
            raise ValueError(msg)
        if self.noise is not None:
            if self.dt > self.noise.sample_time:
                msg = f"dt={self.dt!r} exceeds noise sample_time={self.noise.sample_time!r}"
                raise ValueError(msg)
            if not is_grid_multiple(self.noise.sample_time, self.dt):
                msg = (
                    f"dt={self.dt!r} does not divide noise sample_time="
                    f"{self.noise.sample_time!r}"
                )
                raise ValueError(msg)
        expected = type(default_gains(self.controller))
        if not isinstance(self.gains, expected):
            msg = f"{self.controller.value} scenario requires {expected.__name__} gains"
            raise TypeError(msg)

    @property
    def n_steps(self) -> int:
        return round(self.duration / self.dt)

    @property
    def hold_steps(self) -> int:
        """Integrator steps per noise tick (1 when noise is disabled)."""
        if self.noise is None:
            return 1
        return round(self.noise.sample_time / self.dt)


def is_grid_multiple(total: float, step: float) -> bool:
    ratio = total / step
    return abs(ratio - round(ratio)) < _GRID_TOLERANCE * max(1.0, ratio)


__all__ = ["DEFAULT_DURATION", "NoiseInjection", "Scenario", "is_grid_multiple"]
