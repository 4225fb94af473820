"""Physical constants of the quadrotor airframe."""

from __future__ import annotations

import math
from dataclasses import dataclass, fields
from functools import cached_property


@dataclass(frozen=True)
class ModelConstants:
    """Inertial coupling ratios shared by the dynamics and feed-forward terms."""

    c1: float
    c2: float
    c3: float
    c4: float
    c5: float


@dataclass(frozen=True)
class QuadrotorParams:
    """Airframe constants; defaults are the reference OS4-class platform.

    ``thrust_coeff`` defaults to 3.13e-5 N s^2. The raw tabulated value 3.13 can be
    loaded through configuration but puts hover far below any rotor speed that
    saturates, so the speed limit never acts.
    """

    mass: float = 0.65
    gravity: float = 9.81
    arm_length: float = 0.23
    thrust_coeff: float = 3.13e-5
    drag_coeff: float = 7.5e-7
    inertia_x: float = 7.5e-3
    inertia_y: float = 7.5e-3
    inertia_z: float = 1.3e-2
    rotor_inertia: float = 6.5e-5
    w_max: float = 1000.0
    t_max: float = 0.15

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if not math.isfinite(value) or value <= 0.0:
                msg = f"{item.name} must be finite and strictly positive, got {value!r}"
                raise ValueError(msg)
        if self.inertia_x != self.inertia_y:
            msg = (
                "cross configuration requires inertia_x == inertia_y, "
                f"got {self.inertia_x!r} and {self.inertia_y!r}"
            )
            raise ValueError(msg)

    @property
    def weight(self) -> float:
        return self.mass * self.gravity

    @cached_property
    def constants(self) -> ModelConstants:
        ix, iy, iz = self.inertia_x, self.inertia_y, self.inertia_z
        return ModelConstants(
            c1=(iy - iz) / ix,
            c2=self.rotor_inertia / ix,
            c3=(iz - ix) / iy,
            c4=self.rotor_inertia / iy,
            c5=(ix - iy) / iz,
        )


__all__ = ["ModelConstants", "QuadrotorParams"]
