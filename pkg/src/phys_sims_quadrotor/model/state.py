"""Value types for the rigid-body state, actuation and geometry."""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields

import numpy as np
import numpy.typing as npt

FloatArray = npt.NDArray[np.float64]

STATE_FIELDS = (
    "X",
    "Y",
    "Z",
    "Xd",
    "Yd",
    "Zd",
    "phi",
    "theta",
    "psi",
    "phid",
    "thetad",
    "psid",
)


@dataclass(frozen=True)
class RigidBodyState:
    """Earth-frame position and velocity plus Euler angles and Euler-angle rates."""

    X: float = 0.0
    Y: float = 0.0
    Z: float = 0.0
    Xd: float = 0.0
    Yd: float = 0.0
    Zd: float = 0.0
    phi: float = 0.0
    theta: float = 0.0
    psi: float = 0.0
    phid: float = 0.0
    thetad: float = 0.0
    psid: float = 0.0

    def __post_init__(self) -> None:
        values = astuple(self)
        if not all(math.isfinite(value) for value in values):
            msg = f"state components must be finite, got {values!r}"
            raise ValueError(msg)

    def as_array(self) -> FloatArray:
        return np.array(astuple(self), dtype=np.float64)

    @classmethod
    def from_array(cls, values: npt.ArrayLike) -> RigidBodyState:
        array = np.asarray(values, dtype=np.float64)
        if array.shape != (len(STATE_FIELDS),):
            msg = f"state array must have shape ({len(STATE_FIELDS)},), got {array.shape}"
            raise ValueError(msg)
        return cls(*(float(value) for value in array))


@dataclass(frozen=True)
class ControlVector:
    """Collective thrust ``U1`` and the roll, pitch and yaw torques ``U2..U4``.

    Demanded vectors may carry a negative thrust; only the vector rebuilt from
    clamped rotor speeds is guaranteed to have ``U1 >= 0``.
    """

    U1: float
    U2: float = 0.0
    U3: float = 0.0
    U4: float = 0.0

    def as_array(self) -> FloatArray:
        return np.array(astuple(self), dtype=np.float64)


@dataclass(frozen=True)
class RotorSpeeds:
    """Angular speeds of rotors 1..4 in rad/s."""

    w1: float
    w2: float
    w3: float
    w4: float

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if not math.isfinite(value) or value < 0.0:
                msg = f"{item.name} must be finite and non-negative, got {value!r}"
                raise ValueError(msg)

    @classmethod
    def uniform(cls, speed: float) -> RotorSpeeds:
        return cls(speed, speed, speed, speed)

    def as_array(self) -> FloatArray:
        return np.array(astuple(self), dtype=np.float64)


@dataclass(frozen=True)
class BodyRates:
    """Body-frame angular velocity components P, Q, R."""

    P: float
    Q: float
    R: float

    def __post_init__(self) -> None:
        if not all(math.isfinite(value) for value in (self.P, self.Q, self.R)):
            msg = "body rates must be finite"
            raise ValueError(msg)


@dataclass(frozen=True)
class InertiaGeometry:
    """Central sphere plus four point-mass rotors on arms of length ``arm_length``."""

    sphere_mass: float
    rotor_mass: float
    sphere_radius: float
    arm_length: float

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if not math.isfinite(value) or value < 0.0:
                msg = f"{item.name} must be finite and non-negative, got {value!r}"
                raise ValueError(msg)


__all__ = [
    "STATE_FIELDS",
    "BodyRates",
    "ControlVector",
    "FloatArray",
    "InertiaGeometry",
    "RigidBodyState",
    "RotorSpeeds",
]
