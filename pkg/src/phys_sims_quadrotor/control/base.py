"""Common controller interface and the thrust-tilt guard."""

from __future__ import annotations

import math
from enum import Enum
from typing import Protocol

from phys_sims_quadrotor.control.types import Measurement, ReferenceSignal
from phys_sims_quadrotor.model.state import ControlVector
from phys_sims_quadrotor.shared.errors import TiltError

TILT_EPSILON = 1e-6


class ControllerKind(str, Enum):
    PID = "pid"
    LYAPUNOV = "lyapunov"
    BACKSTEPPING = "backstepping"


class Controller(Protocol):
    """Closed-loop control law evaluated once per integrator step."""

    name: str

    def reset(self) -> None:
        """Clear any internal memory before a new scenario."""

    def compute(
        self,
        measurement: Measurement,
        reference: ReferenceSignal,
        w_r: float,
        dt: float,
    ) -> ControlVector:
        """Return the demanded control vector for the current step."""


def thrust_tilt(phi: float, theta: float) -> float:
    """Return ``cos(phi) * cos(theta)`` or raise when it is at or below ``TILT_EPSILON``."""
    tilt = math.cos(phi) * math.cos(theta)
    if tilt <= TILT_EPSILON:
        msg = f"cos(phi)cos(theta)={tilt:.3g} at phi={phi:.6g}, theta={theta:.6g}"
        raise TiltError(msg)
    return tilt


__all__ = ["TILT_EPSILON", "Controller", "ControllerKind", "thrust_tilt"]
