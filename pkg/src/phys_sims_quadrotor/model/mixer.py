"""Rotor allocation between squared speeds and the control vector."""

from __future__ import annotations

import math
from typing import NamedTuple

import numpy as np

from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import ControlVector, FloatArray, RotorSpeeds

# Relative slack on w_max^2 below which round-off is clipped without flagging.
_CLAMP_TOLERANCE = 1e-9


class Allocation(NamedTuple):
    speeds: RotorSpeeds
    clamped: bool


def mixer_matrix(p: QuadrotorParams) -> FloatArray:
    """Map ``[w1^2, w2^2, w3^2, w4^2]`` onto ``[U1, U2, U3, U4]``."""
    b, d, lb = p.thrust_coeff, p.drag_coeff, p.arm_length * p.thrust_coeff
    return np.array(
        [
            [b, b, b, b],
            [0.0, -lb, 0.0, lb],
            [lb, 0.0, -lb, 0.0],
            [-d, d, -d, d],
        ]
    )


def inverse_mixer_matrix(p: QuadrotorParams) -> FloatArray:
    """Closed-form inverse of :func:`mixer_matrix`."""
    thrust = 1.0 / (4.0 * p.thrust_coeff)
    torque = 1.0 / (2.0 * p.thrust_coeff * p.arm_length)
    drag = 1.0 / (4.0 * p.drag_coeff)
    return np.array(
        [
            [thrust, 0.0, torque, -drag],
            [thrust, -torque, 0.0, drag],
            [thrust, 0.0, -torque, -drag],
            [thrust, torque, 0.0, drag],
        ]
    )


def mix(w: RotorSpeeds, p: QuadrotorParams) -> ControlVector:
    squared = w.as_array() ** 2
    u = mixer_matrix(p) @ squared
    return ControlVector(float(u[0]), float(u[1]), float(u[2]), float(u[3]))


def unmix(u: ControlVector, p: QuadrotorParams) -> Allocation:
    """Solve for rotor speeds, clamping each ``w_i^2`` into ``[0, w_max^2]``."""
    squared = inverse_mixer_matrix(p) @ u.as_array()
    ceiling = p.w_max**2
    slack = _CLAMP_TOLERANCE * ceiling
    clamped = bool(np.any(squared < -slack) or np.any(squared > ceiling + slack))
    speeds = np.sqrt(np.clip(squared, 0.0, ceiling))
    return Allocation(RotorSpeeds(*(float(value) for value in speeds)), clamped)


# Rotor rows against (collective, roll, pitch, yaw) columns; the sign pattern of
# the inverse mixer.
_CHANNEL_PATTERN = np.array(
    [
        [1.0, 0.0, 1.0, -1.0],
        [1.0, -1.0, 0.0, 1.0],
        [1.0, 0.0, -1.0, -1.0],
        [1.0, 1.0, 0.0, 1.0],
    ]
)


def perturb_speeds(
    w: RotorSpeeds,
    jitter: tuple[float, float, float, float],
    p: QuadrotorParams,
) -> Allocation:
    """Add per-channel rotor-speed jitter ``(collective, roll, pitch, yaw)`` in rad/s.

    Each channel moves the rotors along the pattern that drives only that
    channel to first order; the result is clamped into ``[0, w_max]``.
    """
    moved = w.as_array() + _CHANNEL_PATTERN @ np.asarray(jitter, dtype=np.float64)
    clamped = bool(np.any(moved < 0.0) or np.any(moved > p.w_max))
    speeds = np.clip(moved, 0.0, p.w_max)
    return Allocation(RotorSpeeds(*(float(value) for value in speeds)), clamped)


def relative_rotor_speed(w: RotorSpeeds) -> float:
    """Net rotor speed ``-w1 + w2 - w3 + w4`` driving the gyroscopic terms."""
    return -w.w1 + w.w2 - w.w3 + w.w4


def hover_speed(p: QuadrotorParams) -> float:
    return math.sqrt(p.weight / (4.0 * p.thrust_coeff))


def rotor_forces(w: RotorSpeeds, p: QuadrotorParams) -> FloatArray:
    result: FloatArray = p.thrust_coeff * w.as_array() ** 2
    return result


def rotor_torques(w: RotorSpeeds, p: QuadrotorParams) -> FloatArray:
    result: FloatArray = p.drag_coeff * w.as_array() ** 2
    return result


__all__ = [
    "Allocation",
    "hover_speed",
    "inverse_mixer_matrix",
    "mix",
    "mixer_matrix",
    "perturb_speeds",
    "relative_rotor_speed",
    "rotor_forces",
    "rotor_torques",
    "unmix",
]
