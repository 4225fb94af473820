"""Nonlinear six-degree-of-freedom equations of motion."""

from __future__ import annotations

import math

import numpy as np

from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import ControlVector, FloatArray, RigidBodyState


def state_derivative_array(
    x: FloatArray,
    u: FloatArray,
    w_r: float,
    p: QuadrotorParams,
) -> FloatArray:
    """Time derivative of a state array laid out as ``STATE_FIELDS``.

    The angle slots integrate the stored Euler rates directly; body rates and
    Euler rates are identified near hover. Roll and pitch torques enter through
    ``l / I``, the gain that the Lyapunov and backstepping attitude laws invert.
    """
    _, _, _, xd, yd, zd, phi, theta, psi, phid, thetad, psid = x.tolist()
    u1, u2, u3, u4 = u.tolist()
    c = p.constants
    m = p.mass

    cf, sf = math.cos(phi), math.sin(phi)
    ct, st = math.cos(theta), math.sin(theta)
    cp, sp = math.cos(psi), math.sin(psi)

    xdd = (u1 / m) * (cf * st * cp + sf * sp)
    ydd = (u1 / m) * (st * sp * cf - sf * cp)
    zdd = (u1 * cf * ct - m * p.gravity) / m

    phidd = p.arm_length * u2 / p.inertia_x + c.c1 * thetad * psid + c.c2 * thetad * w_r
    thetadd = p.arm_length * u3 / p.inertia_y + c.c3 * phid * psid - c.c4 * phid * w_r
    psidd = u4 / p.inertia_z + c.c5 * thetad * phid

    return np.array(
        [xd, yd, zd, xdd, ydd, zdd, phid, thetad, psid, phidd, thetadd, psidd],
        dtype=np.float64,
    )


def state_derivative(
    s: RigidBodyState,
    u: ControlVector,
    w_r: float,
    p: QuadrotorParams,
) -> RigidBodyState:
    """Return ``ds/dt`` packed as a :class:`RigidBodyState` of derivatives."""
    derivative = state_derivative_array(s.as_array(), u.as_array(), w_r, p)
    return RigidBodyState.from_array(derivative)


__all__ = ["state_derivative", "state_derivative_array"]
