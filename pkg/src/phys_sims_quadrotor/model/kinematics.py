"""Attitude kinematics: rotation matrices, Euler-rate transforms and inertia."""

from __future__ import annotations

import math

import numpy as np

from phys_sims_quadrotor.model.state import BodyRates, FloatArray, InertiaGeometry
from phys_sims_quadrotor.shared.errors import DomainError


def elementary_rotations(phi: float, theta: float, psi: float) -> tuple[FloatArray, ...]:
    """Return the roll, pitch and yaw factor matrices in that order."""
    cf, sf = math.cos(phi), math.sin(phi)
    ct, st = math.cos(theta), math.sin(theta)
    cp, sp = math.cos(psi), math.sin(psi)
    roll = np.array([[1.0, 0.0, 0.0], [0.0, cf, sf], [0.0, -sf, cf]])
    pitch = np.array([[ct, 0.0, -st], [0.0, 1.0, 0.0], [st, 0.0, ct]])
    yaw = np.array([[cp, sp, 0.0], [-sp, cp, 0.0], [0.0, 0.0, 1.0]])
    return roll, pitch, yaw


def rotation_matrix(phi: float, theta: float, psi: float) -> FloatArray:
    """Composed rotation ``R(phi) @ R(theta) @ R(psi)`` written out entrywise."""
    cf, sf = math.cos(phi), math.sin(phi)
    ct, st = math.cos(theta), math.sin(theta)
    cp, sp = math.cos(psi), math.sin(psi)
    return np.array(
        [
            [ct * cp, ct * sp, -st],
            [sf * st * cp - cf * sp, sf * st * sp + cf * cp, sf * ct],
            [cf * st * cp + sf * sp, cf * st * sp - sf * cp, cf * ct],
        ]
    )


def euler_rate_matrix(phi: float, theta: float) -> FloatArray:
    """Matrix ``T`` mapping body rates (P, Q, R) to Euler-angle rates."""
    if abs(theta) >= math.pi / 2:
        msg = f"euler rate transform is singular at theta={theta!r}"
        raise DomainError(msg)
    cf, sf = math.cos(phi), math.sin(phi)
    ct, tt = math.cos(theta), math.tan(theta)
    return np.array(
        [
            [1.0, sf * tt, cf * tt],
            [0.0, cf, -sf],
            [0.0, sf / ct, cf / ct],
        ]
    )


def body_to_euler_rates(rates: BodyRates, phi: float, theta: float) -> FloatArray:
    """Return ``[phid, thetad, psid]`` for the given body rates."""
    transform = euler_rate_matrix(phi, theta)
    result: FloatArray = transform @ np.array([rates.P, rates.Q, rates.R])
    return result


def inertia_from_geometry(geom: InertiaGeometry) -> tuple[float, float, float]:
    """Moments of inertia ``(Ix, Iy, Iz)`` of a sphere with four point rotors."""
    sphere = 0.4 * geom.sphere_mass * geom.sphere_radius**2
    arm = geom.arm_length**2 * geom.rotor_mass
    ix = sphere + 2.0 * arm
    return ix, ix, sphere + 4.0 * arm


__all__ = [
    "body_to_euler_rates",
    "elementary_rotations",
    "euler_rate_matrix",
    "inertia_from_geometry",
    "rotation_matrix",
]
