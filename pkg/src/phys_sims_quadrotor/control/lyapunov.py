"""Lyapunov-based attitude and altitude control with its energy functions."""

from __future__ import annotations

import math
from dataclasses import dataclass

from phys_sims_quadrotor.control.base import thrust_tilt
from phys_sims_quadrotor.control.types import LyapunovGains, Measurement, ReferenceSignal
from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import ControlVector


def lyapunov_control(
    m: Measurement,
    r: ReferenceSignal,
    g: LyapunovGains,
    p: QuadrotorParams,
) -> ControlVector:
    """Position-error feedback with rate damping ``k1..k3`` and ``k_z``.

    The attitude torques scale the angle error by ``I/l`` (yaw by ``Iz``) and the
    thrust law subtracts ``k_z * zd`` so that the altitude energy decays at the
    rate returned by :func:`lyapunov_rate_altitude`.
    """
    tilt = thrust_tilt(m.phi, m.theta)
    lever = p.arm_length
    u2 = -(p.inertia_x / lever) * (m.phi - r.phi_d) - g.k1 * m.phid
    u3 = -(p.inertia_y / lever) * (m.theta - r.theta_d) - g.k2 * m.thetad
    u4 = -p.inertia_z * (m.psi - r.psi_d) - g.k3 * m.psid
    u1 = (p.mass / tilt) * (p.gravity + (r.z_d - m.z)) - g.k_z * m.zd
    return ControlVector(u1, u2, u3, u4)


def lyapunov_value_attitude(m: Measurement, r: ReferenceSignal) -> float:
    return 0.5 * (
        m.phid**2
        + (m.phi - r.phi_d) ** 2
        + m.thetad**2
        + (m.theta - r.theta_d) ** 2
        + m.psid**2
        + (m.psi - r.psi_d) ** 2
    )


def lyapunov_value_altitude(m: Measurement, r: ReferenceSignal) -> float:
    return 0.5 * ((m.z - r.z_d) ** 2 + m.zd**2)


def lyapunov_rate_altitude(m: Measurement, g: LyapunovGains, p: QuadrotorParams) -> float:
    """Closed-loop time derivative of :func:`lyapunov_value_altitude`."""
    return -(m.zd**2) * (g.k_z / p.mass) * math.cos(m.theta) * math.cos(m.phi)


@dataclass
class LyapunovController:
    gains: LyapunovGains
    params: QuadrotorParams
    name: str = "lyapunov"

    def reset(self) -> None:
        return None

    def compute(
        self,
        measurement: Measurement,
        reference: ReferenceSignal,
        w_r: float,
        dt: float,
    ) -> ControlVector:
        return lyapunov_control(measurement, reference, self.gains, self.params)


__all__ = [
    "LyapunovController",
    "lyapunov_control",
    "lyapunov_rate_altitude",
    "lyapunov_value_altitude",
    "lyapunov_value_attitude",
]
