"""Backstepping control built from tracking and virtual-control errors."""

from __future__ import annotations

from dataclasses import dataclass

from phys_sims_quadrotor.control.base import thrust_tilt
from phys_sims_quadrotor.control.types import (
    BacksteppingErrors,
    BacksteppingGains,
    Measurement,
    ReferenceSignal,
)
from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import ControlVector


def backstepping_errors(
    m: Measurement,
    r: ReferenceSignal,
    g: BacksteppingGains,
) -> BacksteppingErrors:
    z1 = r.phi_d - m.phi
    z3 = r.theta_d - m.theta
    z5 = r.psi_d - m.psi
    z7 = m.z - r.z_d
    return BacksteppingErrors(
        z1=z1,
        z2=m.phid - r.phid_d - g.a1 * z1,
        z3=z3,
        z4=m.thetad - r.thetad_d - g.a3 * z3,
        z5=z5,
        z6=m.psid - r.psid_d - g.a5 * z5,
        z7=z7,
        z8=m.zd - r.zd_dot - g.a7 * z7,
    )


def backstepping_control(
    e: BacksteppingErrors,
    m: Measurement,
    w_r: float,
    g: BacksteppingGains,
    p: QuadrotorParams,
) -> ControlVector:
    """Attitude torques with model feed-forward and the altitude thrust law.

    ``z7`` points from reference to state, the opposite of ``z1``. The thrust law
    runs on the reference-to-state orientation ``-z7`` with its matching virtual
    error ``z8 + 2 a7 z7``, which closes the altitude loop as
    ``e'' + (a7 + a8) e' + (1 + a7 a8) e = 0``.
    """
    tilt = thrust_tilt(m.phi, m.theta)
    c = p.constants
    lever = p.arm_length

    u2 = (p.inertia_x / lever) * (
        e.z1
        - c.c1 * m.thetad * m.psid
        - c.c2 * m.thetad * w_r
        - g.a1 * (e.z2 + g.a1 * e.z1)
        - g.a2 * e.z2
    )
    u3 = (p.inertia_y / lever) * (
        e.z3
        - c.c3 * m.phid * m.psid
        - c.c4 * m.phid * w_r
        - g.a3 * (e.z4 + g.a3 * e.z3)
        - g.a4 * e.z4
    )
    u4 = p.inertia_z * (
        e.z5 - c.c5 * m.phid * m.thetad - g.a5 * (e.z6 + g.a5 * e.z5) - g.a6 * e.z6
    )

    z7 = -e.z7
    z8 = e.z8 + 2.0 * g.a7 * e.z7
    u1 = (p.mass / tilt) * (z7 + p.gravity - g.a7 * (z8 + g.a7 * z7) - g.a8 * z8)
    return ControlVector(u1, u2, u3, u4)


def backstepping_value_roll(e: BacksteppingErrors) -> float:
    return 0.5 * (e.z1**2 + e.z2**2)


def backstepping_value_altitude(e: BacksteppingErrors) -> float:
    return 0.5 * (e.z7**2 + e.z8**2)


@dataclass
class BacksteppingController:
    gains: BacksteppingGains
    params: QuadrotorParams
    name: str = "backstepping"

    def reset(self) -> None:
        return None

    def compute(
        self,
        measurement: Measurement,
        reference: ReferenceSignal,
        w_r: float,
        dt: float,
    ) -> ControlVector:
        errors = backstepping_errors(measurement, reference, self.gains)
        return backstepping_control(errors, measurement, w_r, self.gains, self.params)


__all__ = [
    "BacksteppingController",
    "backstepping_control",
    "backstepping_errors",
    "backstepping_value_altitude",
    "backstepping_value_roll",
]
