"""Discrete PID control of altitude and attitude."""

from __future__ import annotations

from dataclasses import dataclass, field

from phys_sims_quadrotor.control.base import thrust_tilt
from phys_sims_quadrotor.control.types import (
    CHANNELS,
    Measurement,
    PidGains,
    PidState,
    ReferenceSignal,
)
from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import ControlVector


def pid_control(
    m: Measurement,
    r: ReferenceSignal,
    st: PidState,
    g: PidGains,
    p: QuadrotorParams,
    dt: float,
) -> tuple[ControlVector, PidState]:
    """Evaluate the four PID loops and return the advanced loop memory.

    The integral uses rectangular accumulation and the derivative a backward
    difference of the error; there is no derivative filter and no anti-windup.
    """
    if dt <= 0.0:
        msg = f"dt must be > 0, got {dt!r}"
        raise ValueError(msg)
    tilt = thrust_tilt(m.phi, m.theta)

    errors = (r.z_d - m.z, r.phi_d - m.phi, r.theta_d - m.theta, r.psi_d - m.psi)
    integral = tuple(acc + e * dt for acc, e in zip(st.integral, errors, strict=True))
    outputs: list[float] = []
    for name, e, acc, prev in zip(CHANNELS, errors, integral, st.prev_error, strict=True):
        gains = g.channel(name)
        outputs.append(gains.kp * e + gains.ki * acc + gains.kd * (e - prev) / dt)

    pid_z, pid_phi, pid_theta, pid_psi = outputs
    u1 = p.mass * (p.gravity + pid_z) / tilt
    state = PidState(
        integral=(integral[0], integral[1], integral[2], integral[3]),
        prev_error=errors,
    )
    return ControlVector(u1, pid_phi, pid_theta, pid_psi), state


@dataclass
class PidController:
    gains: PidGains
    params: QuadrotorParams
    name: str = "pid"
    state: PidState = field(default_factory=PidState.zero)

    def reset(self) -> None:
        self.state = PidState.zero()

    def compute(
        self,
        measurement: Measurement,
        reference: ReferenceSignal,
        w_r: float,
        dt: float,
    ) -> ControlVector:
        u, self.state = pid_control(
            measurement, reference, self.state, self.gains, self.params, dt
        )
        return u


__all__ = ["PidController", "pid_control"]
