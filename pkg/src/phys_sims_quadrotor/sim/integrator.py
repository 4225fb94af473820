"""Classical fourth-order Runge-Kutta stepping of the equations of motion."""

from __future__ import annotations

from phys_sims_quadrotor.model.dynamics import state_derivative_array
from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import ControlVector, FloatArray, RigidBodyState


def rk4_step_array(
    x: FloatArray,
    u: FloatArray,
    w_r: float,
    p: QuadrotorParams,
    dt: float,
) -> FloatArray:
    """Advance a state array by ``dt`` holding ``u`` and ``w_r`` across the step."""
    k1 = state_derivative_array(x, u, w_r, p)
    k2 = state_derivative_array(x + 0.5 * dt * k1, u, w_r, p)
    k3 = state_derivative_array(x + 0.5 * dt * k2, u, w_r, p)
    k4 = state_derivative_array(x + dt * k3, u, w_r, p)
    x_next: FloatArray = x + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return x_next


def rk4_step(
    s: RigidBodyState,
    u: ControlVector,
    w_r: float,
    p: QuadrotorParams,
    dt: float,
) -> RigidBodyState:
    if dt <= 0.0:
        msg = f"dt must be > 0, got {dt!r}"
        raise ValueError(msg)
    return RigidBodyState.from_array(rk4_step_array(s.as_array(), u.as_array(), w_r, p, dt))


__all__ = ["rk4_step", "rk4_step_array"]
