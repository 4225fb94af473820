"""Closed-loop scenario engine: noise, control, allocation, integration."""

from __future__ import annotations

import logging
from dataclasses import replace

import numpy as np

from phys_sims_quadrotor.control.registry import build_controller
from phys_sims_quadrotor.control.types import Measurement
from phys_sims_quadrotor.model.mixer import mix, perturb_speeds, relative_rotor_speed, unmix
from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.model.state import STATE_FIELDS, RigidBodyState
from phys_sims_quadrotor.noise.stream import NoiseStream
from phys_sims_quadrotor.shared.errors import RunHaltedError, TiltError
from phys_sims_quadrotor.shared.seeding import derive_seed
from phys_sims_quadrotor.sim.integrator import rk4_step_array
from phys_sims_quadrotor.sim.scenario import NoiseInjection, Scenario
from phys_sims_quadrotor.sim.trace import Trace

logger = logging.getLogger(__name__)

DIVERGENCE_LIMIT = 1e6
NOISE_CHANNELS = ("z", "phi", "theta", "psi")
NO_NOISE: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)


def noise_streams(sc: Scenario) -> list[NoiseStream]:
    """One stream per noise channel; identical for every controller given ``sc.seed``."""
    if sc.noise is None:
        return []
    return [
        NoiseStream(replace(sc.noise, seed=derive_seed(sc.seed, index)))
        for index in range(len(NOISE_CHANNELS))
    ]


def run(sc: Scenario, p: QuadrotorParams) -> Trace:
    """Simulate ``sc`` and return one row per step on the uniform grid.

    The controller sees the previous step's realized ``w_r``; the plant integrates
    with the ``w_r`` of the speeds realized on the current step.
    """
    controller = build_controller(sc.controller, sc.gains, p)
    controller.reset()
    streams = noise_streams(sc)
    n_steps = sc.n_steps
    hold = sc.hold_steps
    rows = n_steps + 1

    time = np.arange(rows, dtype=np.float64) * sc.dt
    states = np.zeros((rows, len(STATE_FIELDS)))
    controls = np.zeros((rows, 4))
    speeds = np.zeros((rows, 4))
    noise_rows = np.zeros((rows, 4))
    clamped = np.zeros(rows, dtype=np.bool_)

    def partial(recorded: int) -> Trace:
        return Trace(
            time=time[:recorded].copy(),
            states=states[:recorded].copy(),
            controls=controls[:recorded].copy(),
            speeds=speeds[:recorded].copy(),
            noise=noise_rows[:recorded].copy(),
            clamped=clamped[:recorded].copy(),
            complete=False,
        )

    logger.debug(
        "run controller=%s noise=%s injection=%s seed=%d steps=%d",
        sc.controller.value,
        "none" if sc.noise is None else sc.noise.color.value,
        sc.injection.value,
        sc.seed,
        n_steps,
    )

    x = sc.initial_state.as_array()
    noise = NO_NOISE
    sensed = sc.injection is NoiseInjection.SENSOR
    w_r_prev = 0.0
    for index in range(rows):
        if streams and index % hold == 0:
            n_z, n_phi, n_theta, n_psi = (stream.next_sample() for stream in streams)
            noise = (n_z, n_phi, n_theta, n_psi)
        measured = noise if sensed else NO_NOISE
        measurement = Measurement.from_state(RigidBodyState.from_array(x), measured)
        try:
            demanded = controller.compute(measurement, sc.reference, w_r_prev, sc.dt)
        except TiltError as exc:
            logger.debug("tilt at t=%.4f: %s", time[index], exc)
            raise RunHaltedError("tilt", f"t={time[index]:.4f}: {exc}", partial(index)) from exc

        allocation = unmix(demanded, p)
        if streams and not sensed:
            jittered = perturb_speeds(allocation.speeds, noise, p)
            allocation = jittered._replace(clamped=allocation.clamped or jittered.clamped)
        realized = mix(allocation.speeds, p)
        w_r = relative_rotor_speed(allocation.speeds)

        states[index] = x
        controls[index] = realized.as_array()
        speeds[index] = allocation.speeds.as_array()
        noise_rows[index] = noise
        clamped[index] = allocation.clamped
        if index == n_steps:
            break

        x = rk4_step_array(x, controls[index], w_r, p, sc.dt)
        if not np.all(np.isfinite(x)) or float(np.max(np.abs(x))) > DIVERGENCE_LIMIT:
            worst = STATE_FIELDS[int(np.argmax(np.nan_to_num(np.abs(x), nan=np.inf)))]
            msg = f"t={time[index + 1]:.4f}: state component {worst} exceeded {DIVERGENCE_LIMIT:g}"
            logger.debug("divergence %s", msg)
            raise RunHaltedError("divergence", msg, partial(index + 1))
        w_r_prev = w_r

    return Trace(
        time=time,
        states=states,
        controls=controls,
        speeds=speeds,
        noise=noise_rows,
        clamped=clamped,
    )


__all__ = ["DIVERGENCE_LIMIT", "NOISE_CHANNELS", "noise_streams", "run"]
