"""Closed-loop simulation: integrator, scenarios, engine and traces."""

from phys_sims_quadrotor.sim.engine import DIVERGENCE_LIMIT, noise_streams, run
from phys_sims_quadrotor.sim.integrator import rk4_step, rk4_step_array
from phys_sims_quadrotor.sim.scenario import DEFAULT_DURATION, NoiseInjection, Scenario
from phys_sims_quadrotor.sim.trace import TRACE_COLUMNS, Trace, read_trace_csv

__all__ = [
    "DEFAULT_DURATION",
    "DIVERGENCE_LIMIT",
    "TRACE_COLUMNS",
    "NoiseInjection",
    "Scenario",
    "Trace",
    "noise_streams",
    "read_trace_csv",
    "rk4_step",
    "rk4_step_array",
    "run",
]
