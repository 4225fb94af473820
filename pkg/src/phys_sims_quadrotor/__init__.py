"""Deterministic quadrotor simulation and controller robustness benchmarking."""

from phys_sims_quadrotor.control import ControllerKind, ReferenceSignal, build_controller
from phys_sims_quadrotor.metrics import ResponseMetrics, analyze
from phys_sims_quadrotor.model import ControlVector, QuadrotorParams, RigidBodyState
from phys_sims_quadrotor.noise import NoiseColor, NoiseSpec, NoiseStream
from phys_sims_quadrotor.sim import Scenario, Trace, run

__all__ = [
    "ControlVector",
    "ControllerKind",
    "NoiseColor",
    "NoiseSpec",
    "NoiseStream",
    "QuadrotorParams",
    "ReferenceSignal",
    "ResponseMetrics",
    "RigidBodyState",
    "Scenario",
    "Trace",
    "analyze",
    "build_controller",
    "run",
]
