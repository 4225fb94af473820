"""PID, Lyapunov-based and backstepping controllers behind one interface."""

from phys_sims_quadrotor.control.backstepping import (
    BacksteppingController,
    backstepping_control,
    backstepping_errors,
    backstepping_value_altitude,
    backstepping_value_roll,
)
from phys_sims_quadrotor.control.base import (
    TILT_EPSILON,
    Controller,
    ControllerKind,
    thrust_tilt,
)
from phys_sims_quadrotor.control.lyapunov import (
    LyapunovController,
    lyapunov_control,
    lyapunov_rate_altitude,
    lyapunov_value_altitude,
    lyapunov_value_attitude,
)
from phys_sims_quadrotor.control.pid import PidController, pid_control
from phys_sims_quadrotor.control.registry import GainSet, build_controller, default_gains
from phys_sims_quadrotor.control.types import (
    CHANNELS,
    BacksteppingErrors,
    BacksteppingGains,
    ChannelGains,
    LyapunovGains,
    Measurement,
    PidGains,
    PidState,
    ReferenceSignal,
)

__all__ = [
    "CHANNELS",
    "TILT_EPSILON",
    "BacksteppingController",
    "BacksteppingErrors",
    "BacksteppingGains",
    "ChannelGains",
    "Controller",
    "ControllerKind",
    "GainSet",
    "LyapunovController",
    "LyapunovGains",
    "Measurement",
    "PidController",
    "PidGains",
    "PidState",
    "ReferenceSignal",
    "backstepping_control",
    "backstepping_errors",
    "backstepping_value_altitude",
    "backstepping_value_roll",
    "build_controller",
    "default_gains",
    "lyapunov_control",
    "lyapunov_rate_altitude",
    "lyapunov_value_altitude",
    "lyapunov_value_attitude",
    "pid_control",
    "thrust_tilt",
]
