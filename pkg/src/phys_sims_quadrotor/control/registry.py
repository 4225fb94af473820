"""Construction of controllers from a kind and its gain set."""

from __future__ import annotations

from phys_sims_quadrotor.control.backstepping import BacksteppingController
from phys_sims_quadrotor.control.base import Controller, ControllerKind
from phys_sims_quadrotor.control.lyapunov import LyapunovController
from phys_sims_quadrotor.control.pid import PidController
from phys_sims_quadrotor.control.types import BacksteppingGains, LyapunovGains, PidGains
from phys_sims_quadrotor.model.params import QuadrotorParams

GainSet = PidGains | LyapunovGains | BacksteppingGains

_GAIN_TYPES: dict[ControllerKind, type[GainSet]] = {
    ControllerKind.PID: PidGains,
    ControllerKind.LYAPUNOV: LyapunovGains,
    ControllerKind.BACKSTEPPING: BacksteppingGains,
}


def default_gains(kind: ControllerKind) -> GainSet:
    return _GAIN_TYPES[kind]()


def build_controller(kind: ControllerKind, gains: GainSet, params: QuadrotorParams) -> Controller:
    """Instantiate a fresh controller, checking that ``gains`` matches ``kind``."""
    expected = _GAIN_TYPES[kind]
    if not isinstance(gains, expected):
        msg = f"{kind.value} controller requires {expected.__name__}, got {type(gains).__name__}"
        raise TypeError(msg)
    if isinstance(gains, PidGains):
        return PidController(gains, params)
    if isinstance(gains, LyapunovGains):
        return LyapunovController(gains, params)
    return BacksteppingController(gains, params)


__all__ = ["GainSet", "build_controller", "default_gains"]
