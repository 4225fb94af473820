"""Reference, measurement and gain value types shared by the controllers."""

from __future__ import annotations

import math
from dataclasses import astuple, dataclass, fields

from phys_sims_quadrotor.model.state import RigidBodyState

CHANNELS = ("altitude", "roll", "pitch", "yaw")


@dataclass(frozen=True)
class ReferenceSignal:
    """Step targets for altitude and attitude; reference rates default to zero."""

    z_d: float = 0.0
    phi_d: float = 0.0
    theta_d: float = 0.0
    psi_d: float = 0.0
    zd_dot: float = 0.0
    phid_d: float = 0.0
    thetad_d: float = 0.0
    psid_d: float = 0.0

    def __post_init__(self) -> None:
        if not all(math.isfinite(value) for value in astuple(self)):
            msg = "reference values must be finite"
            raise ValueError(msg)
        if abs(self.theta_d) >= math.pi / 2:
            msg = f"theta_d must satisfy |theta_d| < pi/2, got {self.theta_d!r}"
            raise ValueError(msg)


@dataclass(frozen=True)
class Measurement:
    """Sensor-side view of the state: noisy outputs plus true rates."""

    z: float
    phi: float
    theta: float
    psi: float
    zd: float = 0.0
    phid: float = 0.0
    thetad: float = 0.0
    psid: float = 0.0

    @classmethod
    def from_state(
        cls,
        state: RigidBodyState,
        noise: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0),
    ) -> Measurement:
        """Add ``(n_z, n_phi, n_theta, n_psi)`` to the measured outputs."""
        n_z, n_phi, n_theta, n_psi = noise
        return cls(
            z=state.Z + n_z,
            phi=state.phi + n_phi,
            theta=state.theta + n_theta,
            psi=state.psi + n_psi,
            zd=state.Zd,
            phid=state.phid,
            thetad=state.thetad,
            psid=state.psid,
        )


@dataclass(frozen=True)
class ChannelGains:
    kp: float
    ki: float
    kd: float

    def __post_init__(self) -> None:
        for item in fields(self):
            value = getattr(self, item.name)
            if not math.isfinite(value) or value < 0.0:
                msg = f"PID gain {item.name} must be finite and >= 0, got {value!r}"
                raise ValueError(msg)


@dataclass(frozen=True)
class PidGains:
    altitude: ChannelGains = ChannelGains(0.82, 1.0, 1.65)
    roll: ChannelGains = ChannelGains(0.12, 0.05, 0.06)
    pitch: ChannelGains = ChannelGains(0.14, 0.07, 0.08)
    yaw: ChannelGains = ChannelGains(0.13, 0.05, 0.1)

    def channel(self, name: str) -> ChannelGains:
        if name not in CHANNELS:
            msg = f"unknown PID channel: {name}"
            raise KeyError(msg)
        gains: ChannelGains = getattr(self, name)
        return gains


@dataclass(frozen=True)
class PidState:
    """Per-channel integral and previous error, ordered as ``CHANNELS``."""

    integral: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)
    prev_error: tuple[float, float, float, float] = (0.0, 0.0, 0.0, 0.0)

    @classmethod
    def zero(cls) -> PidState:
        return cls()


def _require_positive(instance: LyapunovGains | BacksteppingGains) -> None:
    for item in fields(instance):
        value = getattr(instance, item.name)
        if not math.isfinite(value) or value <= 0.0:
            name = type(instance).__name__
            msg = f"{name}.{item.name} must be finite and > 0, got {value!r}"
            raise ValueError(msg)


@dataclass(frozen=True)
class LyapunovGains:
    k_z: float = 2.15
    k1: float = 0.167
    k2: float = 0.168
    k3: float = 0.104

    def __post_init__(self) -> None:
        _require_positive(self)


@dataclass(frozen=True)
class BacksteppingGains:
    """Pairs ``(a1, a2)`` roll, ``(a3, a4)`` pitch, ``(a5, a6)`` yaw, ``(a7, a8)`` altitude."""

    a1: float = 8.6
    a2: float = 6.9
    a3: float = 8.1
    a4: float = 3.9
    a5: float = 8.4
    a6: float = 4.1
    a7: float = 1.4
    a8: float = 5.9

    def __post_init__(self) -> None:
        _require_positive(self)


@dataclass(frozen=True)
class BacksteppingErrors:
    z1: float
    z2: float
    z3: float
    z4: float
    z5: float
    z6: float
    z7: float
    z8: float


__all__ = [
    "CHANNELS",
    "BacksteppingErrors",
    "BacksteppingGains",
    "ChannelGains",
    "LyapunovGains",
    "Measurement",
    "PidGains",
    "PidState",
    "ReferenceSignal",
]
