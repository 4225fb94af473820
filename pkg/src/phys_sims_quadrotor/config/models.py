"""Validated experiment configuration models."""

from __future__ import annotations

import math
from typing import Annotated, Any, Literal

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from phys_sims_quadrotor.control.base import ControllerKind
from phys_sims_quadrotor.control.registry import GainSet
from phys_sims_quadrotor.control.types import (
    BacksteppingGains,
    ChannelGains,
    LyapunovGains,
    PidGains,
    ReferenceSignal,
)
from phys_sims_quadrotor.model.params import QuadrotorParams
from phys_sims_quadrotor.noise.spec import NoiseColor, NoiseSpec
from phys_sims_quadrotor.sim.scenario import (
    DEFAULT_DURATION,
    NoiseInjection,
    Scenario,
    is_grid_multiple,
)

Positive = Annotated[float, Field(gt=0.0, allow_inf_nan=False)]
NonNegative = Annotated[float, Field(ge=0.0, allow_inf_nan=False)]
Finite = Annotated[float, Field(allow_inf_nan=False)]

NoiseChoice = Literal["none", "white", "pink", "brown", "blue", "purple"]
ControllerChoice = Literal["pid", "lyapunov", "backstepping"]
InjectionChoice = Literal["rotor", "sensor"]

DEFAULT_NOISE_POWER = 0.01
DEFAULT_SAMPLE_TIME = 0.1
WIDE_BAND_COLORS = frozenset({NoiseColor.BLUE, NoiseColor.PURPLE})


class _Section(BaseModel):
    model_config = ConfigDict(extra="forbid", frozen=True)


class QuadrotorSection(_Section):
    mass: Positive = 0.65
    gravity: Positive = 9.81
    arm_length: Positive = 0.23
    thrust_coeff: Positive = 3.13e-5
    drag_coeff: Positive = 7.5e-7
    inertia_x: Positive = 7.5e-3
    inertia_y: Positive = 7.5e-3
    inertia_z: Positive = 1.3e-2
    rotor_inertia: Positive = 6.5e-5
    w_max: Positive = 1000.0
    t_max: Positive = 0.15

    @model_validator(mode="after")
    def _cross_configuration(self) -> QuadrotorSection:
        if self.inertia_x != self.inertia_y:
            msg = "inertia_x must equal inertia_y for the cross configuration"
            raise ValueError(msg)
        return self

    def to_params(self) -> QuadrotorParams:
        return QuadrotorParams(**self.model_dump())


class PidChannelSection(_Section):
    kp: NonNegative
    ki: NonNegative
    kd: NonNegative


class PidSection(_Section):
    altitude: PidChannelSection = PidChannelSection(kp=0.82, ki=1.0, kd=1.65)
    roll: PidChannelSection = PidChannelSection(kp=0.12, ki=0.05, kd=0.06)
    pitch: PidChannelSection = PidChannelSection(kp=0.14, ki=0.07, kd=0.08)
    yaw: PidChannelSection = PidChannelSection(kp=0.13, ki=0.05, kd=0.1)

    def to_gains(self) -> PidGains:
        return PidGains(
            **{
                name: ChannelGains(**getattr(self, name).model_dump())
                for name in ("altitude", "roll", "pitch", "yaw")
            }
        )


class LyapunovSection(_Section):
    k_z: Positive = 2.15
    k1: Positive = 0.167
    k2: Positive = 0.168
    k3: Positive = 0.104


class BacksteppingSection(_Section):
    a1: Positive = 8.6
    a2: Positive = 6.9
    a3: Positive = 8.1
    a4: Positive = 3.9
    a5: Positive = 8.4
    a6: Positive = 4.1
    a7: Positive = 1.4
    a8: Positive = 5.9


class GainsSection(_Section):
    pid: PidSection = PidSection()
    lyapunov: LyapunovSection = LyapunovSection()
    backstepping: BacksteppingSection = BacksteppingSection()

    def for_controller(self, kind: ControllerKind) -> GainSet:
        if kind is ControllerKind.PID:
            return self.pid.to_gains()
        if kind is ControllerKind.LYAPUNOV:
            return LyapunovGains(**self.lyapunov.model_dump())
        return BacksteppingGains(**self.backstepping.model_dump())


class ReferenceSection(_Section):
    z_d: Finite = 1.0
    phi_d: Finite = 0.2
    theta_d: Finite = 0.2
    psi_d: Finite = 0.2

    @field_validator("theta_d")
    @classmethod
    def _pitch_below_singularity(cls, value: float) -> float:
        if abs(value) >= math.pi / 2:
            msg = "|theta_d| must be below pi/2"
            raise ValueError(msg)
        return value

    def to_signal(self) -> ReferenceSignal:
        return ReferenceSignal(**self.model_dump())


class NoiseSection(_Section):
    """``colored_std`` defaults to the white-noise sigma ``sqrt(power / sample_time)``."""

    color: NoiseChoice = "white"
    injection: InjectionChoice = "rotor"
    power: NonNegative = DEFAULT_NOISE_POWER
    sample_time: Positive = DEFAULT_SAMPLE_TIME
    colored_std: NonNegative

    @model_validator(mode="before")
    @classmethod
    def _fill_colored_std(cls, data: Any) -> Any:
        if not isinstance(data, dict) or data.get("colored_std") is not None:
            return data
        try:
            power = float(data.get("power", DEFAULT_NOISE_POWER))
            sample_time = float(data.get("sample_time", DEFAULT_SAMPLE_TIME))
        except (TypeError, ValueError):
            return data
        if power >= 0.0 and sample_time > 0.0 and math.isfinite(power / sample_time):
            return {**data, "colored_std": math.sqrt(power / sample_time)}
        return data

    def resolve_color(self, choice: str | None = None) -> NoiseColor | None:
        name = self.color if choice is None else choice
        return None if name == "none" else NoiseColor(name)

    def spec(self, color: NoiseColor, seed: int = 0) -> NoiseSpec:
        amplitude = self.power if color is NoiseColor.WHITE else self.colored_std
        return NoiseSpec(color=color, power=amplitude, sample_time=self.sample_time, seed=seed)


class SimSection(_Section):
    dt: Positive = 0.01
    duration: Positive = DEFAULT_DURATION


class MetricsSection(_Section):
    band_pct: Positive = 2.0
    wide_band_pct: Positive = 5.0


class SpectrumSection(_Section):
    f_lo: Positive = 0.1
    f_hi: Positive = 4.0
    nperseg: int = Field(default=1024, ge=8)
    samples: int = Field(default=2**16, ge=2**14)

    @model_validator(mode="after")
    def _ordered_band(self) -> SpectrumSection:
        if self.f_lo >= self.f_hi:
            msg = "f_lo must be below f_hi"
            raise ValueError(msg)
        return self


class RunSection(_Section):
    seeds: tuple[int, ...] = tuple(range(1, 21))
    controller: ControllerChoice = "backstepping"
    output_dir: str = "results"
    workers: int = Field(default=1, ge=1)

    @field_validator("seeds", mode="before")
    @classmethod
    def _parse_seed_list(cls, value: Any) -> Any:
        if isinstance(value, str):
            return parse_seed_list(value)
        return value

    @field_validator("seeds")
    @classmethod
    def _non_empty(cls, value: tuple[int, ...]) -> tuple[int, ...]:
        if not value:
            msg = "at least one seed is required"
            raise ValueError(msg)
        if any(seed < 0 for seed in value):
            msg = "seeds must be non-negative"
            raise ValueError(msg)
        return value


class ExperimentConfig(_Section):
    """Every effective experiment setting; defaults reproduce the reference setup."""

    quadrotor: QuadrotorSection = QuadrotorSection()
    gains: GainsSection = GainsSection()
    reference: ReferenceSection = ReferenceSection()
    noise: NoiseSection = NoiseSection.model_validate({})
    sim: SimSection = SimSection()
    metrics: MetricsSection = MetricsSection()
    spectrum: SpectrumSection = SpectrumSection()
    run: RunSection = RunSection()

    @model_validator(mode="after")
    def _consistent_grids(self) -> ExperimentConfig:
        dt, sample_time = self.sim.dt, self.noise.sample_time
        if dt > sample_time:
            msg = f"sim.dt={dt!r} exceeds noise.sample_time={sample_time!r}"
            raise ValueError(msg)
        if not is_grid_multiple(sample_time, dt):
            msg = f"sim.dt={dt!r} must divide noise.sample_time={sample_time!r}"
            raise ValueError(msg)
        if not is_grid_multiple(self.sim.duration, dt):
            msg = f"sim.duration={self.sim.duration!r} must be a whole number of dt steps"
            raise ValueError(msg)
        if self.spectrum.f_hi >= 0.5 / sample_time:
            msg = f"spectrum.f_hi must be below the Nyquist rate {0.5 / sample_time:g} Hz"
            raise ValueError(msg)
        return self

    def params(self) -> QuadrotorParams:
        return self.quadrotor.to_params()

    def band_for(self, color: NoiseColor | None) -> float:
        """Settling band: the wide band for blue and purple noise, the base band otherwise."""
        if color in WIDE_BAND_COLORS:
            return self.metrics.wide_band_pct
        return self.metrics.band_pct

    def scenario(self, kind: ControllerKind, color: NoiseColor | None, seed: int) -> Scenario:
        return Scenario(
            controller=kind,
            gains=self.gains.for_controller(kind),
            reference=self.reference.to_signal(),
            noise=None if color is None else self.noise.spec(color),
            duration=self.sim.duration,
            dt=self.sim.dt,
            seed=seed,
            injection=NoiseInjection(self.noise.injection),
        )


def parse_seed_list(text: str) -> tuple[int, ...]:
    """Parse ``"1..20"`` (inclusive range), ``"3,5,8"`` or a single integer."""
    cleaned = text.strip()
    if ".." in cleaned:
        start_text, stop_text = cleaned.split("..", 1)
        start, stop = int(start_text), int(stop_text)
        if stop < start:
            msg = f"seed range {cleaned!r} is empty"
            raise ValueError(msg)
        return tuple(range(start, stop + 1))
    return tuple(int(part) for part in cleaned.split(",") if part.strip())


__all__ = [
    "WIDE_BAND_COLORS",
    "ExperimentConfig",
    "GainsSection",
    "MetricsSection",
    "NoiseSection",
    "QuadrotorSection",
    "ReferenceSection",
    "RunSection",
    "SimSection",
    "SpectrumSection",
    "parse_seed_list",
]
