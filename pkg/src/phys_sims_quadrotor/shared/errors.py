"""Error hierarchy shared by every simulation layer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from phys_sims_quadrotor.sim.trace import Trace


class QuadSimError(Exception):
    """Base class for all domain errors raised by this package."""


class DomainError(QuadSimError, ValueError):
    """Raised when a kinematic transform is evaluated at a singular attitude."""


class TiltError(QuadSimError, ValueError):
    """Raised when a controller loses the cos(phi)cos(theta) thrust denominator."""


class BandError(QuadSimError, ValueError):
    """Raised when a spectral fitting window holds too few usable bins."""


@dataclass(eq=False)
class ConfigError(QuadSimError):
    """Structured configuration error pointing at the offending source line."""

    path: str
    line: int | None
    key: str
    message: str

    def __str__(self) -> str:
        location = self.path if self.line is None else f"{self.path}:{self.line}"
        return f"{location}: {self.key}: {self.message}"


class RunHaltedError(QuadSimError, RuntimeError):
    """Raised when a closed-loop run stops early; carries the rows recorded so far."""

    def __init__(self, reason: str, message: str, trace: Trace) -> None:
        super().__init__(f"{reason}: {message}")
        self.reason = reason
        self.message = message
        self.trace = trace


__all__ = [
    "BandError",
    "ConfigError",
    "DomainError",
    "QuadSimError",
    "RunHaltedError",
    "TiltError",
]
