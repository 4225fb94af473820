"""Shared contracts used across model, simulation and harness layers."""

from phys_sims_quadrotor.shared.errors import (
    BandError,
    ConfigError,
    DomainError,
    QuadSimError,
    RunHaltedError,
    TiltError,
)
from phys_sims_quadrotor.shared.seeding import derive_seed, hash_text

__all__ = [
    "BandError",
    "ConfigError",
    "DomainError",
    "QuadSimError",
    "RunHaltedError",
    "TiltError",
    "derive_seed",
    "hash_text",
]
