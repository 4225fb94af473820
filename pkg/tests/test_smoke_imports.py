"""Smoke tests for stable import surfaces."""

from phys_sims_quadrotor import (
    ControllerKind,
    NoiseColor,
    QuadrotorParams,
    Scenario,
    analyze,
    build_controller,
    config,
    control,
    harness,
    metrics,
    model,
    noise,
    run,
    sim,
)
from phys_sims_quadrotor.cli import main
from phys_sims_quadrotor.harness import RunLogger, run_compare, run_sweep


def test_package_roots_import() -> None:
    for package in (config, control, harness, metrics, model, noise, sim):
        assert package is not None


def test_key_symbols_exported() -> None:
    assert ControllerKind.BACKSTEPPING.value == "backstepping"
    assert [color.value for color in NoiseColor] == ["white", "pink", "brown", "blue", "purple"]
    assert QuadrotorParams is not None
    assert Scenario is not None
    assert analyze is not None
    assert build_controller is not None
    assert run is not None
    assert RunLogger is not None
    assert run_compare is not None
    assert run_sweep is not None
    assert main is not None
