"""Tests for config parsing, validation, overrides and resolved-config echo."""

from __future__ import annotations

import math
from pathlib import Path

import pytest

from phys_sims_quadrotor.config import (
    ConfigError,
    ExperimentConfig,
    apply_overrides,
    config_from_text,
    load_config,
    parse_seed_list,
    resolved_config_text,
    write_resolved_config,
)
from phys_sims_quadrotor.control import BacksteppingGains, ControllerKind, PidGains
from phys_sims_quadrotor.noise import NoiseColor
from phys_sims_quadrotor.sim import NoiseInjection


def test_defaults_reproduce_reference_setup() -> None:
    config = load_config()
    assert config.sim.dt == 0.01
    assert config.sim.duration == 60.0
    assert config.noise.injection == "rotor"
    assert config.run.seeds == tuple(range(1, 21))
    assert config.noise.colored_std == pytest.approx(math.sqrt(0.1))
    assert config.params().mass == 0.65
    assert config.gains.backstepping.a7 == 1.4


def test_comments_and_blank_lines_are_ignored() -> None:
    text = "# header\n\nnoise.color = pink  # trailing\nsim.duration = 5\n"
    config = config_from_text(text)
    assert config.noise.color == "pink"
    assert config.sim.duration == 5.0


@pytest.mark.parametrize(
    ("text", "line", "key", "fragment"),
    [
        ("sim.dt = 0.01\nnoise.color pink\n", 2, "noise.color pink", "key = value"),
        ("sim.dt =\n", 1, "sim.dt", "missing value"),
        ("1sim.dt = 0.01\n", 1, "1sim.dt", "malformed"),
        ("sim.dt = 0.01\n\nsim.dt = 0.02\n", 3, "sim.dt", "line 1"),
        ("noise = 1\nnoise.color = pink\n", 2, "noise.color", "not a section"),
    ],
)
def test_parse_errors_point_at_line(text: str, line: int, key: str, fragment: str) -> None:
    with pytest.raises(ConfigError) as excinfo:
        config_from_text(text, path="exp.cfg")
    error = excinfo.value
    assert error.line == line
    assert error.key == key
    assert fragment in error.message
    assert str(error).startswith(f"exp.cfg:{line}: ")


def test_unknown_key_is_rejected_with_its_line() -> None:
    with pytest.raises(ConfigError) as excinfo:
        config_from_text("sim.dt = 0.01\nquadrotor.bogus = 1\n", path="exp.cfg")
    assert excinfo.value.key == "quadrotor.bogus"
    assert excinfo.value.line == 2
    assert "unknown" in excinfo.value.message


@pytest.mark.parametrize(
    ("text", "key"),
    [
        ("quadrotor.mass = -1\n", "quadrotor.mass"),
        ("sim.dt = abc\n", "sim.dt"),
        ("gains.pid.roll.kp = -0.1\n", "gains.pid.roll.kp"),
        ("reference.theta_d = 1.6\n", "reference.theta_d"),
        ("run.controller = lqr\n", "run.controller"),
        ("noise.color = grey\n", "noise.color"),
        ("noise.injection = actuator\n", "noise.injection"),
    ],
)
def test_invalid_values_name_the_key(text: str, key: str) -> None:
    with pytest.raises(ConfigError) as excinfo:
        config_from_text(text)
    assert excinfo.value.key == key
    assert excinfo.value.line == 1


@pytest.mark.parametrize(
    "text",
    [
        "sim.dt = 0.03\n",
        "sim.dt = 0.2\n",
        "sim.duration = 1.005\n",
        "spectrum.f_hi = 5.0\n",
        "spectrum.f_lo = 2.0\nspectrum.f_hi = 1.0\n",
        "quadrotor.inertia_y = 0.008\n",
        "run.seeds = 5..3\n",
    ],
)
def test_cross_field_rules(text: str) -> None:
    with pytest.raises(ConfigError):
        config_from_text(text)


def test_seed_lists() -> None:
    assert parse_seed_list("1..20") == tuple(range(1, 21))
    assert parse_seed_list("3,5,8") == (3, 5, 8)
    assert parse_seed_list(" 7 ") == (7,)
    assert config_from_text("run.seeds = 3,5,8\n").run.seeds == (3, 5, 8)


def test_resolved_config_reloads_to_same_config(tmp_path: Path) -> None:
    config = config_from_text("noise.color = blue\nrun.seeds = 2..4\ngains.lyapunov.k1 = 0.2\n")
    text = resolved_config_text(config)
    assert "quadrotor.thrust_coeff = 3.13e-05" in text
    assert config_from_text(text) == config

    path = write_resolved_config(config, tmp_path / "out")
    assert path.read_text(encoding="utf-8") == text
    assert load_config(path) == config


def test_missing_file_is_a_config_error(tmp_path: Path) -> None:
    with pytest.raises(ConfigError) as excinfo:
        load_config(tmp_path / "absent.cfg")
    assert excinfo.value.key == "<file>"


def test_overrides_revalidate_and_rederive_colored_std() -> None:
    config = ExperimentConfig()
    updated = apply_overrides(config, {"noise.power": "0.04", "sim.duration": "2"})
    assert updated.sim.duration == 2.0
    assert updated.noise.colored_std == pytest.approx(math.sqrt(0.4))

    silent = apply_overrides(config, {"noise.power": "0"})
    assert silent.noise.colored_std == 0.0

    pinned = config_from_text("noise.colored_std = 0.5\n")
    assert apply_overrides(pinned, {"noise.power": "0.04"}).noise.colored_std == 0.5
    assert apply_overrides(config, {}) is config


@pytest.mark.parametrize("key", ["noise.bogus", "bogus.key", "noise.color.extra"])
def test_unknown_override_is_rejected(key: str) -> None:
    with pytest.raises(ConfigError) as excinfo:
        apply_overrides(ExperimentConfig(), {key: "1"})
    assert excinfo.value.key == key


def test_invalid_override_value_is_rejected() -> None:
    with pytest.raises(ConfigError) as excinfo:
        apply_overrides(ExperimentConfig(), {"quadrotor.mass": "-0.1"})
    assert excinfo.value.key == "quadrotor.mass"
    assert excinfo.value.line is None


def test_band_selection_by_noise_color() -> None:
    config = ExperimentConfig()
    assert config.band_for(None) == 2.0
    assert config.band_for(NoiseColor.PINK) == 2.0
    assert config.band_for(NoiseColor.BLUE) == 5.0
    assert config.band_for(NoiseColor.PURPLE) == 5.0


def test_scenario_construction() -> None:
    config = config_from_text("noise.power = 0.04\nsim.duration = 4\n")
    white = config.scenario(ControllerKind.PID, NoiseColor.WHITE, seed=3)
    assert isinstance(white.gains, PidGains)
    assert white.noise is not None
    assert white.noise.power == 0.04
    assert white.seed == 3
    assert white.n_steps == 400

    pink = config.scenario(ControllerKind.BACKSTEPPING, NoiseColor.PINK, seed=3)
    assert isinstance(pink.gains, BacksteppingGains)
    assert pink.noise is not None
    assert pink.noise.power == pytest.approx(math.sqrt(0.4))
    assert pink.reference.z_d == 1.0

    assert config.scenario(ControllerKind.LYAPUNOV, None, seed=0).noise is None
    assert config.noise.resolve_color() is NoiseColor.WHITE
    assert config.noise.resolve_color("none") is None

    assert white.injection is NoiseInjection.ROTOR
    sensed = config_from_text("noise.injection = sensor\n")
    blue = sensed.scenario(ControllerKind.PID, NoiseColor.BLUE, seed=1)
    assert blue.injection is NoiseInjection.SENSOR


def test_shipped_default_config_matches_builtin_defaults() -> None:
    path = Path(__file__).resolve().parents[1] / "configs" / "default.cfg"
    assert load_config(path) == ExperimentConfig()
