"""Type-focused contract tests for the shared records and controller interface."""

from __future__ import annotations

import json
import math

import pytest

from phys_sims_quadrotor.control import (
    BacksteppingController,
    Controller,
    ControllerKind,
    LyapunovController,
    Measurement,
    PidController,
    ReferenceSignal,
    build_controller,
    default_gains,
)
from phys_sims_quadrotor.harness import RunRecord
from phys_sims_quadrotor.harness.records import channel_to_dict
from phys_sims_quadrotor.metrics import DegenerateChannel, ResponseMetrics
from phys_sims_quadrotor.model import ControlVector, QuadrotorParams, RigidBodyState
from phys_sims_quadrotor.shared.errors import (
    BandError,
    ConfigError,
    DomainError,
    QuadSimError,
    RunHaltedError,
    TiltError,
)

EXPECTED_TYPES = {
    ControllerKind.PID: PidController,
    ControllerKind.LYAPUNOV: LyapunovController,
    ControllerKind.BACKSTEPPING: BacksteppingController,
}


@pytest.mark.parametrize("kind", list(ControllerKind))
def test_registry_builds_controllers_with_the_common_interface(kind: ControllerKind) -> None:
    controller: Controller = build_controller(kind, default_gains(kind), QuadrotorParams())
    assert isinstance(controller, EXPECTED_TYPES[kind])
    assert controller.name == kind.value

    controller.reset()
    measurement = Measurement.from_state(RigidBodyState())
    output = controller.compute(measurement, ReferenceSignal(z_d=1.0), 0.0, 0.01)
    assert isinstance(output, ControlVector)
    assert all(math.isfinite(value) for value in output.as_array())


def test_run_record_serializes_to_plain_json() -> None:
    record = RunRecord(
        controller="lyapunov",
        noise="blue",
        seed=3,
        band_pct=5.0,
        metrics={
            "roll": ResponseMetrics(0.4, 1.25, None, 5.0),
            "yaw": DegenerateChannel(channel="yaw", value=0.0),
        },
        rows=2001,
        trace_path="traces/blue/lyapunov-seed3.csv",
    )
    payload = json.loads(json.dumps(record.to_dict(), sort_keys=True))

    assert payload["status"] == "ok"
    assert payload["metrics"]["roll"] == {
        "rise_time": 0.4,
        "overshoot_pct": 1.25,
        "settling_time": None,
        "band_pct": 5.0,
    }
    assert payload["metrics"]["yaw"] == {"degenerate": True, "value": 0.0}


def test_channel_to_dict_drops_non_finite_values() -> None:
    unbounded = ResponseMetrics(None, math.inf, None, 2.0)
    assert channel_to_dict(unbounded)["overshoot_pct"] is None


def test_error_hierarchy() -> None:
    for error_type in (BandError, ConfigError, DomainError, RunHaltedError, TiltError):
        assert issubclass(error_type, QuadSimError)
    assert issubclass(TiltError, ValueError)
    assert issubclass(RunHaltedError, RuntimeError)
    error = ConfigError("exp.cfg", 4, "sim.dt", "must be > 0")
    assert str(error) == "exp.cfg:4: sim.dt: must be > 0"
    assert str(ConfigError("<command line>", None, "x", "bad")) == "<command line>: x: bad"
