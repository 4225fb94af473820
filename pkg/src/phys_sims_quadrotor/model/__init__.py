"""Quadrotor physical model: parameters, kinematics, allocation and dynamics."""

from phys_sims_quadrotor.model.dynamics import state_derivative, state_derivative_array
from phys_sims_quadrotor.model.kinematics import (
    body_to_euler_rates,
    elementary_rotations,
    euler_rate_matrix,
    inertia_from_geometry,
    rotation_matrix,
)
from phys_sims_quadrotor.model.mixer import (
    Allocation,
    hover_speed,
    mix,
    perturb_speeds,
    relative_rotor_speed,
    rotor_forces,
    rotor_torques,
    unmix,
)
from phys_sims_quadrotor.model.params import ModelConstants, QuadrotorParams
from phys_sims_quadrotor.model.state import (
    STATE_FIELDS,
    BodyRates,
    ControlVector,
    InertiaGeometry,
    RigidBodyState,
    RotorSpeeds,
)

__all__ = [
    "STATE_FIELDS",
    "Allocation",
    "BodyRates",
    "ControlVector",
    "InertiaGeometry",
    "ModelConstants",
    "QuadrotorParams",
    "RigidBodyState",
    "RotorSpeeds",
    "body_to_euler_rates",
    "elementary_rotations",
    "euler_rate_matrix",
    "hover_speed",
    "inertia_from_geometry",
    "mix",
    "perturb_speeds",
    "relative_rotor_speed",
    "rotation_matrix",
    "rotor_forces",
    "rotor_torques",
    "state_derivative",
    "state_derivative_array",
    "unmix",
]
