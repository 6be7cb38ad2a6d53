"""Actuator forces from the Lagrange equations in platform coordinates.

The kinetic energy is differenced numerically in r and r_dot, the momentum
in time. Slow and step-sensitive; meant for a handful of samples.
"""
import numpy as np

import constants
from kinematics import inverse_geometry
from utils import NearSingular, OutOfWorkspace, StepTooLarge

from oracles.energy import kinetic_energy, mechanism_state
from oracles.static_force import potential_gradient, transport_to_actuators


def _kinetic(r, v, model):
    return kinetic_energy(mechanism_state(r, v, model), model)


def _unit(i, h):
    step = np.zeros(3)
    step[i] = h
    return step


def momentum(r, v, model, h_v=constants.RATE_STEP):
    """dT/dr_dot by centred differences in the velocity."""
    return np.array([(_kinetic(r, v + _unit(i, h_v), model) - _kinetic(r, v - _unit(i, h_v), model))
                     / (2.0 * h_v) for i in range(3)])


def kinetic_gradient(r, v, model, h_r=constants.SPACE_STEP):
    return np.array([(_kinetic(r + _unit(i, h_r), v, model) - _kinetic(r - _unit(i, h_r), v, model))
                     / (2.0 * h_r) for i in range(3)])


def lagrangian_oracle(trajectory, t, model, h_t=constants.TIME_STEP, h_r=constants.SPACE_STEP,
                      h_v=constants.RATE_STEP):
    """Slider forces f with K^T f = d/dt(dT/dr_dot) - dT/dr + dV/dr at time t.

    Raises:
        OutOfWorkspace: the platform position at t is unreachable
        StepTooLarge: a differencing stencil around it leaves the workspace
    """
    platform = trajectory.state(t)
    inverse_geometry(platform.r, model)
    try:
        later, earlier = trajectory.state(t + h_t), trajectory.state(t - h_t)
        d_momentum = (momentum(later.r, later.v, model, h_v)
                      - momentum(earlier.r, earlier.v, model, h_v)) / (2.0 * h_t)
        generalized = (d_momentum - kinetic_gradient(platform.r, platform.v, model, h_r)
                       + potential_gradient(platform.r, model, h_r))
    except (OutOfWorkspace, NearSingular) as e:
        raise StepTooLarge("differencing stencil around t = {:.6f} s: {}".format(t, e), t=t) from e
    return transport_to_actuators(platform.r, generalized, model)
