"""Actuator forces of a motionless mechanism from the gradient of its potential energy."""
import numpy as np
from scipy import linalg

import constants
from kinematics import inverse_geometry, jacobians, slider_vector
from orthoglide_state import PlatformState
from utils import NearSingular, OutOfWorkspace, StepTooLarge

from oracles.energy import mechanism_state, potential_energy


def static_platform(r):
    return PlatformState(r=np.asarray(r, dtype=float))


def transport_to_actuators(r, generalized, model):
    """Map a platform-space generalized force Q onto the sliders.

    With lam_dot = K r_dot and K = J1^-1 J2, virtual work gives K^T f = Q.
    """
    lam = slider_vector(inverse_geometry(r, model))
    pair = jacobians(r, lam, model)
    try:
        k = linalg.solve(pair.j1, pair.j2)
        return linalg.solve(k.T, np.asarray(generalized, dtype=float))
    except linalg.LinAlgError as e:
        raise NearSingular("platform jacobian not invertible at r = {}".format(r)) from e


def potential_at(r, model):
    return potential_energy(mechanism_state(r, np.zeros(3), model), model)


def potential_gradient(r, model, h=constants.SPACE_STEP):
    r = np.asarray(r, dtype=float)
    gradient = np.zeros(3)
    try:
        for i in range(3):
            step = np.zeros(3)
            step[i] = h
            gradient[i] = (potential_at(r + step, model) - potential_at(r - step, model)) / (2.0 * h)
    except OutOfWorkspace as e:
        raise StepTooLarge("step {} leaves the workspace around r = {}".format(h, r)) from e
    return gradient


def static_force_oracle(r, model, h=constants.SPACE_STEP):
    """Slider forces holding the platform still at r: K^T f = dV/dr.

    Raises:
        OutOfWorkspace: r itself is unreachable
        StepTooLarge: r is reachable but r +- h is not
    """
    inverse_geometry(r, model)
    return transport_to_actuators(r, potential_gradient(r, model, h), model)
