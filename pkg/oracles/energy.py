"""Kinetic and potential energy of the whole mechanism, computed straight from body velocities.

Nothing here uses the wrench recursion or the virtual velocity sets, so the
energy balance is an independent check of the dynamics.
"""
import numpy as np

import constants
from constants import LEGS
from dynamics import inverse_dynamics
from kinematics import inverse_geometry, joint_rates, link_states
from utils import sample_times

from oracles.report import build_report

# The platform (body 5) is counted once, through leg A
MECHANISM_BODIES = {"A": (1, 2, 3, 4, 5, 6), "B": (1, 2, 3, 4, 6), "C": (1, 2, 3, 4, 6)}


def mechanism_state(r, v, model):
    """Link states of every leg at platform position r and velocity v, accelerations zero.

    Returns:
        dict[str, dict[int, LinkKinematics]]
    """
    states = joint_rates(inverse_geometry(r, model), v, model)
    return {leg: link_states(leg, states[leg], model) for leg in LEGS}


def _bodies(links, model):
    for leg in LEGS:
        for k in MECHANISM_BODIES[leg]:
            yield links[leg][k], model.body(k)


def kinetic_energy(links, model):
    total = 0.0
    for link, props in _bodies(links, model):
        v_c = link.point_velocity(props.r_c)
        omega = link.omega
        total += 0.5 * props.mass * float(v_c @ v_c)
        total += 0.5 * float(omega @ props.central_inertia() @ omega)
    return total


def potential_energy(links, model):
    """V = -sum m g (g_dir . p_C); zero at the fixed-frame origin."""
    g, g_dir = model.masses.g, model.masses.g_dir
    return sum(-props.mass * g * float(g_dir @ link.point_position(props.r_c))
               for link, props in _bodies(links, model))


def gravity_power(links, model):
    gravity = model.gravity
    return sum(props.mass * float(gravity @ link.point_velocity_fixed(props.r_c))
               for link, props in _bodies(links, model))


def energy_balance(trajectory, model, t_end=constants.DEFAULT_T_END, samples=constants.DEFAULT_SAMPLES,
                   h=constants.TIME_STEP, tolerance=constants.ENERGY_TOLERANCE, logger=None):
    """Compare sum(f * lam_dot) + gravity power with the centred derivative of kinetic energy.

    The relative error is normalised by the largest |dT/dt| of the sweep.
    """
    def energy_at(t):
        platform = trajectory.state(t)
        return kinetic_energy(mechanism_state(platform.r, platform.v, model), model)

    errors, scale = [], 0.0
    for t in sample_times(t_end, samples):
        t = float(t)
        platform = trajectory.state(t)
        result = inverse_dynamics(platform, model)
        links = mechanism_state(platform.r, platform.v, model)
        d_kinetic = (energy_at(t + h) - energy_at(t - h)) / (2.0 * h)
        supplied = float(np.sum(result.powers)) + gravity_power(links, model)
        errors.append((t, abs(supplied - d_kinetic)))
        scale = max(scale, abs(d_kinetic))
        if logger is not None:
            logger.debug("t={:.4f} dT/dt={:.9e} supplied={:.9e}".format(t, d_kinetic, supplied))
    return build_report("energy_balance", errors, scale, tolerance)
