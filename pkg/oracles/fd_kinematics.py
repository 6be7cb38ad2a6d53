"""Centred-difference check of joint rates and joint accelerations along a trajectory."""
import numpy as np

import constants
from constants import LEGS
from kinematics import inverse_geometry, joint_rates, solve_state
from utils import sample_times

from oracles.report import build_report


def _positions(states):
    return np.array([[states[leg].lam, states[leg].phi21, states[leg].phi32] for leg in LEGS])


def _rates(states):
    return np.array([[states[leg].lam_dot, states[leg].omega21, states[leg].omega32] for leg in LEGS])


def _accels(states):
    return np.array([[states[leg].lam_ddot, states[leg].eps21, states[leg].eps32] for leg in LEGS])


def _rates_at(trajectory, t, model):
    platform = trajectory.state(t)
    return joint_rates(inverse_geometry(platform.r, model), platform.v, model)


def fd_kinematics_check(trajectory, model, t_end=constants.DEFAULT_T_END, samples=constants.DEFAULT_SAMPLES,
                        h=constants.TIME_STEP, rate_tolerance=constants.RATE_TOLERANCE,
                        accel_tolerance=constants.ACCEL_TOLERANCE, logger=None):
    """Differentiate joint positions and analytic rates in time and compare.

    Relative errors are normalised by the largest differenced value of the sweep.

    Returns:
        tuple[OracleReport, OracleReport]: rates report, accelerations report
    """
    rate_errors, accel_errors = [], []
    rate_scale, accel_scale = 0.0, 0.0
    for t in sample_times(t_end, samples):
        t = float(t)
        analytic = solve_state(trajectory.state(t), model)

        before = inverse_geometry(trajectory.state(t - h).r, model)
        after = inverse_geometry(trajectory.state(t + h).r, model)
        fd_rates = (_positions(after) - _positions(before)) / (2.0 * h)

        fd_accels = (_rates(_rates_at(trajectory, t + h, model))
                     - _rates(_rates_at(trajectory, t - h, model))) / (2.0 * h)

        rate_errors.append((t, float(np.max(np.abs(_rates(analytic) - fd_rates)))))
        accel_errors.append((t, float(np.max(np.abs(_accels(analytic) - fd_accels)))))
        rate_scale = max(rate_scale, float(np.max(np.abs(fd_rates))))
        accel_scale = max(accel_scale, float(np.max(np.abs(fd_accels))))
        if logger is not None:
            logger.debug("t={:.4f} rate err={:.3e} accel err={:.3e}".format(
                t, rate_errors[-1][1], accel_errors[-1][1]))

    return (build_report("fd_rates", rate_errors, rate_scale, rate_tolerance),
            build_report("fd_accels", accel_errors, accel_scale, accel_tolerance))
