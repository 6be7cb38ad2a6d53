"""End-to-end sweeps along a platform trajectory and their CSV form."""
import os

import numpy as np
import pandas as pd

import constants
from constants import LEGS
from dynamics import inverse_dynamics
from orthoglide_state import SimulationRow
from utils import OrthoglideError, sample_times


def simulate(model, trajectory, t_end=None, samples=constants.DEFAULT_SAMPLES,
             logger=None):
    """Run the inverse kinematics and dynamics pipeline at uniform samples of [0, t_end].

    t_end defaults to the trajectory duration.

    Returns:
        list[SimulationRow]: one row per sample, in time order

    Raises:
        OutOfWorkspace, NearSingular: with the offending time in the message and in .t
    """
    rows = []
    if t_end is None:
        t_end = trajectory.duration
    for t in sample_times(t_end, samples):
        t = float(t)
        platform = trajectory.state(t)
        try:
            result = inverse_dynamics(platform, model)
        except OrthoglideError as e:
            raise type(e)("{} (t = {:.6f} s)".format(e, t), t=t) from e
        joints = result.joints
        row = SimulationRow(
            t=t,
            r=platform.r,
            lam=np.array([joints[leg].lam for leg in LEGS]),
            lam_dot=result.rates,
            lam_ddot=np.array([joints[leg].lam_ddot for leg in LEGS]),
            phi=np.array([angle for leg in LEGS for angle in (joints[leg].phi21, joints[leg].phi32)]),
            force=result.forces,
            power=result.powers,
        )
        rows.append(row)
        if logger is not None:
            logger.debug("t={:.4f} lam={} f={} p={}".format(t, row.lam, row.force, row.power))
    return rows


def rows_to_frame(rows):
    return pd.DataFrame([row.values() for row in rows], columns=constants.CSV_COLUMNS, dtype=float)


def emit_csv(rows, path):
    """Write rows as UTF-8 CSV with LF line endings and %.9e values; returns the path."""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    rows_to_frame(rows).to_csv(path, index=False, float_format=constants.CSV_FLOAT_FORMAT,
                               lineterminator="\n", encoding="utf-8")
    return path
