"""Dense 3-vector / 3x3 matrix helpers for the leg frame chains.

Vectors are numpy arrays of shape (3,), matrices of shape (3, 3). All angles in
radians, all lengths in metres.
"""
from functools import reduce

import numpy as np
from scipy import linalg

from constants import SINGULAR_TOLERANCE
from utils import SingularMatrix

U1 = np.array([1.0, 0.0, 0.0])
U2 = np.array([0.0, 1.0, 0.0])
U3 = np.array([0.0, 0.0, 1.0])
IDENTITY = np.eye(3)
ZERO = np.zeros(3)

for _unit in (U1, U2, U3, IDENTITY, ZERO):
    _unit.setflags(write=False)


def skew(u):
    """Skew symmetric matrix S with S @ w == cross(u, w)."""
    return np.array([[0.0, -u[2], u[1]],
                     [u[2], 0.0, -u[0]],
                     [-u[1], u[0], 0.0]], dtype=float)


def rot_z(phi):
    """Relative rotation about a joint z axis.

    Coordinate-transform layout [[c, s, 0], [-s, c, 0], [0, 0, 1]], i.e. the
    transpose of the active rotation by phi.
    """
    c, s = np.cos(phi), np.sin(phi)
    return np.array([[c, s, 0.0],
                     [-s, c, 0.0],
                     [0.0, 0.0, 1.0]])


def mat_mul(*matrices):
    return reduce(np.matmul, matrices)


def transpose(m):
    return np.transpose(m)


def det3(m):
    return float(np.linalg.det(m))


def is_orthogonal(m, tolerance=1e-12):
    return np.allclose(m.T @ m, IDENTITY, rtol=0.0, atol=tolerance)


def solve3(a, b, tolerance=SINGULAR_TOLERANCE):
    """Solve a @ x = b for a 3x3 system.

    Raises SingularMatrix when |det a| < tolerance * (max row norm)**3.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    scale = float(np.max(np.linalg.norm(a, axis=1)))
    det = det3(a)
    if scale == 0.0 or abs(det) < tolerance * scale ** 3:
        raise SingularMatrix("singular 3x3 system, |det| = {:.3e}".format(abs(det)))
    return linalg.solve(a, b)
