from dataclasses import dataclass, field

import numpy as np

from constants import SINGULAR_TOLERANCE


@dataclass(eq=False)
class PlatformState:
    """Position, velocity and acceleration of the platform centre G in the fixed frame."""
    r: np.ndarray
    v: np.ndarray = field(default_factory=lambda: np.zeros(3))
    a: np.ndarray = field(default_factory=lambda: np.zeros(3))


@dataclass(frozen=True)
class LegJointState:
    """Joint coordinates of one leg and their first and second time derivatives.

    phi54, omega54 and eps54 always mirror phi21, omega21 and eps21.
    """
    lam: float
    phi21: float
    phi32: float
    phi54: float
    lam_dot: float = 0.0
    omega21: float = 0.0
    omega32: float = 0.0
    omega54: float = 0.0
    lam_ddot: float = 0.0
    eps21: float = 0.0
    eps32: float = 0.0
    eps54: float = 0.0


@dataclass(frozen=True, eq=False)
class LinkKinematics:
    """Kinematic state of one body T_k.

    a_k0 maps fixed-frame coordinates into the body frame; omega, eps, v and gamma
    are expressed in the body frame, v and gamma at the joint origin A_k; p is
    the fixed-frame position of A_k.
    """
    a_k0: np.ndarray
    p: np.ndarray
    omega: np.ndarray
    eps: np.ndarray
    v: np.ndarray
    gamma: np.ndarray

    def point_position(self, r_local):
        return self.p + self.a_k0.T @ r_local

    def point_velocity(self, r_local):
        """Velocity of a body-fixed point, body frame."""
        return self.v + np.cross(self.omega, r_local)

    def point_velocity_fixed(self, r_local):
        return self.a_k0.T @ self.point_velocity(r_local)


@dataclass(frozen=True, eq=False)
class JacobianPair:
    """J1 @ lam_dot == J2 @ r_dot, with J1 = diag(alphas)."""
    j1: np.ndarray
    j2: np.ndarray
    alphas: np.ndarray

    @property
    def det_j1(self):
        return float(np.linalg.det(self.j1))

    @property
    def det_j2(self):
        return float(np.linalg.det(self.j2))

    def singularity(self, tolerance=SINGULAR_TOLERANCE):
        """'none', 'inverse' (J1 degenerate), 'forward' (J2 degenerate) or 'combined'."""
        inverse = _degenerate(self.j1, self.det_j1, tolerance)
        forward = _degenerate(self.j2, self.det_j2, tolerance)
        if inverse and forward:
            return "combined"
        if inverse:
            return "inverse"
        if forward:
            return "forward"
        return "none"


def _degenerate(matrix, det, tolerance):
    scale = float(np.max(np.linalg.norm(matrix, axis=1)))
    return scale == 0.0 or abs(det) < tolerance * scale ** 3


@dataclass(eq=False)
class SimulationRow:
    """One sample of a sweep; legs ordered A, B, C."""
    t: float
    r: np.ndarray
    lam: np.ndarray
    lam_dot: np.ndarray
    lam_ddot: np.ndarray
    phi: np.ndarray  # phi21A, phi32A, phi21B, phi32B, phi21C, phi32C
    force: np.ndarray
    power: np.ndarray

    def values(self):
        return [self.t, *self.r, *self.lam, *self.lam_dot, *self.lam_ddot,
                *self.phi, *self.force, *self.power]
