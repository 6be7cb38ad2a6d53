"""Inverse geometry, connectivity conditions and recursive link kinematics of the three legs.

Bodies of a leg: 1 slider, 2 transmission rod A3A6, 3 and 6 the parallelogram
bars, 4 the coupler, 5 the platform. Body 6 hangs from body 2.
"""
import math
from dataclasses import dataclass, replace

import numpy as np
from scipy import linalg

from constants import COS_SINGULAR_TOLERANCE, CONDITION_LIMIT, LEGS, VIRTUAL_SETS
from core_math import U3, ZERO, rot_z, skew, solve3
from orthoglide_state import JacobianPair, LegJointState, LinkKinematics
from robot_model import A1, LEG_BASES
from utils import NearSingular, OutOfWorkspace, SingularMatrix

BODIES = (1, 2, 3, 4, 5, 6)
PARENT = {2: 1, 3: 2, 4: 3, 5: 4, 6: 2}

# Fixed-frame coordinates -> leg-local coordinates in which every leg reads like leg A
LEG_LOCAL = {leg: A1.T @ base for leg, base in LEG_BASES.items()}

U3_SKEW = skew(U3)


def inverse_geometry(r, model):
    """Closed-form joint positions of the three legs for platform position r.

    Principal arcsine branch, |phi| <= pi/2.

    Returns:
        dict[str, LegJointState]: positions only, rates and accelerations zero
    """
    l3 = model.geometry.l3
    r = np.asarray(r, dtype=float)
    states = {}
    for leg in LEGS:
        p = LEG_LOCAL[leg] @ r
        s32 = -p[2] / l3
        if abs(s32) > 1.0:
            raise OutOfWorkspace("leg {}: sin(phi32) = {:.6f} outside [-1, 1]".format(leg, s32))
        c32 = math.sqrt(max(0.0, 1.0 - s32 * s32))
        # The bar lies in the slider plane at |s32| = 1
        if c32 < COS_SINGULAR_TOLERANCE:
            raise NearSingular("leg {}: cos(phi32) = {:.3e}".format(leg, c32))
        s21 = p[1] / (l3 * c32)
        if not abs(s21) < 1.0:
            raise OutOfWorkspace("leg {}: sin(phi21) = {:.6f} outside (-1, 1)".format(leg, s21))
        phi32 = math.asin(s32)
        phi21 = math.asin(s21)
        lam = p[0] + l3 * (1.0 - math.cos(phi21) * math.cos(phi32))
        states[leg] = LegJointState(lam=lam, phi21=phi21, phi32=phi32, phi54=phi21)
    return states


def constraint_residuals(r, lam, model):
    """Sphere conditions of the three loops, LHS - l3^2 (m^2)."""
    x, y, z = r
    la, lb, lc = lam
    l3 = model.geometry.l3
    return np.array([
        z * z + y * y + (x + l3 - la) ** 2 - l3 * l3,
        x * x + z * z + (y + l3 - lb) ** 2 - l3 * l3,
        y * y + x * x + (z + l3 - lc) ** 2 - l3 * l3,
    ])


def jacobians(r, lam, model):
    x, y, z = r
    l3 = model.geometry.l3
    alphas = np.array([x + l3 - lam[0], y + l3 - lam[1], z + l3 - lam[2]])
    j2 = np.array([[alphas[0], y, z],
                   [x, alphas[1], z],
                   [x, y, alphas[2]]])
    return JacobianPair(j1=np.diag(alphas), j2=j2, alphas=alphas)


def slider_vector(states):
    return np.array([states[leg].lam for leg in LEGS])


def relative_rotations(frames, joints):
    """a_{k,parent} for every body of a leg (body 1: a_{10})."""
    r21 = rot_z(joints.phi21)
    r32 = rot_z(joints.phi32)
    return {
        1: frames.base,
        2: r21 @ frames.a2,
        3: r32 @ frames.a3,
        4: r32 @ frames.a4,
        5: rot_z(joints.phi54) @ frames.a2,
        6: r32 @ frames.a3,
    }


def absolute_rotations(relative):
    absolute = {1: relative[1]}
    for k in BODIES[1:]:
        absolute[k] = relative[k] @ absolute[PARENT[k]]
    return absolute


def _relative_rates(joints):
    return {2: joints.omega21, 3: joints.omega32, 4: joints.omega32, 5: joints.omega54, 6: joints.omega32}


def _relative_accels(joints):
    return {2: joints.eps21, 3: joints.eps32, 4: joints.eps32, 5: joints.eps54, 6: joints.eps32}


def connectivity_matrix(leg_id, joints, model):
    """Columns: platform velocity per unit lam_dot, omega21, omega32 (fixed frame)."""
    frames = model.leg_frames(leg_id)
    rel = relative_rotations(frames, joints)
    a10 = rel[1]
    a20 = rel[2] @ a10
    a32 = rel[3]
    a30 = a32 @ a20
    return np.column_stack([
        a10.T @ U3,
        a20.T @ U3_SKEW @ a32.T @ frames.r43,
        a30.T @ U3_SKEW @ frames.r43,
    ])


def connectivity_bias(leg_id, joints, model):
    """Quadratic-rate part of the platform acceleration (time derivative of the columns times the rates)."""
    frames = model.leg_frames(leg_id)
    rel = relative_rotations(frames, joints)
    a20 = rel[2] @ rel[1]
    a32 = rel[3]
    a30 = a32 @ a20
    w21, w32 = joints.omega21, joints.omega32
    r43 = frames.r43
    return (w21 * w21 * (a20.T @ U3_SKEW @ U3_SKEW @ a32.T @ r43)
            + 2.0 * w21 * w32 * (a20.T @ U3_SKEW @ a32.T @ U3_SKEW @ r43)
            + w32 * w32 * (a30.T @ U3_SKEW @ U3_SKEW @ r43))


def rotation_constraint_residual(leg_id, joints, model):
    """Fixed-frame platform angular velocity implied by omega21 and omega54; zero when consistent."""
    frames = model.leg_frames(leg_id)
    absolute = absolute_rotations(relative_rotations(frames, joints))
    return joints.omega21 * (absolute[2].T @ U3) + joints.omega54 * (absolute[5].T @ U3)


def _solve_leg(leg_id, matrix, rhs):
    try:
        return solve3(matrix, rhs)
    except SingularMatrix as e:
        raise NearSingular("leg {}: {}".format(leg_id, e)) from e


def joint_rates(states, v, model):
    """Slider rates and relative angular rates of every leg for platform velocity v."""
    v = np.asarray(v, dtype=float)
    out = {}
    for leg in LEGS:
        joints = states[leg]
        lam_dot, omega21, omega32 = _solve_leg(leg, connectivity_matrix(leg, joints, model), v)
        out[leg] = replace(joints, lam_dot=lam_dot, omega21=omega21, omega32=omega32, omega54=omega21)
    return out


def joint_accels(states, a, model):
    """Slider and relative angular accelerations; states must already carry the rates."""
    a = np.asarray(a, dtype=float)
    out = {}
    for leg in LEGS:
        joints = states[leg]
        rhs = a - connectivity_bias(leg, joints, model)
        lam_ddot, eps21, eps32 = _solve_leg(leg, connectivity_matrix(leg, joints, model), rhs)
        out[leg] = replace(joints, lam_ddot=lam_ddot, eps21=eps21, eps32=eps32, eps54=eps21)
    return out


def link_states(leg_id, joints, model):
    """Recursive positions, velocities and accelerations of bodies 1..6 of a leg.

    Returns:
        dict[int, LinkKinematics]
    """
    frames = model.leg_frames(leg_id)
    rel = relative_rotations(frames, joints)
    rates = _relative_rates(joints)
    accels = _relative_accels(joints)

    # The slider translates along its own z axis
    links = {1: LinkKinematics(a_k0=rel[1], p=frames.r10(joints.lam), omega=ZERO.copy(), eps=ZERO.copy(),
                               v=joints.lam_dot * U3, gamma=joints.lam_ddot * U3)}
    for k in BODIES[1:]:
        parent = links[PARENT[k]]
        a = rel[k]
        r = frames.offset(k)
        carried = a @ parent.omega
        omega = carried + rates[k] * U3
        eps = a @ parent.eps + accels[k] * U3 + rates[k] * np.cross(carried, U3)
        v = a @ (parent.v + np.cross(parent.omega, r))
        gamma = a @ (parent.gamma + np.cross(parent.omega, np.cross(parent.omega, r)) + np.cross(parent.eps, r))
        links[k] = LinkKinematics(a_k0=a @ parent.a_k0, p=parent.point_position(r),
                                  omega=omega, eps=eps, v=v, gamma=gamma)
    return links


@dataclass(frozen=True, eq=False)
class VirtualMotion:
    """Motion induced by a unit rate of one slider, the other two held still."""
    platform: np.ndarray
    legs: dict


def virtual_rates(states, model):
    """Virtual velocity sets a, b, c.

    Unknowns: platform velocity and (omega21, omega32) of each leg, nine
    equations from the three connectivity systems.

    Returns:
        dict[str, VirtualMotion]
    """
    matrix = np.zeros((9, 9))
    slider_columns = {}
    for i, leg in enumerate(LEGS):
        c = connectivity_matrix(leg, states[leg], model)
        rows = slice(3 * i, 3 * i + 3)
        matrix[rows, 0:3] = -np.eye(3)
        matrix[rows, 3 + 2 * i] = c[:, 1]
        matrix[rows, 4 + 2 * i] = c[:, 2]
        slider_columns[leg] = c[:, 0]

    condition = np.linalg.cond(matrix)
    if not condition < CONDITION_LIMIT:
        raise NearSingular("virtual velocity system ill-conditioned, cond = {:.3e}".format(condition))

    rhs = np.zeros((9, 3))
    for j in range(3):
        rhs[3 * j:3 * j + 3, j] = -slider_columns[LEGS[j]]
    solution = linalg.solve(matrix, rhs)

    motions = {}
    for j, name in enumerate(VIRTUAL_SETS):
        column = solution[:, j]
        legs = {}
        for i, leg in enumerate(LEGS):
            omega21, omega32 = column[3 + 2 * i], column[4 + 2 * i]
            legs[leg] = replace(states[leg], lam_dot=1.0 if i == j else 0.0, omega21=omega21,
                                omega32=omega32, omega54=omega21, lam_ddot=0.0, eps21=0.0,
                                eps32=0.0, eps54=0.0)
        motions[name] = VirtualMotion(platform=column[0:3].copy(), legs=legs)
    return motions


def solve_state(platform, model):
    """Joint positions, rates and accelerations of all legs for one platform state."""
    states = inverse_geometry(platform.r, model)
    states = joint_rates(states, platform.v, model)
    return joint_accels(states, platform.a, model)
