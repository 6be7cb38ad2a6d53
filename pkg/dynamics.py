"""Virtual-work inverse dynamics.

The closed mechanism is opened at the platform joints of legs B and C and at
the far joint of every parallelogram, leaving three trees:

    leg A: 1 - 2 - 3 - 4 - 5, with bar 6 on body 2
    legs B, C: 1 - 2 - 3 - 4, with bar 6 on body 2

Wrenches are expressed in the body frame, moments about the body's first joint A_k.
"""
from dataclasses import dataclass

import numpy as np

from constants import LEGS, VIRTUAL_SETS
from kinematics import PARENT, link_states, relative_rotations, solve_state, virtual_rates


@dataclass(frozen=True, eq=False)
class Wrench:
    f: np.ndarray
    m: np.ndarray

    @classmethod
    def zero(cls):
        return cls(np.zeros(3), np.zeros(3))

    def __add__(self, other):
        return Wrench(self.f + other.f, self.m + other.m)

    def __neg__(self):
        return Wrench(-self.f, -self.m)

    def __sub__(self, other):
        return self + (-other)

    def to_parent(self, a, r):
        """Re-express a child wrench in its parent frame about the parent origin.

        Args:
            a (np.ndarray): a_{child,parent}
            r (np.ndarray): child origin relative to the parent origin, parent frame
        """
        f = a.T @ self.f
        return Wrench(f, a.T @ self.m + np.cross(r, f))


@dataclass(frozen=True, eq=False)
class BodyLoad:
    inertia: Wrench
    applied: Wrench
    r_c: np.ndarray

    @property
    def required(self):
        """Wrench the rest of the mechanism must supply: minus inertia minus applied."""
        return -self.inertia - self.applied


@dataclass(frozen=True, eq=False)
class ActuatorOutput:
    leg: str
    lam: float
    lam_dot: float
    lam_ddot: float
    force: float
    power: float


def chain_children(leg_id):
    children = {1: (2,), 2: (3, 6), 3: (4,), 4: (), 5: (), 6: ()}
    if leg_id == "A":
        children[4] = (5,)
    return children


def chain_bodies(leg_id):
    return (1, 2, 3, 4, 5, 6) if leg_id == "A" else (1, 2, 3, 4, 6)


def inertia_wrench(body, props):
    """Inertia force and moment of a body about its link origin.

    Args:
        body (LinkKinematics): kinematic state of the body
        props (BodyProperties): mass, mass-centre offset, inertia about the link origin
    """
    m, r_c, inertia = props.mass, props.r_c, props.inertia
    omega, eps = body.omega, body.eps
    f = -m * (body.gamma + np.cross(omega, np.cross(omega, r_c)) + np.cross(eps, r_c))
    moment = -(m * np.cross(r_c, body.gamma) + inertia @ eps + np.cross(omega, inertia @ omega))
    return Wrench(f, moment)


def gravity_wrench(a_k0, props, model):
    weight = model.masses.g * props.mass * (a_k0 @ model.masses.g_dir)
    return Wrench(weight, np.cross(props.r_c, weight))


def body_loads(leg_id, links, model):
    loads = {}
    for k in chain_bodies(leg_id):
        props = model.body(k)
        loads[k] = BodyLoad(inertia=inertia_wrench(links[k], props),
                            applied=gravity_wrench(links[k].a_k0, props, model),
                            r_c=props.r_c)
    return loads


def accumulate_wrenches(children, loads, rotations, offsets):
    """Leaf-to-root accumulation over a tree.

    Args:
        children (Mapping[int, tuple]): child bodies of each body
        loads (Mapping[int, Wrench]): own wrench of each body
        rotations (Mapping[int, np.ndarray]): a_{k,parent} of each non-root body
        offsets (Mapping[int, np.ndarray]): origin of k relative to its parent, parent frame

    Returns:
        dict[int, Wrench]: accumulated wrench of the subtree rooted at each body
    """
    accumulated = {}
    child_set = {c for k in loads for c in children.get(k, ())}

    def visit(k):
        total = loads[k]
        for c in children.get(k, ()):
            total = total + visit(c).to_parent(rotations[c], offsets[c])
        accumulated[k] = total
        return total

    for root in sorted(k for k in loads if k not in child_set):
        visit(root)
    return accumulated


def leg_wrenches(leg_id, joints, links, model):
    frames = model.leg_frames(leg_id)
    loads = body_loads(leg_id, links, model)
    rotations = relative_rotations(frames, joints)
    offsets = {k: frames.offset(k) for k in PARENT}
    own = {k: load.required for k, load in loads.items()}
    return accumulate_wrenches(chain_children(leg_id), own, rotations, offsets)


def actuator_forces(wrenches, virtual):
    """Slider forces (N) from accumulated wrenches and the three virtual velocity sets.

    Each joint contributes its virtual rate times the joint-axis component of
    the accumulated wrench of its child body.
    """
    forces = np.zeros(3)
    for j, name in enumerate(VIRTUAL_SETS):
        total = 0.0
        for leg in LEGS:
            rates = virtual[name].legs[leg]
            w = wrenches[leg]
            total += rates.lam_dot * w[1].f[2]
            total += rates.omega21 * w[2].m[2]
            total += rates.omega32 * (w[3].m[2] + w[4].m[2] + w[6].m[2])
            if 5 in w:
                total += rates.omega54 * w[5].m[2]
        forces[j] = total
    return forces


def actuator_powers(forces, rates):
    return np.asarray(forces, dtype=float) * np.asarray(rates, dtype=float)


@dataclass(frozen=True, eq=False)
class DynamicsResult:
    joints: dict
    links: dict
    wrenches: dict
    virtual: dict
    forces: np.ndarray
    powers: np.ndarray

    @property
    def rates(self):
        return np.array([self.joints[leg].lam_dot for leg in LEGS])

    def actuators(self):
        return [ActuatorOutput(leg=leg, lam=self.joints[leg].lam, lam_dot=self.joints[leg].lam_dot,
                               lam_ddot=self.joints[leg].lam_ddot, force=float(self.forces[i]),
                               power=float(self.powers[i]))
                for i, leg in enumerate(LEGS)]


def inverse_dynamics(platform, model):
    """Full pipeline for one platform state: joints, link states, wrenches, forces, powers."""
    joints = solve_state(platform, model)
    links = {leg: link_states(leg, joints[leg], model) for leg in LEGS}
    wrenches = {leg: leg_wrenches(leg, joints[leg], links[leg], model) for leg in LEGS}
    virtual = virtual_rates(joints, model)
    forces = actuator_forces(wrenches, virtual)
    rates = np.array([joints[leg].lam_dot for leg in LEGS])
    return DynamicsResult(joints=joints, links=links, wrenches=wrenches, virtual=virtual,
                          forces=forces, powers=actuator_powers(forces, rates))
