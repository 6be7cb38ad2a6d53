"""Physical parameters of the Orthoglide and the constant frame data of its three legs."""
import math
from dataclasses import dataclass, field, replace
from functools import lru_cache
from typing import Mapping

import numpy as np

import constants
from core_math import IDENTITY, U1, U2, U3, mat_mul
from utils import UnknownLeg


def _constant(rows):
    m = np.array(rows, dtype=float)
    m.setflags(write=False)
    return m


# Constant matrices of the leg chains
A1 = _constant([[0, 0, -1], [0, 1, 0], [1, 0, 0]])
A2 = _constant([[0, 0, 1], [0, 1, 0], [-1, 0, 0]])
A3 = _constant([[0, 0, -1], [-1, 0, 0], [0, 1, 0]])
A4 = _constant([[-1, 0, 0], [0, 1, 0], [0, 0, -1]])
A5 = _constant([[-1, 0, 0], [0, 0, 1], [0, 1, 0]])
A6 = _constant([[0, -1, 0], [1, 0, 0], [0, 0, 1]])

LEG_BASES = {"A": A1, "B": A5, "C": A6}

# Platform orientation seen from each leg. Leg C's frame follows from its own
# chain (base A6); a slider along z0 cannot reach diag(-1, -1, 1).
PLATFORM_TARGETS = {
    "A": _constant([[0, -1, 0], [-1, 0, 0], [0, 0, -1]]),
    "B": _constant([[0, 0, -1], [0, -1, 0], [-1, 0, 0]]),
    "C": _constant([[-1, 0, 0], [0, 0, -1], [0, -1, 0]]),
}


@dataclass(frozen=True)
class RobotGeometry:
    """Lengths in m, alpha in rad. The coupler length l4 always equals l2."""
    l: float
    l1: float
    l2: float
    l3: float
    alpha: float

    def __post_init__(self):
        for name in ("l", "l1", "l2", "l3"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError("length {} must be positive, got {}".format(name, value))
        if not math.isfinite(self.alpha):
            raise ValueError("alpha must be finite")

    @property
    def l4(self):
        return self.l2


@dataclass(frozen=True, eq=False)
class MassProperties:
    """Masses in kg, tensors in kg m^2, gravity magnitude in m/s^2.

    J2 is taken about A2 (rod centre), J3 about A3 (bar end), J4 about the
    coupler midpoint and JG about the platform centre G.
    """
    m1: float
    m2: float
    m3: float
    m4: float
    m5: float
    m6: float
    J2: np.ndarray
    J3: np.ndarray
    J4: np.ndarray
    JG: np.ndarray
    g: float = constants.GRAVITY
    g_dir: np.ndarray = field(default_factory=lambda: np.array(constants.GRAVITY_DIRECTION))

    def __post_init__(self):
        for name in ("m1", "m2", "m3", "m4", "m5", "m6"):
            value = getattr(self, name)
            if not math.isfinite(value) or value <= 0.0:
                raise ValueError("mass {} must be positive, got {}".format(name, value))
        if not math.isclose(self.m4, self.m2) or not math.isclose(self.m6, self.m3):
            raise ValueError("expected m4 == m2 and m6 == m3")
        if not math.isfinite(self.g) or self.g < 0.0:
            raise ValueError("gravity magnitude must be >= 0, got {}".format(self.g))
        g_dir = np.asarray(self.g_dir, dtype=float)
        if not math.isclose(float(np.linalg.norm(g_dir)), 1.0, abs_tol=1e-12):
            raise ValueError("g_dir must be a unit vector")
        object.__setattr__(self, "g_dir", g_dir)
        for name in ("J2", "J3", "J4", "JG"):
            tensor = np.asarray(getattr(self, name), dtype=float)
            if tensor.shape != (3, 3) or not np.allclose(tensor, tensor.T):
                raise ValueError("inertia tensor {} must be a symmetric 3x3 matrix".format(name))
            object.__setattr__(self, name, tensor)


@dataclass(frozen=True, eq=False)
class BodyProperties:
    """Mass, mass-centre offset from the link origin and inertia about the link origin (body frame)."""
    mass: float
    r_c: np.ndarray
    inertia: np.ndarray

    def central_inertia(self):
        return self.inertia - _parallel_axis(self.mass, self.r_c)


@dataclass(frozen=True, eq=False)
class LegFrames:
    """Constant frame data of one leg.

    Offsets r_{k,parent} are expressed in the parent frame. Body 6, the second
    parallelogram bar, hangs from body 2 at A6.
    """
    leg_id: str
    base: np.ndarray
    a2: np.ndarray
    a3: np.ndarray
    a4: np.ndarray
    r21: np.ndarray
    r32: np.ndarray
    r43: np.ndarray
    r54: np.ndarray
    r62: np.ndarray
    r5g: np.ndarray
    slider_offset: float

    def r10(self, lam):
        """Fixed-frame position of the slider origin A1 for displacement lam."""
        return (lam - self.slider_offset) * (self.base.T @ U3)

    def offset(self, k):
        return {2: self.r21, 3: self.r32, 4: self.r43, 5: self.r54, 6: self.r62}[k]


@dataclass(frozen=True, eq=False)
class RobotModel:
    geometry: RobotGeometry
    masses: MassProperties

    def leg_frames(self, leg_id):
        return leg_frames(leg_id, self.geometry)

    @property
    def gravity(self):
        """Gravity acceleration vector in the fixed frame."""
        return self.masses.g * self.masses.g_dir

    def body(self, k):
        """BodyProperties of body k (1..6) of any leg; body 5 is the platform."""
        geom, masses = self.geometry, self.masses
        r21 = np.array([0.0, geom.l1 * math.sin(geom.alpha), geom.l1 * math.cos(geom.alpha)])
        if k == 1:
            return BodyProperties(masses.m1, 0.5 * r21, np.zeros((3, 3)))
        if k == 2:
            return BodyProperties(masses.m2, np.zeros(3), masses.J2)
        if k == 3:
            return BodyProperties(masses.m3, -0.5 * geom.l3 * U2, masses.J3)
        if k == 4:
            r_c = 0.5 * geom.l4 * U1
            return BodyProperties(masses.m4, r_c, masses.J4 + _parallel_axis(masses.m4, r_c))
        if k == 5:
            r_c = _platform_offset(geom)
            return BodyProperties(masses.m5, r_c, masses.JG + _parallel_axis(masses.m5, r_c))
        if k == 6:
            return BodyProperties(masses.m6, -0.5 * geom.l3 * U2, masses.J3)
        raise ValueError("no body {} in a leg".format(k))

    def with_gravity(self, g=None, g_dir=None):
        changes = {}
        if g is not None:
            changes["g"] = g
        if g_dir is not None:
            changes["g_dir"] = np.asarray(g_dir, dtype=float)
        return replace(self, masses=replace(self.masses, **changes))

    def scaled(self, factor):
        """Copy with every mass and inertia tensor multiplied by factor."""
        m = self.masses
        return replace(self, masses=replace(
            m, m1=factor * m.m1, m2=factor * m.m2, m3=factor * m.m3, m4=factor * m.m4,
            m5=factor * m.m5, m6=factor * m.m6, J2=factor * m.J2, J3=factor * m.J3,
            J4=factor * m.J4, JG=factor * m.JG))


def _parallel_axis(mass, r):
    return mass * (np.dot(r, r) * IDENTITY - np.outer(r, r))


def _platform_offset(geom):
    return np.array([geom.l1 * math.sin(geom.alpha), -0.5 * geom.l, 0.0])


def inertia_from_geometry(geom: RobotGeometry, masses: Mapping[str, float]):
    """Slender homogeneous rods for the bars, a homogeneous cube for the platform.

    Args:
        geom (RobotGeometry): link lengths
        masses (Mapping[str, float]): at least m2, m3, m4, m5

    Returns:
        dict: J2 (rod along z2, about its centre), J3 (bar along y3, about its end),
        J4 (coupler along x4, about its midpoint), JG (cube, about its centre)
    """
    rod2 = masses["m2"] * geom.l2 ** 2 / 12.0
    bar3 = masses["m3"] * geom.l3 ** 2 / 3.0
    rod4 = masses["m4"] * geom.l4 ** 2 / 12.0
    cube = masses["m5"] * geom.l ** 2 / 6.0
    return {
        "J2": np.diag([rod2, rod2, 0.0]),
        "J3": np.diag([bar3, 0.0, bar3]),
        "J4": np.diag([0.0, rod4, rod4]),
        "JG": cube * np.eye(3),
    }


def build_model(values: Mapping[str, float]):
    """RobotModel from a flat mapping of CONFIG_KEYS; missing keys keep reference values."""
    params = {**constants.DEFAULT_GEOMETRY, **constants.DEFAULT_MASSES, "g": constants.GRAVITY}
    for key, value in values.items():
        if key not in constants.CONFIG_KEYS:
            raise ValueError("unknown parameter '{}'".format(key))
        params[key] = float(value)
    # Tied masses follow their partner unless set explicitly
    for tied, partner in (("m4", "m2"), ("m6", "m3")):
        if tied not in values:
            params[tied] = params[partner]
    geom = RobotGeometry(**{k: params[k] for k in constants.DEFAULT_GEOMETRY})
    mass_values = {k: params[k] for k in constants.DEFAULT_MASSES}
    masses = MassProperties(**mass_values, **inertia_from_geometry(geom, mass_values), g=params["g"])
    return RobotModel(geom, masses)


def default_model():
    return build_model({})


def load_model(path):
    """Read a key=value parameter file ('#' starts a comment)."""
    values = {}
    with open(path, "r", encoding="utf-8") as f:
        for line_number, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            key, sep, value = line.partition("=")
            if not sep:
                raise ValueError("{}:{}: expected key=value".format(path, line_number))
            try:
                values[key.strip()] = float(value)
            except ValueError:
                raise ValueError("{}:{}: '{}' is not a number".format(path, line_number, value.strip()))
    return build_model(values)


@lru_cache(maxsize=None)
def leg_frames(leg_id, geometry=None):
    """Constant frame data of leg A, B or C.

    Every leg uses the same local offsets in its own chain; only the base
    matrix differs.
    """
    if leg_id not in LEG_BASES:
        raise UnknownLeg("unknown leg '{}'".format(leg_id))
    geom = geometry if geometry is not None else default_model().geometry
    s, c = math.sin(geom.alpha), math.cos(geom.alpha)
    offsets = {
        "r21": np.array([0.0, geom.l1 * s, geom.l1 * c]),
        "r32": -0.5 * geom.l2 * U3,
        "r43": -geom.l3 * U2,
        "r54": 0.5 * geom.l4 * U1,
        "r62": 0.5 * geom.l2 * U3,
        "r5g": _platform_offset(geom),
    }
    for vector in offsets.values():
        vector.setflags(write=False)
    return LegFrames(leg_id=leg_id, base=LEG_BASES[leg_id], a2=A2, a3=A3, a4=A4,
                     slider_offset=geom.l1 * c + geom.l3 + 0.5 * geom.l, **offsets)


def platform_target_frames():
    return dict(PLATFORM_TARGETS)


def zero_pose_platform_frame(leg_id):
    """Composed a50 of a leg with every joint angle at zero."""
    frames = leg_frames(leg_id)
    return mat_mul(frames.a2, frames.a4, frames.a3, frames.a2, frames.base)
