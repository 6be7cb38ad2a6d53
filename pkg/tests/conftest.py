from dataclasses import dataclass

import numpy as np
import pytest

from orthoglide_state import PlatformState
from robot_model import default_model
from trajectory import CosineTrajectory


@dataclass(frozen=True)
class ConstantVelocity:
    """Straight-line platform motion, no acceleration."""
    r0: tuple
    v: tuple

    def state(self, t):
        v = np.asarray(self.v, dtype=float)
        return PlatformState(r=np.asarray(self.r0, dtype=float) + v * t, v=v, a=np.zeros(3))


@pytest.fixture
def model():
    return default_model()


@pytest.fixture
def weightless(model):
    return model.with_gravity(g=0.0)


@pytest.fixture
def trajectory():
    return CosineTrajectory()


@pytest.fixture
def resting():
    return CosineTrajectory(amplitudes=(0.0, 0.0, 0.0))


@pytest.fixture
def rng():
    return np.random.default_rng(2)


@pytest.fixture
def cruising():
    return ConstantVelocity(r0=(0.02, -0.03, 0.05), v=(0.1, 0.2, -0.15))
