from dataclasses import dataclass

import numpy as np

import constants
from orthoglide_state import PlatformState


@dataclass(frozen=True)
class CosineTrajectory:
    """r(t) = amplitudes * (1 - cos(w t)); starts at rest from the central configuration.

    Args:
        amplitudes (tuple): x*, y*, z* in m
        angular_factor (float): w in rad/s
        duration (float): default sweep window in s
    """
    amplitudes: tuple = constants.DEFAULT_AMPLITUDES
    angular_factor: float = constants.DEFAULT_ANGULAR_FACTOR
    duration: float = constants.DEFAULT_T_END

    def state(self, t):
        amp = np.asarray(self.amplitudes, dtype=float)
        w = self.angular_factor
        return PlatformState(r=amp * (1.0 - np.cos(w * t)),
                             v=amp * w * np.sin(w * t),
                             a=amp * w * w * np.cos(w * t))

    def __call__(self, t):
        return self.state(t)


def cosine_trajectory(t, params=None):
    return (params or CosineTrajectory()).state(t)
