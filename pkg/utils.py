import logging

import numpy as np


class OrthoglideError(Exception):
    """Base class for workspace, singularity and input failures.

    Args:
        message (str): human readable description
        t (float): time of the offending sample, when the error comes from a sweep
    """

    def __init__(self, message, t=None):
        super().__init__(message)
        self.t = t


class NearSingular(OrthoglideError):
    pass


class SingularMatrix(NearSingular):
    pass


class OutOfWorkspace(OrthoglideError):
    pass


class UnknownLeg(OrthoglideError):
    pass


class StepTooLarge(OrthoglideError):
    pass


class MalformedCsv(OrthoglideError):
    pass


class MainLoggingFilter(logging.Filter):
    def __init__(self, name: str) -> None:
        super().__init__(name=name)

    def filter(self, record):
        if record.name == self.name:
            return True
        else:
            return False


class OracleLoggingFilter(logging.Filter):
    def __init__(self, name: str) -> None:
        super().__init__(name=name)

    def filter(self, record):
        if self.name in record.name or record.name == __name__:
            return True
        else:
            return False


def relative_error(abs_error, scale):
    """Scale-normalised error; falls back to the absolute error when the reference vanishes."""
    if scale > 0.0:
        return abs_error / scale
    return abs_error


def sample_times(t_end, samples):
    """Uniform sample instants on [0, t_end], both ends included."""
    if samples < 2:
        raise ValueError("at least 2 samples are needed, got {}".format(samples))
    return np.linspace(0.0, t_end, samples)
