import logging

import numpy as np

import constants
from dynamics import inverse_dynamics
from kinematics import constraint_residuals, inverse_geometry, jacobians, slider_vector, solve_state
from utils import sample_times

from oracles.energy import energy_balance
from oracles.fd_kinematics import fd_kinematics_check
from oracles.lagrangian import lagrangian_oracle
from oracles.report import build_report
from oracles.static_force import static_force_oracle, static_platform

SUITES = ("all", "kin", "dyn")

# Pose-sampled checks have no time axis
NO_TIME = float("nan")


class OracleSuite:
    def __init__(self, model, trajectory, rng: np.random.Generator, logger: logging.Logger,
                 t_end=constants.DEFAULT_T_END, samples=constants.DEFAULT_SAMPLES) -> None:
        """Bundle of consistency checks over one model and trajectory.

            Args:
                model (RobotModel): robot under test
                trajectory (CosineTrajectory): platform motion for the sweep checks
                rng (np.random.Generator): source of the random poses, seed it for repeatable runs
                logger (logging.Logger): per-sample details go to logger.debug
                t_end (float): sweep window in s
                samples (int): sweep samples
        """
        self.model = model
        self.trajectory = trajectory
        self.rng = rng
        self.logger = logger
        self.t_end = t_end
        self.samples = samples

    def random_poses(self, count, box):
        return self.rng.uniform(-box, box, size=(count, 3))

    def loop_closure(self, count=constants.LOOP_CLOSURE_SAMPLES, box=constants.RANDOM_POSE_BOX):
        """Sphere residuals of inverse geometry at random poses, absolute in m^2."""
        errors = []
        for r in self.random_poses(count, box):
            lam = slider_vector(inverse_geometry(r, self.model))
            errors.append((NO_TIME, float(np.max(np.abs(constraint_residuals(r, lam, self.model))))))
        return build_report("loop_closure", errors, 1.0, constants.LOOP_CLOSURE_TOLERANCE)

    def jacobian_identity(self):
        """|J1 lam_dot - J2 r_dot| along the trajectory, absolute."""
        errors = []
        for t in sample_times(self.t_end, self.samples):
            platform = self.trajectory.state(float(t))
            states = solve_state(platform, self.model)
            pair = jacobians(platform.r, slider_vector(states), self.model)
            lam_dot = np.array([states[leg].lam_dot for leg in constants.LEGS])
            errors.append((float(t), float(np.max(np.abs(pair.j1 @ lam_dot - pair.j2 @ platform.v)))))
        return build_report("jacobian_identity", errors, 1.0, constants.JACOBIAN_TOLERANCE)

    def fd_kinematics(self):
        return fd_kinematics_check(self.trajectory, self.model, t_end=self.t_end, samples=self.samples,
                                   logger=self.logger)

    def static_equivalence(self, count=constants.STATIC_SAMPLES, box=constants.STATIC_POSE_BOX):
        """Virtual-work forces of a motionless platform against the potential-energy gradient, absolute in N."""
        errors = []
        for r in self.random_poses(count, box):
            expected = static_force_oracle(r, self.model)
            forces = inverse_dynamics(static_platform(r), self.model).forces
            errors.append((NO_TIME, float(np.max(np.abs(forces - expected)))))
        return build_report("static_equivalence", errors, 1.0, constants.STATIC_TOLERANCE)

    def energy(self):
        return energy_balance(self.trajectory, self.model, t_end=self.t_end, samples=self.samples,
                              logger=self.logger)

    def lagrangian(self, count=constants.LAGRANGE_SAMPLES):
        """Virtual-work forces against the Lagrange equations, error relative to the largest oracle force."""
        errors, scale = [], 0.0
        for t in sample_times(self.t_end, count):
            t = float(t)
            expected = lagrangian_oracle(self.trajectory, t, self.model)
            forces = inverse_dynamics(self.trajectory.state(t), self.model).forces
            errors.append((t, float(np.max(np.abs(forces - expected)))))
            scale = max(scale, float(np.max(np.abs(expected))))
            self.logger.debug("t={:.4f} f={} lagrange={}".format(t, forces, expected))
        return build_report("lagrangian", errors, scale, constants.LAGRANGE_TOLERANCE)

    def run(self, suite="all"):
        """Run the kinematic checks ("kin"), the dynamic checks ("dyn") or both ("all").

        Returns:
            list[OracleReport]
        """
        if suite not in SUITES:
            raise ValueError("unknown suite '{}', expected one of {}".format(suite, ", ".join(SUITES)))
        reports = []
        if suite in ("all", "kin"):
            reports.append(self.loop_closure())
            reports.append(self.jacobian_identity())
            reports.extend(self.fd_kinematics())
        if suite in ("all", "dyn"):
            reports.append(self.static_equivalence())
            reports.append(self.energy())
            reports.append(self.lagrangian())
        for report in reports:
            self.logger.info("{}: max abs {:.3e}, max rel {:.3e} at {:.4f} -> {}".format(
                report.name, report.max_abs_error, report.max_rel_error, report.worst_time,
                "pass" if report.passed else "FAIL"))
        return reports
