import logging
import os

import numpy as np

import constants
from constants import LEGS
from kinematics import constraint_residuals, inverse_geometry, jacobians, slider_vector
from oracles.report import format_table
from oracles.suite import OracleSuite
from plotting import render_plots
from robot_model import default_model, load_model
from simulation import emit_csv, simulate
from trajectory import CosineTrajectory
from utils import (MainLoggingFilter, NearSingular, OracleLoggingFilter, OrthoglideError, OutOfWorkspace,
                   StepTooLarge)


class OrthoglideSimulation:
    """One CLI invocation: sets up logging, loads the robot and runs a subcommand."""

    def __init__(self, args):
        self.args = args
        self.do_logging = not args.disable_logging
        self.log_dir = None
        self.handlers = []

        self.logger = logging.getLogger(__name__)
        self.logger.handlers.clear()
        self.logger.disabled = False
        # create file handler which logs even debug messages
        if self.do_logging:
            self.logger.setLevel(logging.DEBUG)
            self.log_dir = args.log_path
            if self.log_dir:
                os.makedirs(self.log_dir, exist_ok=True)
            self.add_handler(os.path.join(self.log_dir, "debug.log"), logging.DEBUG, MainLoggingFilter(__name__))
            self.add_handler(os.path.join(self.log_dir, "results.log"), logging.INFO, MainLoggingFilter(__name__))
        else:
            if args.log_path:
                self.logger.setLevel(logging.INFO)
                result_path = args.log_path
                self.log_dir = os.path.dirname(result_path)
                if self.log_dir:
                    os.makedirs(self.log_dir, exist_ok=True)
                self.add_handler(result_path, logging.INFO, MainLoggingFilter(__name__))
            else:
                self.logger.setLevel(logging.ERROR)
                self.logger.disabled = True

    def add_handler(self, path, level, log_filter):
        fh = logging.FileHandler(path, mode="w", encoding="utf-8")
        fh.setLevel(level)
        fh.setFormatter(logging.Formatter('%(message)s'))
        fh.addFilter(log_filter)
        self.logger.addHandler(fh)
        self.handlers.append(fh)

    def get_oracle_logger(self, oracle_name):
        oracle_logger = logging.getLogger("{}.{}".format(__name__, oracle_name))

        if self.do_logging:
            oracle_logger.setLevel(logging.DEBUG)
            oracle_logger.disabled = False
            # add handler to self.logger with filtering
            self.add_handler(os.path.join(self.log_dir, "{}.log".format(oracle_name)), logging.DEBUG,
                             OracleLoggingFilter(oracle_name))
        else:
            oracle_logger.setLevel(logging.ERROR)
            oracle_logger.disabled = True

        return oracle_logger

    def close(self):
        for handler in self.handlers:
            self.logger.removeHandler(handler)
            handler.close()
        self.handlers = []

    def load_model(self):
        config = getattr(self.args, "config", None)
        if config:
            self.logger.info("Loading robot parameters from {}".format(config))
            model = load_model(config)
        else:
            model = default_model()
        if getattr(self.args, "no_gravity", False):
            self.logger.info("Gravity disabled")
            model = model.with_gravity(g=0.0)
        return model

    def trajectory(self):
        amplitudes = getattr(self.args, "amplitudes", None) or constants.DEFAULT_AMPLITUDES
        return CosineTrajectory(amplitudes=tuple(float(a) for a in amplitudes),
                                duration=getattr(self.args, "t_end", constants.DEFAULT_T_END))

    def run(self):
        """Dispatch the subcommand and map failures onto exit codes."""
        commands = {"ik": self.run_ik, "simulate": self.run_simulate, "plot": self.run_plot,
                    "verify": self.run_verify}
        try:
            return commands[self.args.command]()
        except (OutOfWorkspace, NearSingular, StepTooLarge) as e:
            self.logger.error("{}: {}".format(type(e).__name__, e))
            print("error: {}".format(e))
            return constants.EXIT_WORKSPACE
        except (OrthoglideError, ValueError, OSError) as e:
            self.logger.error("{}: {}".format(type(e).__name__, e))
            print("error: {}".format(e))
            return constants.EXIT_FAILED
        finally:
            self.close()

    def run_ik(self):
        model = self.load_model()
        r = np.array([self.args.x, self.args.y, self.args.z], dtype=float)
        self.logger.info("Inverse geometry at r = {}".format(r))
        states = inverse_geometry(r, model)
        lam = slider_vector(states)
        pair = jacobians(r, lam, model)
        residuals = constraint_residuals(r, lam, model)

        print("{:<4} {:>14} {:>14} {:>14}".format("leg", "lambda [m]", "phi21 [rad]", "phi32 [rad]"))
        for leg in LEGS:
            print("{:<4} {:>14.9f} {:>14.9f} {:>14.9f}".format(leg, states[leg].lam, states[leg].phi21,
                                                               states[leg].phi32))
        print("residuals [m^2]: {}".format(" ".join("{:.3e}".format(v) for v in residuals)))
        print("det J1 = {:.9e}, det J2 = {:.9e}, singularity: {}".format(pair.det_j1, pair.det_j2,
                                                                         pair.singularity()))
        self.logger.info("lambda = {}, singularity {}".format(lam, pair.singularity()))
        return constants.EXIT_OK

    def run_simulate(self):
        model = self.load_model()
        trajectory = self.trajectory()
        self.logger.info("Simulating {} samples on [0, {}] s, amplitudes {}".format(
            self.args.samples, self.args.t_end, trajectory.amplitudes))
        rows = simulate(model, trajectory, samples=self.args.samples, logger=self.logger)
        path = emit_csv(rows, self.args.out)
        peak = np.max(np.abs([row.force for row in rows]), axis=0)
        self.logger.info("Wrote {} rows to {}, peak forces {}".format(len(rows), path, peak))
        print("wrote {} rows to {}".format(len(rows), path))
        return constants.EXIT_OK

    def run_plot(self):
        paths = render_plots(self.args.csv, self.args.out)
        for path in paths:
            self.logger.info("Wrote {}".format(path))
            print(path)
        return constants.EXIT_OK

    def run_verify(self):
        model = self.load_model()
        self.logger.info("Initialise random number generator with seed {}".format(self.args.seed))
        rng = np.random.default_rng(self.args.seed)
        suite = OracleSuite(model, self.trajectory(), rng, self.get_oracle_logger("oracles"))
        reports = suite.run(self.args.suite)
        print(format_table(reports))
        for report in reports:
            self.logger.info("{} {} (max rel {:.3e}, tolerance {:.1e})".format(
                report.name, "pass" if report.passed else "FAIL", report.max_rel_error, report.tolerance))
        failed = [report.name for report in reports if not report.passed]
        if failed:
            self.logger.info("Failed oracles: {}".format(", ".join(failed)))
            return constants.EXIT_FAILED
        self.logger.info("All {} oracles passed".format(len(reports)))
        return constants.EXIT_OK
