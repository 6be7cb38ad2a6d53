import argparse
import sys

import constants
from orthoglide_sim import OrthoglideSimulation


def build_parser():
    parser = argparse.ArgumentParser(description="Orthoglide inverse kinematics and dynamics")
    parser.add_argument("--log_path", default="log", help="Directory path to dump log files, filepath if "
                                                          "disable_logging is true")
    parser.add_argument("--disable_logging", action="store_true", help="Disable Logging, log_path becomes path to file")
    sub = parser.add_subparsers(dest="command", required=True)

    ik = sub.add_parser("ik", help="Inverse geometry of one platform position")
    ik.add_argument("x", type=float, help="platform x [m]")
    ik.add_argument("y", type=float, help="platform y [m]")
    ik.add_argument("z", type=float, help="platform z [m]")
    ik.add_argument("--config", "-c", help="robot parameter file")

    simulate = sub.add_parser("simulate", help="Sweep the cosine trajectory and write a CSV")
    simulate.add_argument("--config", "-c", help="robot parameter file")
    simulate.add_argument("--t-end", dest="t_end", type=float, default=constants.DEFAULT_T_END,
                          help="end of the sweep window [s]")
    simulate.add_argument("--samples", "-n", type=int, default=constants.DEFAULT_SAMPLES, help="number of samples")
    simulate.add_argument("--out", "-o", default=constants.default_csv, help="CSV output path")
    simulate.add_argument("--amplitudes", nargs=3, type=float, metavar=("X", "Y", "Z"),
                          help="trajectory amplitudes [m]")
    simulate.add_argument("--no-gravity", dest="no_gravity", action="store_true", help="Switch gravity off")

    plot = sub.add_parser("plot", help="Render displacement and power plots from a sweep CSV")
    plot.add_argument("csv", help="CSV written by simulate")
    plot.add_argument("--out", "-o", default=constants.default_plot_dir, help="output directory")

    verify = sub.add_parser("verify", help="Run the numerical oracles")
    verify.add_argument("--suite", choices=["all", "kin", "dyn"], default="all", help="oracle group")
    verify.add_argument("--seed", "-s", type=int, default=2, help="Seed used by random number generator")
    verify.add_argument("--config", "-c", help="robot parameter file")
    verify.add_argument("--no-gravity", dest="no_gravity", action="store_true", help="Switch gravity off")
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)

    if args.disable_logging:
        if args.log_path == "log":
            args.log_path = "results.log"

    app = OrthoglideSimulation(args)
    return app.run()


if __name__ == '__main__':
    sys.exit(main())
