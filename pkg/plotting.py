import os

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt
import pandas as pd

import constants
from utils import MalformedCsv

plt.rcParams["svg.hashsalt"] = "orthoglide"
plt.rcParams["svg.fonttype"] = "none"
plt.rcParams["font.size"] = 9
plt.rcParams["figure.figsize"] = [5.0, 3.2]


def read_sweep(csv_path):
    """Load a sweep CSV; raises MalformedCsv when columns are missing or not numeric."""
    try:
        frame = pd.read_csv(csv_path)
    except (pd.errors.ParserError, pd.errors.EmptyDataError, UnicodeDecodeError) as e:
        raise MalformedCsv("{}: {}".format(csv_path, e)) from e
    missing = [c for c in ["t", *constants.PLOT_COLUMNS] if c not in frame.columns]
    if missing:
        raise MalformedCsv("{}: missing columns {}".format(csv_path, ", ".join(missing)))
    try:
        return frame.astype(float)
    except ValueError as e:
        raise MalformedCsv("{}: {}".format(csv_path, e)) from e


def render_plots(csv_path, out_dir=constants.default_plot_dir):
    """One SVG per actuator displacement and per actuator power against time.

    Returns:
        list[str]: written file paths, plot_<column>.svg
    """
    frame = read_sweep(csv_path)
    os.makedirs(out_dir, exist_ok=True)
    paths = []
    for column, (title, y_label) in constants.PLOT_COLUMNS.items():
        fig, ax = plt.subplots()
        ax.plot(frame["t"], frame[column], color="black", linewidth=1.2)
        ax.set_title(title)
        ax.set_xlabel("time [s]")
        ax.set_ylabel(y_label)
        ax.grid(True, linewidth=0.3)
        # Turn off top and right border
        ax.spines["right"].set_visible(False)
        ax.spines["top"].set_visible(False)
        fig.tight_layout()
        path = os.path.join(out_dir, "plot_{}.svg".format(column))
        fig.savefig(path, format="svg", metadata={"Date": None})
        plt.close(fig)
        paths.append(path)
    return paths
