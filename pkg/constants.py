import math
import os

default_config = os.path.join("configs", "default.cfg")

LEGS = ("A", "B", "C")
VIRTUAL_SETS = ("a", "b", "c")

# Reference prototype: lengths in m, angles in rad, masses in kg
DEFAULT_GEOMETRY = {"l": 0.20, "l1": 0.15, "l2": 0.08, "l3": 0.85, "alpha": math.pi / 4}
DEFAULT_MASSES = {"m1": 0.35, "m2": 0.2, "m3": 2.5, "m4": 0.2, "m5": 15.0, "m6": 2.5}
GRAVITY = 9.81
GRAVITY_DIRECTION = (0.0, 0.0, -1.0)

# Keys accepted in a parameter file
CONFIG_KEYS = ("l", "l1", "l2", "l3", "alpha", "m1", "m2", "m3", "m4", "m5", "m6", "g")

# Platform trajectory
DEFAULT_AMPLITUDES = (0.05, 0.10, -0.20)
DEFAULT_ANGULAR_FACTOR = math.pi / 3
DEFAULT_T_END = 2.0
DEFAULT_SAMPLES = 201

# Singularity thresholds
SINGULAR_TOLERANCE = 1e-12
COS_SINGULAR_TOLERANCE = 1e-9
CONDITION_LIMIT = 1e12

# Differencing steps
TIME_STEP = 1e-5
SPACE_STEP = 1e-6
RATE_STEP = 1e-5

# Oracle tolerances
LOOP_CLOSURE_TOLERANCE = 1e-12
JACOBIAN_TOLERANCE = 1e-10
RATE_TOLERANCE = 1e-6
ACCEL_TOLERANCE = 1e-4
STATIC_TOLERANCE = 1e-6
LAGRANGE_TOLERANCE = 1e-3
ENERGY_TOLERANCE = 1e-4

# Sample counts used by the verify suites
LOOP_CLOSURE_SAMPLES = 1000
STATIC_SAMPLES = 50
LAGRANGE_SAMPLES = 21
RANDOM_POSE_BOX = 0.3
STATIC_POSE_BOX = 0.15

# CSV output
CSV_COLUMNS = [
    "t", "x", "y", "z",
    "lamA", "lamB", "lamC",
    "dlamA", "dlamB", "dlamC",
    "ddlamA", "ddlamB", "ddlamC",
    "phi21A", "phi32A", "phi21B", "phi32B", "phi21C", "phi32C",
    "fA", "fB", "fC",
    "pA", "pB", "pC",
]
CSV_FLOAT_FORMAT = "%.9e"
default_csv = "orthoglide.csv"
default_plot_dir = "plots"

# column -> (title, y label)
PLOT_COLUMNS = {
    "lamA": ("Input displacement of actuator A", "displacement [m]"),
    "lamB": ("Input displacement of actuator B", "displacement [m]"),
    "lamC": ("Input displacement of actuator C", "displacement [m]"),
    "pA": ("Input power of actuator A", "power [W]"),
    "pB": ("Input power of actuator B", "power [W]"),
    "pC": ("Input power of actuator C", "power [W]"),
}

# Exit codes
EXIT_OK = 0
EXIT_FAILED = 1
EXIT_WORKSPACE = 2
