import math
from dataclasses import dataclass

from utils import relative_error


@dataclass(frozen=True)
class OracleReport:
    """Outcome of one oracle sweep; passed iff max_rel_error <= tolerance."""
    name: str
    max_abs_error: float
    max_rel_error: float
    worst_time: float
    passed: bool
    tolerance: float


def build_report(name, errors, scale, tolerance):
    """Report from (time, abs_error) pairs and a reference scale (1.0 for absolute checks).

    Pose-sampled checks pass nan as the time.
    """
    worst_time, max_abs = max(errors, key=lambda pair: pair[1], default=(float("nan"), 0.0))
    max_rel = relative_error(max_abs, scale)
    return OracleReport(name=name, max_abs_error=float(max_abs), max_rel_error=float(max_rel),
                        worst_time=float(worst_time), passed=bool(max_rel <= tolerance),
                        tolerance=tolerance)


def format_table(reports):
    header = "{:<22} {:>12} {:>12} {:>10} {:>10}  {}".format(
        "oracle", "max abs", "max rel", "worst t", "tolerance", "result")
    lines = [header, "-" * len(header)]
    for report in reports:
        lines.append("{:<22} {:>12.3e} {:>12.3e} {:>10} {:>10.1e}  {}".format(
            report.name, report.max_abs_error, report.max_rel_error, _time_cell(report.worst_time),
            report.tolerance, "pass" if report.passed else "FAIL"))
    return "\n".join(lines)


def _time_cell(t):
    return "-" if math.isnan(t) else "{:.4f}".format(t)
