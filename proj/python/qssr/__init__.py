"""Quantum search over job-shop schedules: simulation and resource analysis."""

import csv
import io
import json

from ._core import (
    CapacityError,
    Error,
    Instance,
    ParameterError,
    ValidationError,
    count_solutions,
    fixed_point_angles,
    layout_total,
    load_instance,
    parse_instance_json,
    required_rounds,
    run_fixed_point,
    run_grover,
    space_sizes,
)
from . import _core

__all__ = [
    "CapacityError",
    "Error",
    "Instance",
    "ParameterError",
    "ValidationError",
    "count_solutions",
    "fixed_point_angles",
    "layout_total",
    "load_instance",
    "parse_instance_json",
    "ratio_curves",
    "required_rounds",
    "resource_report",
    "run_fixed_point",
    "run_grover",
    "space_sizes",
]


def ratio_curves(window, machines, k_min, k_max):
    """Rows of sqrt(N/M) for both modes as dicts keyed by the CSV header."""
    text = _core.ratio_curves(window, list(machines), k_min, k_max)
    return list(csv.DictReader(io.StringIO(text)))


def resource_report(instance, mode, gates=True):
    """Qubit counts (and optionally the basic-gate count) as a dict."""
    return json.loads(_core.resource_report_json(instance, mode, gates))
