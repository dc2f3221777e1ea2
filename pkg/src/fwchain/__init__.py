"""Fermat-Weber points of regular polygonal chains and reflection-symmetric sets."""

from .chain import (
    AxisSolveResult,
    InvalidChainError,
    RegularChain,
    build_chain,
    minimize_on_axis,
    objective,
    objective_derivative,
    weber_point_chain,
)
from .dominance import (
    EvenChainError,
    ThresholdResult,
    compute_threshold,
    root_condition_value,
    upper_bound,
    verify_threshold_by_solver,
)
from .geometry import DegenerateInputError, Point2, Ray
from .symmetry import (
    DetectionReport,
    ParityError,
    SymmetricSpec,
    condition_a,
    detect_extension,
    extension_pivots,
    materialize,
    weber_at_pivot,
)
from .weber import SolveConfig, WeberSolution, descent_test_at_anchor, solve_weber

__all__ = [
    "AxisSolveResult",
    "DegenerateInputError",
    "DetectionReport",
    "EvenChainError",
    "InvalidChainError",
    "ParityError",
    "Point2",
    "Ray",
    "RegularChain",
    "SolveConfig",
    "SymmetricSpec",
    "ThresholdResult",
    "WeberSolution",
    "build_chain",
    "compute_threshold",
    "condition_a",
    "descent_test_at_anchor",
    "detect_extension",
    "extension_pivots",
    "materialize",
    "minimize_on_axis",
    "objective",
    "objective_derivative",
    "root_condition_value",
    "solve_weber",
    "upper_bound",
    "verify_threshold_by_solver",
    "weber_at_pivot",
    "weber_point_chain",
]
