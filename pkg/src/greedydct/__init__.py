"""
Low-complexity 8-point DCT approximations found by greedy angle search.

The package derives integer approximations row by row, scores them with the
usual figures of merit, runs them as multiplierless plans and compares them
in a block compression experiment.
"""

from .catalog import NAMES, APPROXIMATIONS, T1, T2, get_transform
from .circular import circular_mean, circular_summary, circular_variance, row_angles
from .codec import compress_image, ssim, zigzag_retain
from .errors import (
    DegenerateMatrixError,
    DomainError,
    InfeasibleSequenceError,
    PreconditionError,
    UnknownTransformError,
)
from .fast import apply_plan, jam_scale, scaled_plan, t1_fast_plan, verify_factorization
from .linalg import ApproxTransform, angle_between, exact_dct_matrix, orthogonalize
from .metrics import CovarianceModel, full_report, unified_coding_gain
from .search import PermutationSequence, build_search_space, derive_all, greedy_solve

__version__ = "0.1.0"

__all__ = [
    "APPROXIMATIONS",
    "ApproxTransform",
    "CovarianceModel",
    "DegenerateMatrixError",
    "DomainError",
    "InfeasibleSequenceError",
    "NAMES",
    "PermutationSequence",
    "PreconditionError",
    "T1",
    "T2",
    "UnknownTransformError",
    "angle_between",
    "apply_plan",
    "build_search_space",
    "circular_mean",
    "circular_summary",
    "circular_variance",
    "compress_image",
    "derive_all",
    "exact_dct_matrix",
    "full_report",
    "get_transform",
    "greedy_solve",
    "jam_scale",
    "orthogonalize",
    "row_angles",
    "scaled_plan",
    "ssim",
    "t1_fast_plan",
    "unified_coding_gain",
    "verify_factorization",
    "zigzag_retain",
]
