"""
Circular descriptive statistics of matrix row angles.

Each row is summarised by its angle to ``e1``. The mean direction, circular
variance and the two mean-difference measures follow the usual definitions
for a sample of angles on the unit circle.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError
from .linalg import ALGEBRAIC_TOL, angle_between


def row_angles(t) -> np.ndarray:
    t = np.asarray(t, dtype=float)
    e1 = np.zeros(t.shape[1])
    e1[0] = 1.0
    return np.array([angle_between(row, e1) for row in t])


def _resultant(angles) -> tuple[float, float]:
    a = np.asarray(angles, dtype=float)
    return float(np.sum(np.cos(a))), float(np.sum(np.sin(a)))


def circular_mean(angles) -> float:
    """Mean direction in ``[0, 2 pi)`` from the quadrant-wise arctangent."""
    c, s = _resultant(angles)
    # sin(pi) and friends leave ~1e-16 residue, so "zero" is judged per sample
    if np.hypot(c, s) <= ALGEBRAIC_TOL * max(1, np.size(angles)):
        raise DomainError("mean direction undefined for a zero resultant")
    if c == 0:
        return np.pi / 2 if s > 0 else 3 * np.pi / 2
    base = float(np.arctan(s / c))
    if c < 0:
        return base + np.pi
    if s < 0:
        return base + 2 * np.pi
    return base


def circular_variance(angles) -> float:
    a = np.asarray(angles, dtype=float)
    c, s = _resultant(a)
    return float(1 - np.hypot(c, s) / a.size)


def _wrapped(d):
    return np.pi - np.abs(np.pi - np.abs(d))


def mean_circular_difference(c_angles, t_angles) -> float:
    """Average wrapped difference over every pair ``(c_i, t_j)``."""
    c = np.asarray(c_angles, dtype=float)
    t = np.asarray(t_angles, dtype=float)
    return float(np.mean(_wrapped(c[:, None] - t[None, :])))


def modified_circular_mean_difference(c_angles, t_angles) -> float:
    """Average wrapped difference between corresponding rows only."""
    c = np.asarray(c_angles, dtype=float)
    t = np.asarray(t_angles, dtype=float)
    if c.shape != t.shape:
        raise ValueError("angle sets must have the same size")
    return float(np.mean(_wrapped(c - t)))


def circular_summary(t, reference) -> tuple[float, float, float]:
    """``(mean angle in degrees, variance, modified mean difference in radians)``."""
    a = row_angles(t)
    return (
        float(np.degrees(circular_mean(a))),
        circular_variance(a),
        modified_circular_mean_difference(row_angles(reference), a),
    )
