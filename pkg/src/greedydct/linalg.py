"""
Exact DCT matrices, vector angles and the polar-decomposition scaling.

A low-complexity matrix ``T`` becomes an orthogonal DCT approximation through

    C_hat = S @ T,   S = sqrt(inv(T @ T.T))

When the rows of ``T`` are pairwise orthogonal, ``T @ T.T`` is diagonal and
``S`` reduces to ``diag(1 / ||t_i||)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Literal

import numpy as np

from .errors import DegenerateMatrixError, DomainError

ALGEBRAIC_TOL = 1e-12
EIGEN_TOL = 1e-10
DIAGONAL_TOL = 1e-14

SUPPORTED_LENGTHS = (8, 16, 32)

ScalingKind = Literal["diagonal-row-norm", "row-norm", "scalar", "general-spd"]


def exact_dct_matrix(n: int = 8) -> np.ndarray:
    """Orthonormal DCT-II matrix of size ``n`` (rows are basis functions)."""
    if n not in SUPPORTED_LENGTHS:
        raise ValueError(f"unsupported DCT length {n}; expected one of {SUPPORTED_LENGTHS}")
    k = np.arange(n)[:, None]
    j = np.arange(n)[None, :]
    # The greedy search compares float angles with strict '<'; some of its
    # exact ties are broken by the last ulp of these entries. Keep this formula.
    c = np.sqrt(2.0 / n) * np.cos(np.pi * k * (2 * j + 1) / (2 * n))
    c[0] /= np.sqrt(2.0)
    c.flags.writeable = False
    return c


def printed_dct_matrix() -> np.ndarray:
    """The unnormalized 8-point DCT written with ``gamma_k = cos(2 pi (k+1) / 32)``.

    Every row has norm 2; dividing by 2 gives :func:`exact_dct_matrix` (8).
    """
    g = np.cos(2 * np.pi * (np.arange(7) + 1) / 32)
    g0, g1, g2, g3, g4, g5, g6 = g
    c = np.array([
        [g3, g3, g3, g3, g3, g3, g3, g3],
        [g0, g2, g4, g6, -g6, -g4, -g2, -g0],
        [g1, g5, -g5, -g1, -g1, -g5, g5, g1],
        [g2, -g6, -g0, -g4, g4, g0, g6, -g2],
        [g3, -g3, -g3, g3, g3, -g3, -g3, g3],
        [g4, -g0, g6, g2, -g2, -g6, g0, -g4],
        [g5, -g1, g1, -g5, -g5, g1, -g1, g5],
        [g6, -g4, g2, -g0, g0, -g2, g4, -g6],
    ])
    c.flags.writeable = False
    return c


def angle_between(u, v) -> float:
    """Angle in radians between two vectors, in ``[0, pi]``."""
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    nu = np.linalg.norm(u)
    nv = np.linalg.norm(v)
    if nu == 0 or nv == 0:
        raise DomainError("angle undefined for a zero-norm vector")
    ratio = float(np.dot(u, v)) / (nu * nv)
    return float(np.arccos(min(1.0, max(-1.0, ratio))))


def _is_diagonal(m: np.ndarray) -> bool:
    off = m - np.diag(np.diag(m))
    return bool(np.all(np.abs(off) <= DIAGONAL_TOL))


def spd_inverse_sqrt(m) -> np.ndarray:
    """Symmetric ``S`` with ``S @ m @ S = I`` for symmetric positive definite ``m``."""
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DomainError("matrix must be square")
    if not np.allclose(m, m.T, rtol=0, atol=EIGEN_TOL):
        raise DomainError("matrix is not symmetric")
    if _is_diagonal(m):
        d = np.diag(m)
        if np.any(d <= 0):
            raise DomainError("matrix is not positive definite")
        return np.diag(1.0 / np.sqrt(d))
    w, v = np.linalg.eigh(m)
    if np.any(w <= 0):
        raise DomainError("matrix is not positive definite")
    s = (v / np.sqrt(w)) @ v.T
    return (s + s.T) / 2


@dataclass(frozen=True)
class ApproxTransform:
    """A low-complexity matrix ``t`` with its scaling ``s`` and ``c_hat = s @ t``."""

    name: str
    t: np.ndarray
    s: np.ndarray
    c_hat: np.ndarray
    scaling_kind: ScalingKind
    provenance: str = ""

    @property
    def size(self) -> int:
        return self.t.shape[0]


def _frozen(a: np.ndarray) -> np.ndarray:
    a = np.array(a)
    a.flags.writeable = False
    return a


def orthogonalize(t, name: str = "", provenance: str = "") -> ApproxTransform:
    """Scale ``t`` by ``sqrt(inv(t @ t.T))`` to obtain an orthogonal approximation."""
    t = np.asarray(t)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("transform matrix must be square")
    gram = t.astype(float) @ t.T.astype(float)
    if np.linalg.matrix_rank(gram) < gram.shape[0]:
        raise DegenerateMatrixError("t @ t.T is singular")
    s = spd_inverse_sqrt(gram)
    kind: ScalingKind = "diagonal-row-norm" if _is_diagonal(gram) else "general-spd"
    return ApproxTransform(name, _frozen(t), _frozen(s), _frozen(s @ t), kind, provenance)


def scalar_scaled(t, scale: float, name: str = "", provenance: str = "") -> ApproxTransform:
    """Approximation with a single scalar factor, e.g. ``sgn(C) / sqrt(8)``."""
    t = np.asarray(t)
    s = scale * np.eye(t.shape[0])
    return ApproxTransform(name, _frozen(t), _frozen(s), _frozen(scale * t.astype(float)), "scalar", provenance)


def row_normalized(t, name: str = "", provenance: str = "") -> ApproxTransform:
    """Divide each row by its norm. Orthogonal only if the rows of ``t`` already are."""
    t = np.asarray(t)
    norms = np.sqrt(np.sum(t.astype(float) ** 2, axis=1))
    if np.any(norms == 0):
        raise DegenerateMatrixError("matrix has a zero row")
    s = np.diag(1 / norms)
    return ApproxTransform(name, _frozen(t), _frozen(s), _frozen(s @ t), "row-norm", provenance)


def kronecker(a, b) -> np.ndarray:
    return np.kron(np.asarray(a), np.asarray(b))


def has_orthonormal_rows(m, tol: float = ALGEBRAIC_TOL) -> bool:
    m = np.asarray(m, dtype=float)
    return bool(np.allclose(m @ m.T, np.eye(m.shape[0]), rtol=0, atol=tol))
