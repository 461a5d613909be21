"""
Figures of merit for DCT approximations under a first-order Markov model.

All measures compare an approximation ``c_hat`` against the orthonormal
8-point DCT, with input covariance ``R_x[i, j] = rho ** |i - j|``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .catalog import get_transform
from .errors import DegenerateMatrixError, PreconditionError
from .linalg import exact_dct_matrix

DEFAULT_RHO = 0.95


@dataclass(frozen=True)
class CovarianceModel:
    rho: float = DEFAULT_RHO
    n: int = 8

    def __post_init__(self):
        if not 0 < self.rho < 1:
            raise ValueError(f"rho must lie in (0, 1), got {self.rho}")


def covariance_matrix(model: CovarianceModel) -> np.ndarray:
    idx = np.arange(model.n)
    return model.rho ** np.abs(idx[:, None] - idx[None, :]).astype(float)


def _reference(c_hat) -> tuple[np.ndarray, np.ndarray]:
    c_hat = np.asarray(c_hat, dtype=float)
    return exact_dct_matrix(c_hat.shape[0]), c_hat


def total_error_energy(c_hat) -> float:
    c, c_hat = _reference(c_hat)
    return float(np.pi * np.sum((c - c_hat) ** 2))


def mse(c_hat, model: CovarianceModel = CovarianceModel()) -> float:
    c, c_hat = _reference(c_hat)
    d = c - c_hat
    return float(np.trace(d @ covariance_matrix(model) @ d.T) / c.shape[0])


def unified_coding_gain(c_hat, model: CovarianceModel = CovarianceModel()) -> float:
    """Coding gain in dB valid for non-orthogonal transforms.

    ``A_i`` sums the entries of ``outer(c_i, c_i) * R_x`` and ``B_i`` is the
    squared norm of row ``i`` of ``inv(c_hat)``.
    """
    c_hat = np.asarray(c_hat, dtype=float)
    n = c_hat.shape[0]
    try:
        g = np.linalg.inv(c_hat)
    except np.linalg.LinAlgError:
        raise DegenerateMatrixError("approximation matrix is singular") from None
    r = covariance_matrix(CovarianceModel(model.rho, n))
    a = np.array([np.sum(np.outer(row, row) * r) for row in c_hat])
    b = np.sum(g**2, axis=1)
    return float(-10.0 / n * np.sum(np.log10(a * b)))


def transformed_covariance(c_hat, model: CovarianceModel = CovarianceModel()) -> np.ndarray:
    c_hat = np.asarray(c_hat, dtype=float)
    return c_hat @ covariance_matrix(CovarianceModel(model.rho, c_hat.shape[0])) @ c_hat.T


def coding_gain(c_hat, model: CovarianceModel = CovarianceModel()) -> float:
    """Classical coding gain in dB; only meaningful for orthogonal rows."""
    c_hat = np.asarray(c_hat, dtype=float)
    gram = c_hat @ c_hat.T
    if not np.allclose(gram, np.diag(np.diag(gram)), rtol=0, atol=1e-10):
        raise PreconditionError("coding_gain needs orthogonal rows; use unified_coding_gain")
    n = c_hat.shape[0]
    var = np.diag(transformed_covariance(c_hat, model))
    norms2 = np.diag(gram)
    geo = np.exp(np.mean(np.log(var * norms2)))
    return float(10 * np.log10(np.mean(var) / geo))


def transform_efficiency(c_hat, model: CovarianceModel = CovarianceModel()) -> float:
    ry = np.abs(transformed_covariance(c_hat, model))
    return float(100 * np.trace(ry) / np.sum(ry))


def coding_gain_curve(c_hat, rho_grid) -> list[tuple[float, float]]:
    """Unified coding gain lost against the exact DCT at each ``rho``."""
    c = exact_dct_matrix(np.asarray(c_hat).shape[0])
    out = []
    for rho in rho_grid:
        m = CovarianceModel(float(rho), c.shape[0])
        out.append((float(rho), unified_coding_gain(c, m) - unified_coding_gain(c_hat, m)))
    return out


def default_rho_grid() -> np.ndarray:
    return np.round(np.arange(1, 100) / 100, 2)


@dataclass(frozen=True)
class MetricsReport:
    name: str
    epsilon: float
    mse: float
    unified_cg: float
    eta: float
    cg: float | None = None

    COLUMNS = ("name", "epsilon", "mse", "unified_cg_db", "eta_percent")

    def row(self) -> tuple:
        return (self.name, self.epsilon, self.mse, self.unified_cg, self.eta)


def full_report(name: str, model: CovarianceModel = CovarianceModel()) -> MetricsReport:
    c_hat = get_transform(name).c_hat
    try:
        cg = coding_gain(c_hat, model)
    except PreconditionError:
        cg = None
    return MetricsReport(
        name=name,
        epsilon=total_error_energy(c_hat),
        mse=mse(c_hat, model),
        unified_cg=unified_coding_gain(c_hat, model),
        eta=transform_efficiency(c_hat, model),
        cg=cg,
    )
