"""
Published figures for transforms that are compared against but not built here.

Several approximations appear in comparison tables only through their
reported metrics and operation counts; their matrices are not part of the
catalog. These constants let reports place them next to computed rows. None
of them is recomputed by the package.
"""

from __future__ import annotations

from typing import NamedTuple


class FastAlgorithmCost(NamedTuple):
    multiplications: int
    additions: int


class ReportedMetrics(NamedTuple):
    epsilon: float
    mse: float
    unified_cg_db: float
    eta_percent: float


class ReportedCircular(NamedTuple):
    theta_bar_deg: float
    variance: float
    dbar_mod_rad: float


class OperationCount(NamedTuple):
    multiplications: int
    additions: int
    bit_shifts: int


# Exact 8-point DCT fast algorithms.
EXACT_DCT_ALGORITHMS = {
    "Loeffler": FastAlgorithmCost(11, 29),
    "Yuan": FastAlgorithmCost(12, 29),
    "Lee": FastAlgorithmCost(12, 29),
    "Hou": FastAlgorithmCost(12, 29),
    "Arai": FastAlgorithmCost(13, 29),
    "Chen": FastAlgorithmCost(16, 26),
    "Feig-Winograd": FastAlgorithmCost(22, 28),
}

# rho = 0.95
REPORTED_METRICS = {
    "IDCT-HEVC": ReportedMetrics(0.0020, 8.66e-6, 8.8248, 93.8236),
    "MRDCT": ReportedMetrics(8.6592, 0.0594, 7.3326, 80.8969),
    "BAS-2008a": ReportedMetrics(5.9294, 0.0238, 8.1194, 86.8626),
    "BAS-2009": ReportedMetrics(6.8543, 0.0275, 7.9126, 85.3799),
    "BAS-2011": ReportedMetrics(26.8462, 0.0710, 7.9118, 85.6419),
    "BAS-2013": ReportedMetrics(35.0639, 0.1023, 7.9461, 85.3138),
    "T1'": ReportedMetrics(3.3158, 0.0208, 6.0462, 83.0814),
    "T5": ReportedMetrics(1.7945, 0.0100, 8.1369, 86.5359),
}

REPORTED_CIRCULAR = {
    "IDCT-HEVC": ReportedCircular(70.50, 0.0086, 0.0022),
    "MRDCT": ReportedCircular(75.58, 0.0392, 0.1646),
    "BAS-2008a": ReportedCircular(72.35, 0.0198, 0.1036),
    "BAS-2009": ReportedCircular(72.10, 0.0183, 0.1334),
    "BAS-2011": ReportedCircular(73.54, 0.0265, 0.1492),
    "BAS-2013": ReportedCircular(69.29, 0.0, 0.1062),
    "T1'": ReportedCircular(73.54, 0.0265, 0.0901),
    "T5": ReportedCircular(72.45, 0.0209, 0.0730),
}

# 8-point operation counts, catalog entries included.
OPERATION_COUNTS = {
    "DCT": OperationCount(11, 29, 0),
    "IDCT-HEVC": OperationCount(0, 50, 30),
    "T1": OperationCount(0, 24, 6),
    "LO": OperationCount(0, 24, 2),
    "SDCT": OperationCount(0, 24, 0),
    "RDCT": OperationCount(0, 22, 0),
    "MRDCT": OperationCount(0, 14, 0),
    "BAS-2008a": OperationCount(0, 18, 2),
    "BAS-2008b": OperationCount(0, 21, 0),
    "BAS-2009": OperationCount(0, 18, 0),
    "BAS-2011": OperationCount(0, 16, 0),
    "BAS-2013": OperationCount(0, 24, 0),
    "T1'": OperationCount(0, 18, 0),
    "T4": OperationCount(0, 24, 0),
    "T5": OperationCount(0, 24, 4),
    "T6": OperationCount(0, 24, 6),
}

# Integer HEVC inverse transform, (additions, bit-shifts) by length.
HEVC_IDCT_COSTS = {8: (50, 30), 16: (186, 86), 32: (682, 278)}

# Scaled T1 transforms, (additions, bit-shifts) by length.
SCALED_T1_COSTS = {8: (24, 6), 16: (64, 12), 32: (160, 24)}
