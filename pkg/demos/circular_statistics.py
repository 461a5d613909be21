"""
Angles between approximation rows and DCT rows, summarised with circular
statistics: mean direction, circular variance and the modified mean
difference against the DCT angles.
"""

import numpy as np

from greedydct import catalog
from greedydct.circular import circular_mean, circular_summary, circular_variance, row_angles
from greedydct.linalg import exact_dct_matrix

C = exact_dct_matrix(8)
print(f"{'name':10s} {'mean deg':>9s} {'var':>8s} {'mod diff':>9s}")
for name in ("DCT", "T1", "T2", "RDCT", "SDCT", "LO"):
    t = C if name == "DCT" else catalog.entry(name).matrix
    theta, v, d = circular_summary(t, C)
    print(f"{name:10s} {theta:9.2f} {v:8.4f} {d:9.4f}")

# the raw angles of T1, in degrees
print("\nT1 row angles:", np.round(np.degrees(row_angles(catalog.T1)), 2))

# opposite directions cancel and have no mean
try:
    circular_mean([0.0, np.pi])
except Exception as err:
    print("circular_mean([0, pi]):", type(err).__name__)
print("variance of identical angles:", circular_variance([0.3] * 5))
