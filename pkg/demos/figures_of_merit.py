"""
Figures of merit for the catalogued approximations at rho = 0.95, plus the
coding gain loss against the DCT over a range of correlation coefficients.
"""

import numpy as np

from greedydct import catalog
from greedydct.metrics import CovarianceModel, coding_gain_curve, full_report, unified_coding_gain

print(f"{'name':10s} {'eps':>8s} {'mse':>8s} {'Cg*':>8s} {'eta':>8s}")
for name in catalog.NAMES:
    r = full_report(name)
    print(f"{name:10s} {r.epsilon:8.4f} {r.mse:8.4f} {r.unified_cg:8.4f} {r.eta:8.4f}")

rhos = np.array([0.5, 0.8, 0.9, 0.95, 0.99])
print("\ncoding gain loss against the DCT (dB)")
print("rho       " + " ".join(f"{x:7.2f}" for x in rhos))
for name in ("T1", "T2", "RDCT", "SDCT"):
    curve = coding_gain_curve(catalog.get_transform(name).c_hat, rhos)
    print(f"{name:10s}" + " ".join(f"{loss:7.4f}" for _, loss in curve))

# a weaker correlation model narrows the gap
m = CovarianceModel(rho=0.6)
print("\nCg* at rho = 0.6:", {n: round(unified_coding_gain(catalog.get_transform(n).c_hat, m), 4)
                            for n in ("DCT", "T1")})
