"""
Multiplierless plans: the 8-point T1 plan, its exactness on random integer
input and its 16- and 32-point scaled extensions.
"""

import numpy as np

from greedydct import catalog
from greedydct.fast import apply_plan, plan_matrix, scaled_plan, scaled_transform, t1_fast_plan, verify_factorization

plan = t1_fast_plan()
print(plan.text())
adds, shifts = plan.declared_cost
print(f"T1: {adds} additions, {shifts} shifts, {plan.bits_required(255)} bits for 8-bit input")

rng = np.random.default_rng(7)
x = rng.integers(-255, 256, size=(8, 10_000))
print("matches T1 @ x on 10000 vectors:", np.array_equal(apply_plan(plan, x), catalog.T1 @ x))
check = verify_factorization()
print("sparse factors multiply to T1:", check.exact)

for n in (16, 32):
    p = scaled_plan(n)
    print(f"{n}-point: cost {p.declared_cost}, plan matrix equals scaled matrix:",
          np.array_equal(plan_matrix(p), scaled_transform(n).t))
