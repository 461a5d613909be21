"""
Greedy derivation of 8-point approximations over the entry set {0, +-1}.

Rows 1 and 5 are fixed to their sign patterns; the other six rows are placed
in every one of the 720 orders, each row taking the feasible integer vector
closest in angle to the matching DCT row. Two distinct matrices come out.
"""

import numpy as np

from greedydct import catalog
from greedydct.search import P1, PermutationSequence, build_search_space, derive_all, greedy_solve
from greedydct.linalg import exact_dct_matrix

space = build_search_space(P1)
d = derive_all(space, (1, 5))
print(f"{d.sequences} orders, {len(d.infeasible)} infeasible, {len(d.results)} distinct matrices")
for res in d.results:
    label = next((n for n in ("RDCT", "T4") if np.array_equal(res.matrix, getattr(catalog, n))), "new")
    print(f"\n{label}: produced by {res.multiplicity} orders, first {res.producing_orders[0].order}")
    print(res.matrix)

# one order by hand: rows placed top to bottom
C = exact_dct_matrix(8)
t = greedy_solve(C, PermutationSequence(tuple(range(1, 9))), space)
print("\norder 1..8 gives the RDCT:", np.array_equal(t, catalog.RDCT))
