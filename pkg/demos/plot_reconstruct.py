"""
Recovering matrices from a conformal range
==========================================

A conic determines the matrix only up to a finite ambiguity that depends on
the spectral class. Reconstruct one representative per class and count the
candidates.
"""
import math

import numpy as np

from shellrange.algebra import L_pm, L_t, S_beta, invariants, reduced_five_data
from shellrange.confrange import confrange_Q, cr_reconstruct

reps = [
    L_t(1),
    np.array([[0, 1], [0, 0]]),
    S_beta(math.pi / 4),
    L_pm(math.pi / 2, 1, -1),
    L_pm(math.pi / 2, 1, 1),
    L_pm(math.pi / 3, 1, 1),
    L_pm(math.pi / 3, 1, -1),
]

###############################################################################
# Every candidate has the same reduced five data as the input.

for A in reps:
    cands = cr_reconstruct(confrange_Q(A))
    err = max(np.abs(np.subtract(reduced_five_data(T), reduced_five_data(A))).max() for T in cands)
    print(f"{invariants(A).cls.value:17s} {len(cands)} candidates, max error {err:.1e}")

###############################################################################
# The four candidates of a quasi-hyperbolic matrix differ in their eigenvalues.

for T in cr_reconstruct(confrange_Q(L_pm(math.pi / 3, 1, 1))):
    print(np.round(np.diag(T), 6), round(T[0, 1].real, 6))
