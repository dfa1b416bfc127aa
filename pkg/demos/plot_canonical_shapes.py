"""
Shapes of the conformal range across the canonical families
===========================================================

Walk the canonical representatives, print the characteristic values and the
named shape, and write one SVG per shape.
"""
import math
from pathlib import Path

import numpy as np

from shellrange.algebra import L_pm, L_t, S_beta, invariants
from shellrange.confrange import cr_shape
from shellrange.svg import render

OUT = Path("demo_svg")
OUT.mkdir(exist_ok=True)

cases = {
    "zero": np.zeros((2, 2)),
    "point": L_pm(math.pi / 2, 0, -1),
    "segment": L_pm(math.pi / 3, 0, 1),
    "line": L_t(0),
    "band": L_t(1),
    "circle": L_pm(math.pi / 2, 1, 1),
    "ellipse": L_pm(math.pi / 3, 1, 1),
    "horodisk": S_beta(0),
    "parabola": S_beta(math.pi / 3),
    "half_line": S_beta(math.pi / 2),
}

###############################################################################
# The characteristic values are where the canonical conic meets the axes of
# the disk model.

for name, A in cases.items():
    sh = cr_shape(A)
    c1, c2 = sh.characteristic_ckb
    print(f"{name:10s} {invariants(A).cls.value:17s} {sh.kind.value:21s} ({c1:.4f}, {c2:.4f})")

###############################################################################
# Pictures in the disk model.

for name, A in cases.items():
    (OUT / f"{name}.svg").write_text(render(A, "CR", "ckb", 720, 0))
print("wrote", len(cases), "files to", OUT)
