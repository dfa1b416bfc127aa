"""
Shell, numerical range and conformal range of one matrix
========================================================

Build the three quadrics of ``A = [[1, 2], [0, -1]]``, check sampled points
against them and compare the envelope constructions of the conformal range.
"""
import numpy as np

from shellrange.algebra import L_t, invariants, norm_conorm
from shellrange.confrange import confrange_Q, cr_shape
from shellrange.models import convert
from shellrange.numrange import ellipse_data, numrange_Q
from shellrange.oracle import (
    envelope_rotational, envelope_standard, max_gap, sample_cr, sample_shell,
)
from shellrange.quadric import form
from shellrange.shell import shell_Q, shell_geometry

A = L_t(1)
inv = invariants(A)
print(f"U={inv.U}  |D|={inv.absD}  E={inv.E}  class={inv.cls.value}")

###############################################################################
# The shell is a tube around the geodesic joining the eigenvalues. Its radius
# is half the arcosh of U / |D|.

geo = shell_geometry(A)
print(geo.kind.value, geo.radius, 0.5 * np.arccosh(inv.U / inv.absD))

###############################################################################
# Sampled shell points satisfy the quadric, and the highest one sits at the
# squared operator norm.

Q = shell_Q(A)
pts = sample_shell(A, 20_000, seed=0).points
print("max form / |Q|:", form(Q, pts).max() / np.abs(Q).max())
print("top of shell:", pts[:, 2].max(), "norm^2:", norm_conorm(A)[0] ** 2)

###############################################################################
# The numerical range is the ellipse with foci at the eigenvalues.

e = ellipse_data(A)
print("foci", e.foci, "semi-axes", e.major_semi, e.minor_semi)
print(numrange_Q(A))

###############################################################################
# The conformal range is a distance band. The two envelope constructions trace
# the same conic.

QR = confrange_Q(A, "ckb")
std = convert(np.vstack([envelope_standard(A, branch=b) for b in (1, -1)]), "ckbp", "ckb")
rot = envelope_rotational(A)
print(cr_shape(A).kind.value)
print("residuals:", np.abs(form(QR, std)).max(), np.abs(form(QR, rot)).max())
print("cloud reaches the boundary within", max_gap(rot, sample_cr(A, 50_000, 1, "ckb").points))
