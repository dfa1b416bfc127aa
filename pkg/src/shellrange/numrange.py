"""Numerical range W(A) of a 2x2 matrix as a conic in the plane (x, y, 1)."""
import math
from enum import Enum
from typing import NamedTuple

import numpy as np

from .algebra import CLASS_TOL, eigenvalues, five_data, invariants, principal_sqrt
from .errors import DegenerateFocalEquation
from .quadric import adjugate
from .shell import shell_G

_IDX = [0, 1, 3]


class EllipseKind(str, Enum):
    PROPER = "Proper"
    SEGMENT = "Segment"
    POINT = "Point"


class EllipseData(NamedTuple):
    foci: tuple
    major_semi: float
    minor_semi: float
    center: complex
    kind: EllipseKind


def numrange_G(A) -> np.ndarray:
    """Dual conic of W(A): the shell dual quadric restricted to x, y, w."""
    return shell_G(A)[np.ix_(_IDX, _IDX)]


def numrange_Q(A) -> np.ndarray:
    """Point conic of W(A), -4 adj G^W; the form is <= 0 on W(A)."""
    tr_re, tr_im, dr, di, Z = five_data(A)
    tr, det = complex(tr_re, tr_im), complex(dr, di)
    dt = det * tr.conjugate()
    g = (Z - abs(tr) ** 2) / 2
    q11 = Z - tr.real ** 2 + 2 * det.real
    q12 = -tr.real * tr.imag + 2 * det.imag
    q22 = Z - tr.imag ** 2 - 2 * det.real
    q13 = -tr.real * g - dt.real
    q23 = -tr.imag * g - dt.imag
    q33 = abs(det) ** 2 - g * g
    return np.array([[q11, q12, q13], [q12, q22, q23], [q13, q23, q33]])


def numrange_L(A) -> np.ndarray:
    """4x3 elimination matrix with L^T Q_shell L = Q^W."""
    tr_re, tr_im, _, _, Z = five_data(A)
    return np.array([
        [1, 0, 0],
        [0, 1, 0],
        [tr_re, tr_im, (Z - tr_re ** 2 - tr_im ** 2) / 2],
        [0, 0, 1],
    ], dtype=float)


def numrange_uhlig_blocks(A):
    """(Q^W0, G^W0, P) with Q^W = P^-T Q^W0 P^-1 and G^W = P G^W0 P^T.

    Q^W0 = diag(Q^C, -(U^2 - |D|^2)) and G^W0 = diag(-adj(Q^C)/4, 1).
    """
    inv = invariants(A)
    Q = numrange_Q(A)
    QC = Q[:2, :2]
    tr_re, tr_im = five_data(A)[:2]
    P = np.array([[1, 0, tr_re / 2], [0, 1, tr_im / 2], [0, 0, 1]], dtype=float)
    QW0 = np.zeros((3, 3))
    QW0[:2, :2] = QC
    QW0[2, 2] = -(inv.U ** 2 - inv.absD ** 2)
    GW0 = np.zeros((3, 3))
    GW0[:2, :2] = -0.25 * adjugate(QC)
    GW0[2, 2] = 1.0
    return QW0, GW0, P


def ellipse_data(A, tol: float = CLASS_TOL) -> EllipseData:
    """Foci, semi-axes and centre of the elliptical range."""
    inv = invariants(A, tol)
    l1, l2 = eigenvalues(A)
    major = math.sqrt((inv.U + inv.absD) / 2)
    minor = math.sqrt(max(inv.U - inv.absD, 0.0) / 2)
    scale = max(1.0, inv.U)
    if inv.U - inv.absD <= tol * scale:
        kind = EllipseKind.POINT if inv.absD <= tol * scale else EllipseKind.SEGMENT
        minor = 0.0
    else:
        kind = EllipseKind.PROPER
    return EllipseData((l1, l2), major, minor, (l1 + l2) / 2, kind)


def numrange_focal_roots(G):
    """Roots f of (1, i, -f)^T G (1, i, -f) = 0, the foci of a dual conic."""
    G = np.asarray(G, dtype=float)
    a = G[2, 2]
    b = -2 * complex(G[0, 2], G[1, 2])
    c = complex(G[0, 0] - G[1, 1], 2 * G[0, 1])
    if abs(a) <= 1e-14 * max(1.0, np.abs(G).max()):
        raise DegenerateFocalEquation("leading coefficient vanishes")
    r = principal_sqrt(b * b - 4 * a * c)
    return (-b + r) / (2 * a), (-b - r) / (2 * a)


def normal_numrange_G(lam1: complex, lam2: complex) -> np.ndarray:
    """Symmetrised outer product of (Re l_i, Im l_i, 1)."""
    u = np.array([lam1.real, lam1.imag, 1.0])
    v = np.array([lam2.real, lam2.imag, 1.0])
    return (np.outer(u, v) + np.outer(v, u)) / 2


def normal_numrange_Q(lam1: complex, lam2: complex) -> np.ndarray:
    """v v^T with v the cross product of (Re l_i, Im l_i, 1): the doubled line."""
    v = np.cross([lam1.real, lam1.imag, 1.0], [lam2.real, lam2.imag, 1.0])
    return np.outer(v, v)


def numrange_contains(A, z, rtol: float = 1e-9) -> bool:
    """Whether the point z lies in W(A), up to a relative tolerance."""
    z = complex(z)
    inv = invariants(A)
    if inv.U - inv.absD <= CLASS_TOL * max(1.0, inv.U):
        # the conic degenerates to a doubled line; test the segment directly
        l1, l2 = eigenvalues(A)
        d = l2 - l1
        tol = rtol * max(1.0, abs(l1), abs(l2))
        if abs(d) <= tol:
            return abs(z - l1) <= tol
        s = ((z - l1) * d.conjugate()).real / abs(d) ** 2
        return -rtol <= s <= 1 + rtol and abs(z - (l1 + s * d)) <= tol
    Q = numrange_Q(A)
    v = np.array([z.real, z.imag, 1.0])
    return v @ Q @ v <= rtol * max(1.0, np.abs(Q).max()) * (v @ v)
