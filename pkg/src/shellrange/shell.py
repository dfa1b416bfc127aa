"""Davis-Wielandt shell: point and dual quadrics, pencils, block forms,
Moebius transport and hyperbolic distance queries.

Quadrics are 4x4 arrays acting on homogeneous coordinates (x, y, z, 1).
"""
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List

import numpy as np

from .algebra import (
    CLASS_TOL, MobiusMap, as_matrix, eigenvalues, five_data, invariants, norm_conorm,
)
from .models import Model, as_model, convert

# CKBP homogeneous coordinates = T @ CKB homogeneous coordinates
T4 = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 1], [0, 0, -1, 1]], dtype=float)
T4_INV = np.linalg.inv(T4)

Q0_CKBP = np.array([[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -0.5], [0, 0, -0.5, 0]])
G0_CKBP = np.linalg.inv(Q0_CKBP)


class ShellKind(str, Enum):
    POINT = "PointCase"
    LINE = "LineCase"
    HOROSPHERE = "Horosphere"
    TUBE = "Tube"


@dataclass(frozen=True)
class ShellGeometry:
    kind: ShellKind
    asymptotic_points: List[complex]
    radius: float
    center: np.ndarray = field(repr=False)


def _to_model_Q(M, model):
    model = as_model(model)
    if model is Model.CKBP:
        return M
    if model is Model.CKB:
        return T4.T @ M @ T4
    raise ValueError("quadrics are available in the CKBP and CKB models")


def _to_model_G(M, model):
    model = as_model(model)
    if model is Model.CKBP:
        return M
    if model is Model.CKB:
        return T4_INV @ M @ T4_INV.T
    raise ValueError("quadrics are available in the CKBP and CKB models")


def _parts(A):
    fd = five_data(A)
    tr = complex(fd.re_tr, fd.im_tr)
    det = complex(fd.re_det, fd.im_det)
    return tr, det, fd.tr_gram, det * tr.conjugate()


def shell_Q(A, model=Model.CKBP) -> np.ndarray:
    """Point quadric of the shell; the form is negative inside."""
    tr, det, Z, dt = _parts(A)
    s = abs(tr) ** 2
    M = np.array([
        [Z + 2 * det.real, 2 * det.imag, -tr.real, -dt.real],
        [2 * det.imag, Z - 2 * det.real, -tr.imag, -dt.imag],
        [-tr.real, -tr.imag, 1.0, (s - Z) / 2],
        [-dt.real, -dt.imag, (s - Z) / 2, abs(det) ** 2],
    ])
    return _to_model_Q(M, model)


def shell_G(A, model=Model.CKBP) -> np.ndarray:
    """Dual (tangent-plane) quadric of the shell, normalised so G[3, 3] = 1."""
    tr, det, Z, dt = _parts(A)
    s = abs(tr) ** 2
    M = np.array([
        [(s - Z + 2 * det.real) / 4, det.imag / 2, dt.real / 2, tr.real / 2],
        [det.imag / 2, (s - Z - 2 * det.real) / 4, dt.imag / 2, tr.imag / 2],
        [dt.real / 2, dt.imag / 2, abs(det) ** 2, Z / 2],
        [tr.real / 2, tr.imag / 2, Z / 2, 1.0],
    ])
    return _to_model_G(M, model)


def base_Q(model=Model.CKBP) -> np.ndarray:
    """Q0: the asymptotic sphere."""
    return _to_model_Q(Q0_CKBP.copy(), model)


def base_G(model=Model.CKBP) -> np.ndarray:
    return _to_model_G(G0_CKBP.copy(), model)


def _Q_spec(A):
    tr, det, _, dt = _parts(A)
    s = abs(tr) ** 2
    return np.array([
        [s / 2 + 2 * det.real, 2 * det.imag, -tr.real, -dt.real],
        [2 * det.imag, s / 2 - 2 * det.real, -tr.imag, -dt.imag],
        [-tr.real, -tr.imag, 1.0, s / 4],
        [-dt.real, -dt.imag, s / 4, abs(det) ** 2],
    ])


def _G_spec(A):
    tr, det, _, dt = _parts(A)
    s = abs(tr) ** 2
    return np.array([
        [(s + 4 * det.real) / 8, det.imag / 2, dt.real / 2, tr.real / 2],
        [det.imag / 2, (s - 4 * det.real) / 8, dt.imag / 2, tr.imag / 2],
        [dt.real / 2, dt.imag / 2, abs(det) ** 2, s / 4],
        [tr.real / 2, tr.imag / 2, s / 4, 1.0],
    ])


def shell_Q_split(A, model=Model.CKBP):
    """(2U Q0, Qspec) with Q = 2U Q0 + Qspec; Qspec depends on tr and det only."""
    U = invariants(A).U
    return _to_model_Q(2 * U * Q0_CKBP, model), _to_model_Q(_Q_spec(A), model)


def shell_G_split(A, model=Model.CKBP):
    """(U (-G0/2), Gspec) with G = -U G0 / 2 + Gspec."""
    U = invariants(A).U
    return _to_model_G(-0.5 * U * G0_CKBP, model), _to_model_G(_G_spec(A), model)


def pencil_Q(A, lam: float, model=Model.CKBP) -> np.ndarray:
    """Member lam * 2 Q0 + Qspec of the shell pencil (lam = U gives the shell)."""
    return _to_model_Q(2 * lam * Q0_CKBP + _Q_spec(A), model)


def pencil_G(A, lam: float, model=Model.CKBP) -> np.ndarray:
    return _to_model_G(-0.5 * lam * G0_CKBP + _G_spec(A), model)


def shell_pencil_members(A, model=Model.CKBP):
    """(axis, biplanar): the singular pencil members at U = |D| and U = -|D|."""
    absD = invariants(A).absD
    return pencil_Q(A, absD, model), pencil_Q(A, -absD, model)


def shell_eigen_ratios(A, model=Model.CKBP, tol: float = 1e-7):
    """Eigenvalues of Q0^-1 Q and of G Q0, sorted and paired into doubles.

    The closed forms are {2(U-|D|), 2(U+|D|)} and {-(U-|D|)/2, -(U+|D|)/2},
    each with multiplicity two.
    """
    Q, G = shell_Q(A, model), shell_G(A, model)
    Q0, G0 = base_Q(model), base_G(model)
    U = invariants(A).U
    out = []
    for M in (G0 @ Q, G @ Q0):
        ev = np.sort(np.linalg.eigvals(M).real)
        # symmetrise the two expected double eigenvalues
        for i in (0, 2):
            if abs(ev[i] - ev[i + 1]) <= tol * max(1.0, U):
                ev[i] = ev[i + 1] = (ev[i] + ev[i + 1]) / 2
        out.append(ev)
    return out[0], out[1]


def brute_force_S(A) -> np.ndarray:
    """Affine map taking (2Re z1 z2', 2Im z1 z2', |z1|^2 - |z2|^2, 1) on the unit
    sphere to the shell point of x = (z1, z2)."""
    A = as_matrix(A)
    a, b, c, d = A.ravel()
    ab = a.conjugate() * b + c.conjugate() * d
    sq = np.abs(A.ravel()) ** 2
    return np.array([
        [(b + c).real / 2, (b - c).imag / 2, (a - d).real / 2, (a + d).real / 2],
        [(b + c).imag / 2, (c - b).real / 2, (a - d).imag / 2, (a + d).imag / 2],
        [ab.real, ab.imag, (sq[0] - sq[1] + sq[2] - sq[3]) / 2, sq.sum() / 2],
        [0.0, 0.0, 0.0, 1.0],
    ])


def shell_center(A, model=Model.CKBP) -> np.ndarray:
    fd = five_data(A)
    c = np.array([fd.re_tr / 2, fd.im_tr / 2, fd.tr_gram / 2])
    return convert(c, Model.CKBP, model)


def vertical_diameter(A):
    """(z_min, z_max) in CKBP of the shell along the vertical through its center."""
    inv = invariants(A)
    h = math.sqrt(max(inv.U ** 2 - inv.absD ** 2, 0.0))
    Z = five_data(A).tr_gram
    return Z / 2 - h, Z / 2 + h


def core_matrices(A):
    """(Q^C, G^C, B) with Q = B^-T diag(Q^C, 1, -(U^2-|D|^2)) B^-1 in CKBP."""
    tr, det, Z, _ = _parts(A)
    q11 = Z - tr.real ** 2 + 2 * det.real
    q12 = -tr.real * tr.imag + 2 * det.imag
    q22 = Z - tr.imag ** 2 - 2 * det.real
    QC = np.array([[q11, q12], [q12, q22]])
    GC = -0.25 * np.array([[q22, -q12], [-q12, q11]])
    B = np.array([
        [1, 0, 0, tr.real / 2],
        [0, 1, 0, tr.imag / 2],
        [tr.real, tr.imag, 1, Z / 2],
        [0, 0, 0, 1],
    ], dtype=float)
    return QC, GC, B


def shell_radius(A, tol: float = CLASS_TOL) -> float:
    """Radius of the tube, (1/2) arcosh(U/|D|); inf for non-normal parabolic,
    0 for normal matrices."""
    inv = invariants(A, tol)
    scale = max(1.0, inv.U)
    if inv.U - inv.absD <= tol * scale:
        return 0.0
    if inv.absD <= tol * scale:
        return math.inf
    return 0.5 * math.acosh(max(inv.U / inv.absD, 1.0))


def shell_geometry(A, tol: float = CLASS_TOL) -> ShellGeometry:
    inv = invariants(A, tol)
    scale = max(1.0, inv.U)
    normal = inv.U - inv.absD <= tol * scale
    parabolic = inv.absD <= tol * scale
    lam1, lam2 = eigenvalues(A)
    if normal:
        kind = ShellKind.POINT if parabolic else ShellKind.LINE
    else:
        kind = ShellKind.HOROSPHERE if parabolic else ShellKind.TUBE
    pts = [lam1] if parabolic else [lam1, lam2]
    return ShellGeometry(kind, pts, shell_radius(A, tol), shell_center(A))


def _spec_quotient(A, p, model):
    """Qspec(p) / (-2 Q0(p)) at an interior point p."""
    v = np.append(convert(p, model, Model.CKBP), 1.0)
    star = v @ Q0_CKBP @ v
    return (v @ _Q_spec(A) @ v) / (-2 * star)


def shell_axis_distance(A, p, model=Model.CKBP) -> float:
    """Distance from p to the axis of the tube; inf for parabolic A."""
    absD = invariants(A).absD
    if absD == 0:
        return math.inf
    q = _spec_quotient(A, p, model) / absD
    return 0.5 * math.acosh(max(q, 1.0))


def _signed(q, U, absD):
    arg = (math.sqrt(max(q * q - absD * absD, 0.0))
           - math.sqrt(max(U * U - absD * absD, 0.0))) / (q + U)
    # +-1 means the shell or the point is asymptotic
    if abs(arg) >= 1:
        return math.copysign(math.inf, arg)
    return math.atanh(arg)


def shell_signed_distance(A, p, model=Model.CKBP) -> float:
    """Signed distance of p from the shell surface; negative inside."""
    inv = invariants(A)
    return _signed(_spec_quotient(A, p, model), inv.U, inv.absD)


def shell_distances(A):
    """(dis_O, dis_inf, dis_norm): signed distance of the origin from the shell,
    horospherical distance of the point at infinity and norm distance."""
    inv = invariants(A)
    fd = five_data(A)
    O_A = (fd.re_det ** 2 + fd.im_det ** 2) / 2 + (fd.re_tr ** 2 + fd.im_tr ** 2) / 4 + 0.5
    dis_O = _signed(O_A, inv.U, inv.absD)
    top = inv.U + math.sqrt(max(inv.U ** 2 - inv.absD ** 2, 0.0))
    dis_inf = -0.5 * math.log(top) if top > 0 else math.inf
    nrm = norm_conorm(A)[0]
    dis_norm = -math.log(nrm) if nrm > 0 else math.inf
    return dis_O, dis_inf, dis_norm


def mobius_projective_rep(f: MobiusMap, model=Model.CKBP) -> np.ndarray:
    """Linear action of f on (Re l, Im l, |l|^2, 1), with det 1.

    Rows expand Re and Im of (a l + b)(c l + d)', then |a l + b|^2 and
    |c l + d|^2, in the coordinates (Re l, Im l, |l|^2, 1).
    """
    a, b, c, d = f.a, f.b, f.c, f.d
    p = a * d.conjugate() + b * c.conjugate()
    m = a * d.conjugate() - b * c.conjugate()
    ac, bd = a * c.conjugate(), b * d.conjugate()
    ab, cd = a * b.conjugate(), c * d.conjugate()
    R = np.array([
        [p.real, -m.imag, ac.real, bd.real],
        [p.imag, m.real, ac.imag, bd.imag],
        [2 * ab.real, -2 * ab.imag, abs(a) ** 2, abs(b) ** 2],
        [2 * cd.real, -2 * cd.imag, abs(c) ** 2, abs(d) ** 2],
    ]) / abs(f.det)
    model = as_model(model)
    if model is Model.CKB:
        return T4_INV @ R @ T4
    return R
