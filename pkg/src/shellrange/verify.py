"""Identity suite run by ``shellrange verify``: every check compares a closed
form with an independently computed counterpart and reports the residual."""
import math
from typing import List, NamedTuple

import numpy as np

from .algebra import (
    as_matrix, canonical_triangular, eigenvalues, five_data, invariants, norm_conorm,
    trace_det,
)
from .confrange import (
    QR0_CKBP, confrange_G, confrange_Q, cr_eigen_ratios, cr_invariants, cr_triple,
)
from .numrange import numrange_G, numrange_Q, numrange_focal_roots
from .oracle import envelope_standard, project_quadratic, sample_cr, sample_shell
from .quadric import adjugate, form
from .shell import shell_G, shell_Q, shell_eigen_ratios

DEFAULT_TOL = 1e-9


class Check(NamedTuple):
    name: str
    residual: float
    tol: float

    @property
    def passed(self) -> bool:
        return bool(self.residual <= self.tol)


def _rel(got, want) -> float:
    got, want = np.asarray(got, dtype=float), np.asarray(want, dtype=float)
    return float(np.max(np.abs(got - want)) / max(1.0, float(np.max(np.abs(want)))))


def random_matrices(n: int, seed: int) -> np.ndarray:
    """n matrices with iid standard complex Gaussian entries."""
    rng = np.random.Generator(np.random.Philox(seed))
    return (rng.standard_normal((n, 2, 2)) + 1j * rng.standard_normal((n, 2, 2))) / math.sqrt(2)


def check_matrix(A, tol: float = DEFAULT_TOL, n_samples: int = 500, seed: int = 0) -> List[Check]:
    A = as_matrix(A)
    inv = invariants(A)
    U, aD, E = inv.U, inv.absD, inv.E
    gap = U * U - aD * aD
    out = []

    Q, G = shell_Q(A), shell_G(A)
    a, b = shell_eigen_ratios(A)
    out.append(Check("shell eigenvalues of Q0^-1 Q",
                     _rel(a, sorted([2 * (U - aD)] * 2 + [2 * (U + aD)] * 2)), tol))
    out.append(Check("shell eigenvalues of G Q0",
                     _rel(b, sorted([-(U + aD) / 2] * 2 + [-(U - aD) / 2] * 2)), tol))
    out.append(Check("shell Q G = -(U^2-|D|^2) I", _rel(Q @ G, -gap * np.eye(4)), tol))
    out.append(Check("shell det Q", _rel(np.linalg.det(Q), -4 * gap ** 2), tol))

    GW = numrange_G(A)
    out.append(Check("Q^W = -4 adj G^W", _rel(numrange_Q(A), -4 * adjugate(GW)), tol))
    tr, det = trace_det(A)
    if abs(GW[2, 2]) > 0:
        f = sorted(numrange_focal_roots(GW), key=lambda z: (z.real, z.imag))
        e = sorted(eigenvalues(A), key=lambda z: (z.real, z.imag))
        out.append(Check("foci of G^W are the eigenvalues",
                         max(abs(f[0] - e[0]), abs(f[1] - e[1])) / max(1.0, abs(tr)), 1e-6))

    QR, GR = confrange_Q(A), confrange_G(A)
    out.append(Check("Q^R = -4 adj G^R", _rel(QR, -4 * adjugate(GR)), tol))
    dG = np.linalg.det(GR)
    out.append(Check("adj Q^R = 16 det G^R G^R", _rel(adjugate(QR), 16 * dG * GR), tol))
    out.append(Check("det G^R product form", _rel(dG, 0.5 * (U - aD + 2 * E) * gap), tol))
    t1, t2, t3 = cr_triple(A)
    a, b = cr_eigen_ratios(A)
    out.append(Check("CR eigenvalues of G^R Q^R0", _rel(a, sorted([-t1 / 2, -t2 / 2, -t3 / 2])), tol))
    out.append(Check("CR eigenvalues of G^R0 Q^R",
                     _rel(b, sorted([4 * t1 * t2, 4 * t1 * t3, 4 * t2 * t3])), tol))
    ci = cr_invariants(A)
    out.append(Check("U1, U2, U3 symmetric functions",
                     _rel([ci.U1, ci.U2, ci.U3],
                          [2 * (t1 + t2 + t3), 4 * (t1 * t2 + t1 * t3 + t2 * t3), 8 * t1 * t2 * t3]),
                     tol))

    k = five_data(A).tr_gram - 2 * det.real
    if abs(k) > 1e-12:
        out.append(Check("shell projected along y is Q^R / k",
                         _rel(project_quadratic(Q, 1, "eliminate"), QR / k), tol))
    if abs(Q[2, 2]) > 1e-12:
        out.append(Check("shell projected along z is Q^W",
                         _rel(project_quadratic(Q, 2, "eliminate"), numrange_Q(A)), tol))

    nrm, con = norm_conorm(A)
    out.append(Check("norm * conorm = |det A|", abs(nrm * con - abs(det)) / max(1.0, abs(det)), 1e-12))
    T, _ = canonical_triangular(A)
    out.append(Check("canonical triangular form keeps the five data",
                     _rel(five_data(T.matrix()), five_data(A)), tol))

    pts = sample_shell(A, n_samples, seed).points
    out.append(Check("shell samples inside", max(0.0, float(np.max(form(Q, pts))))
                     / max(1.0, np.abs(Q).max()), tol))
    pts = sample_cr(A, n_samples, seed).points
    out.append(Check("CR samples inside", max(0.0, float(np.max(form(QR, pts))))
                     / max(1.0, np.abs(QR).max()), tol))
    if not inv.normal:
        env = envelope_standard(A, np.linspace(-3, 3, 13))
        out.append(Check("standard envelope on the CR conic",
                         float(np.max(np.abs(form(QR, env)))) / max(1.0, np.abs(QR).max()), 1e-8))
    return out


def verify_many(mats, tol: float = DEFAULT_TOL, seed: int = 0):
    """Worst residual per check name over a batch of matrices."""
    worst = {}
    for A in mats:
        for c in check_matrix(A, tol, seed=seed):
            if c.name not in worst or c.residual > worst[c.name].residual:
                worst[c.name] = c
    return list(worst.values())
