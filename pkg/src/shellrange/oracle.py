"""Independent ground truth: sampled shells and ranges, the three envelope
constructions of the conformal range boundary, and projections of quadrics.

Nothing here reads the closed-form quadrics except the closed-form envelope
variants, which exist to be compared with their direct counterparts.
"""
import math
from typing import NamedTuple

import numpy as np
from scipy.spatial import cKDTree

from .algebra import as_matrix, eigenvalues, invariants, reduced_five_data
from .errors import SingularPivot, SingularRotation
from .models import Model, as_model, convert, iota2

DEFAULT_GRID = 720


class SampleCloud(NamedTuple):
    points: np.ndarray
    seed: int
    count: int


# sampling

def sample_unit_vectors(n: int, seed: int, start: int = 0) -> np.ndarray:
    """Uniform unit vectors of C^2, shape (n, 2).

    Vector i is built from the four 64-bit words of Philox counter i, so any
    split of [start, start + n) into chunks reproduces the same vectors.
    """
    if n < 0:
        raise ValueError("n must be non-negative")
    bg = np.random.Philox(key=seed)
    bg.advance(start)
    raw = bg.random_raw(4 * n).reshape(n, 4)
    u = ((raw >> np.uint64(11)).astype(float) + 0.5) * 2.0 ** -53
    # Box-Muller on two uniform pairs gives four independent normals
    r1, r2 = np.sqrt(-2 * np.log(u[:, 0])), np.sqrt(-2 * np.log(u[:, 2]))
    t1, t2 = 2 * np.pi * u[:, 1], 2 * np.pi * u[:, 3]
    x = np.stack([r1 * (np.cos(t1) + 1j * np.sin(t1)),
                  r2 * (np.cos(t2) + 1j * np.sin(t2))], axis=1)
    return x / np.linalg.norm(x, axis=1, keepdims=True)


def _moments(A, n, seed, start):
    A = as_matrix(A)
    x = sample_unit_vectors(n, seed, start)
    Ax = x @ A.T
    q = np.sum(Ax * x.conj(), axis=1)
    return q, np.sum(np.abs(Ax) ** 2, axis=1)


def sample_shell(A, n: int, seed: int, model=Model.CKBP, start: int = 0) -> SampleCloud:
    """Points (Re<Ax,x>, Im<Ax,x>, |Ax|^2) of the shell, converted to ``model``."""
    q, nrm = _moments(A, n, seed, start)
    pts = np.stack([q.real, q.imag, nrm], axis=1)
    return SampleCloud(convert(pts, Model.CKBP, model), seed, n)


def sample_numrange(A, n: int, seed: int, start: int = 0) -> SampleCloud:
    """Points (Re<Ax,x>, Im<Ax,x>) of the numerical range."""
    q, _ = _moments(A, n, seed, start)
    return SampleCloud(np.stack([q.real, q.imag], axis=1), seed, n)


def sample_cr(A, n: int, seed: int, model=Model.CKBP, start: int = 0) -> SampleCloud:
    """Points (Re<Ax,x>, |Ax|^2) of the conformal range, converted to ``model``."""
    q, nrm = _moments(A, n, seed, start)
    pts = np.stack([q.real, nrm], axis=1)
    return SampleCloud(convert(pts, Model.CKBP, model), seed, n)


def max_gap(boundary, cloud) -> float:
    """Largest distance from a boundary point to its nearest cloud point."""
    d, _ = cKDTree(np.asarray(cloud)).query(np.asarray(boundary))
    return float(np.max(d))


# grids

def default_lambda_grid(n: int = DEFAULT_GRID, bound: float = 10.0) -> np.ndarray:
    """n values in [-bound, bound], tan-warped so they thin out at the ends."""
    return np.tan(np.linspace(-math.atan(bound), math.atan(bound), n))


def default_omega_grid(n: int = DEFAULT_GRID) -> np.ndarray:
    return np.linspace(0, 2 * np.pi, n, endpoint=False)


# standard envelope, CKBP

def _spectral_block(A):
    V, W, X, Y, Z = reduced_five_data(A)
    return np.array([[Z * Z - 4 * Y, 2 * X - V * Z], [2 * X - V * Z, V * V - W + Z]])


def norm_sq_shifted(A, lam, branch: int = 1):
    """Closed form of ||A - lam I||^2 (branch +1) or the squared co-norm (-1)."""
    V, _, _, _, Z = reduced_five_data(A)
    M = _spectral_block(A)
    lam = np.asarray(lam, dtype=float)
    v = np.stack([np.ones_like(lam), 2 * lam], axis=-1)
    r = np.sqrt(np.maximum(np.einsum("...i,ij,...j->...", v, M, v), 0.0))
    return lam * lam - lam * V + Z / 2 + branch * r / 2


def envelope_standard(A, lam=None, branch: int = 1, method: str = "direct") -> np.ndarray:
    """Boundary points (x, z) of CR(A) in CKBP, one per value of lam.

    The curve is (lam - N'/2, lam^2 - lam N' + N) with N = ||A - lam I||^2
    (branch +1) or the squared co-norm (branch -1). ``method="direct"`` takes
    N from an SVD and N' from the singular vectors; ``"closed"`` uses the
    reduced five data, and also accepts lam = +-inf.
    """
    A = as_matrix(A)
    lam = default_lambda_grid() if lam is None else np.atleast_1d(np.asarray(lam, dtype=float))
    if method == "closed":
        V, _, _, _, Z = reduced_five_data(A)
        M = _spectral_block(A)
        finite = np.isfinite(lam)
        v = np.stack([np.ones_like(lam), 2 * np.where(finite, lam, 0.0)], axis=-1)
        # direction of (1, 2 lam) at lam = +-inf
        v = np.where(finite[:, None], v, np.stack([np.zeros_like(lam), np.sign(lam)], axis=-1))
        Mv = v @ M
        r = np.sqrt(np.einsum("ni,ni->n", Mv, v))
        JMv = np.stack([-Mv[:, 1], Mv[:, 0]], axis=-1)
        return 0.5 * (np.array([V, Z]) + branch * JMv / r[:, None])
    if method != "direct":
        raise ValueError("method must be 'direct' or 'closed'")
    out = np.empty((lam.size, 2))
    idx = 0 if branch > 0 else -1
    for k, l in enumerate(lam):
        u, s, vh = np.linalg.svd(A - l * np.eye(2))
        sig = s[idx]
        dsig = -np.real(np.vdot(u[:, idx], vh[idx].conj()))
        N, dN = sig * sig, 2 * sig * dsig
        out[k] = (l - dN / 2, l * l - l * dN + N)
    return out


def standard_envelope_quadric(A) -> np.ndarray:
    """CKBP conic traced by the standard envelope, assembled from its centre
    and the 2x2 block."""
    V, _, _, _, Z = reduced_five_data(A)
    M = _spectral_block(A)
    T = np.array([[1, 0, V / 2], [0, 1, Z / 2], [0, 0, 1]])
    core = np.zeros((3, 3))
    core[:2, :2] = M
    core[2, 2] = -np.linalg.det(M) / 4
    Ti = np.linalg.inv(T)
    return Ti.T @ core @ Ti


# rotational envelope, CKB

def rotational_S(A) -> np.ndarray:
    V, W, X, Y, Z = reduced_five_data(A)
    off = -2 * Y * V - V * Z + X * Z + 2 * X
    return np.array([
        [Z * Z - 4 * Y, off],
        [off, V * V + 2 * V * X - W * Y - W * Z + X * X + Y * Z + Z * Z - W + Z],
    ])


def rotated(A, omega: float, rtol: float = 1e-12) -> np.ndarray:
    """(cos(w/2) A - sin(w/2) I)(sin(w/2) A + cos(w/2) I)^-1."""
    A = as_matrix(A)
    c, s = math.cos(omega / 2), math.sin(omega / 2)
    den = s * A + c * np.eye(2)
    sv = np.linalg.svd(den, compute_uv=False)
    if sv[-1] <= rtol * max(1.0, sv[0]):
        raise SingularRotation(f"rotation at omega={omega!r} hits the spectrum")
    return (c * A - s * np.eye(2)) @ np.linalg.inv(den)


def envelope_rotational(A, omega=None, method: str = "direct", skip_singular: bool = True,
                        return_omega: bool = False):
    """Boundary points (x, z) of CR(A) in CKB, one per angle omega.

    ``method="direct"`` uses N = ||rotated(A, w)||^2 from an SVD and dN/dw
    from the derivative of the rotated matrix, -(I + B^2)/2; angles where the
    rotation is singular are dropped (or raise, if ``skip_singular`` is False);
    ``return_omega`` also returns the angles actually used.
    """
    A = as_matrix(A)
    omega = default_omega_grid() if omega is None else np.atleast_1d(np.asarray(omega, dtype=float))
    if method == "closed":
        V, _, X, Y, Z = reduced_five_data(A)
        S = rotational_S(A)
        w = np.stack([np.cos(omega), np.sin(omega)], axis=-1)
        Sw = w @ S
        r = np.sqrt(np.einsum("ni,ni->n", Sw, w))
        JSw = np.stack([-Sw[:, 1], Sw[:, 0]], axis=-1)
        pts = (np.array([V + X, Y - 1]) + JSw / r[:, None]) / (1 + Y + Z)
        return (pts, omega) if return_omega else pts
    if method != "direct":
        raise ValueError("method must be 'direct' or 'closed'")
    pts, used = [], []
    for om in omega:
        try:
            B = rotated(A, om)
        except SingularRotation:
            if skip_singular:
                continue
            raise
        used.append(om)
        u, s, vh = np.linalg.svd(B)
        dB = -0.5 * (np.eye(2) + B @ B)
        N = s[0] ** 2
        dN = 2 * s[0] * np.real(np.vdot(u[:, 0], dB @ vh[0].conj()))
        w = np.array([math.cos(om), math.sin(om)])
        R = np.array([[-2 * dN, 1 - N * N], [-1 + N * N, -2 * dN]])
        pts.append(R @ w / (1 + N) ** 2)
    pts = np.array(pts).reshape(-1, 2)
    return (pts, np.array(used)) if return_omega else pts


def rotational_envelope_quadric(A) -> np.ndarray:
    """CKB conic traced by the rotational envelope."""
    V, _, X, Y, Z = reduced_five_data(A)
    S = rotational_S(A)
    k = 1 + Y + Z
    T = np.array([[1, 0, (V + X) / k], [0, 1, (Y - 1) / k], [0, 0, 1]])
    core = np.zeros((3, 3))
    core[:2, :2] = S
    core[2, 2] = -np.linalg.det(S) / k ** 2
    Ti = np.linalg.inv(T)
    return Ti.T @ core @ Ti


# algebraic envelope

def _F(A, lam, nu):
    """det(nu I - (A - lam I)^*(A - lam I)) evaluated numerically."""
    B = as_matrix(A) - lam * np.eye(2)
    return np.linalg.det(nu * np.eye(2) - B.conj().T @ B).real


def algebraic_coefficients(A, p, method: str = "interpolate"):
    """Coefficients (a2, a1, a0) in lam of F(lam, lam^2 - 2 x lam + z), p = (x, z) CKBP.

    The substitution cancels the quartic and cubic terms, so three exact
    evaluations determine the polynomial. ``method="closed"`` uses the
    expanded coefficients in the reduced five data.
    """
    x, z = np.asarray(p, dtype=float)
    if method == "closed":
        V, W, X, Y, Z = reduced_five_data(A)
        return (4 * x * x - 4 * V * x + W - Z,
                -4 * x * z + 2 * Z * x + 2 * V * z - 2 * X,
                z * z - Z * z + Y)
    if method != "interpolate":
        raise ValueError("method must be 'interpolate' or 'closed'")
    g = [_F(A, l, l * l - 2 * x * l + z) for l in (-1.0, 0.0, 1.0)]
    a0 = g[1]
    a2 = (g[0] + g[2]) / 2 - a0
    a1 = (g[2] - g[0]) / 2
    return a2, a1, a0


def envelope_algebraic(A, p, method: str = "interpolate") -> float:
    """Discriminant in lam of F(lam, lam^2 - 2 x lam + z) at the CKBP point p.

    Zero on the boundary of CR(A) and negative inside.
    """
    a2, a1, a0 = algebraic_coefficients(A, p, method)
    return a1 * a1 - 4 * a2 * a0


# projections

PROJECTION_METHODS = ("inverse_restrict_inverse", "eliminate", "discriminant")


def project_quadratic(M, axis: int, method: str = "eliminate", rtol: float = 0.0) -> np.ndarray:
    """Project the quadric of M along coordinate ``axis`` (0-based).

    With c = M[axis, axis], b the rest of that column and A the rest of M:
    "eliminate" and "inverse_restrict_inverse" give A - b b^T / c,
    "discriminant" gives 4 b b^T - 4 c A = -4 c (A - b b^T / c).
    """
    M = np.asarray(M, dtype=float)
    k = M.shape[0]
    keep = [i for i in range(k) if i != axis]
    Ar = M[np.ix_(keep, keep)]
    b = M[keep, axis]
    c = M[axis, axis]
    if method == "discriminant":
        return 4 * np.outer(b, b) - 4 * c * Ar
    if abs(c) <= rtol * max(1.0, np.abs(M).max()) or c == 0:
        raise SingularPivot("pivot entry vanishes")
    if method == "eliminate":
        return Ar - np.outer(b, b) / c
    if method == "inverse_restrict_inverse":
        try:
            inv = np.linalg.inv(M)
            return np.linalg.inv(inv[np.ix_(keep, keep)])
        except np.linalg.LinAlgError as exc:
            raise SingularPivot("matrix is singular") from exc
    raise ValueError(f"unknown method {method!r}")


def boundary_points(A, which: str, n: int = DEFAULT_GRID, model=Model.CKBP) -> np.ndarray:
    """Boundary curve of W(A) (complex plane) or CR(A) (``model``) for plotting.

    Uses the support function of W and the standard envelope for CR, with
    both branches traversed as one loop. Normal matrices yield their segment.
    """
    A = as_matrix(A)
    model = as_model(model)
    if which == "W":
        if invariants(A).normal:
            l1, l2 = eigenvalues(A)
            z = l1 + np.linspace(0, 1, n) * (l2 - l1)
            return np.stack([z.real, z.imag], axis=-1)
        th = np.linspace(0, 2 * np.pi, n, endpoint=False)
        pts = []
        for t in th:
            H = (np.exp(-1j * t) * A + np.exp(1j * t) * A.conj().T) / 2
            w, v = np.linalg.eigh(H)
            x = v[:, -1]
            q = np.vdot(x, A @ x)
            pts.append((q.real, q.imag))
        return np.array(pts)
    if which == "CR":
        M = _spectral_block(A)
        if np.linalg.eigvalsh(M)[0] <= 1e-12 * max(1.0, np.abs(M).max()):
            # normal: the range is the segment between the eigenpoints
            l1, l2 = eigenvalues(A)
            s = np.linspace(0, 1, n)[:, None]
            seg = (1 - s) * iota2(l1) + s * iota2(l2)
            return convert(seg, Model.CKBP, model)
        # the two branches join into one ellipse-like loop, E(u) = (c + J M u / |u|_M) / 2
        V, _, _, _, Z = reduced_five_data(A)
        th = np.linspace(0, 2 * np.pi, n, endpoint=False)
        u = np.stack([np.cos(th), np.sin(th)], axis=-1)
        Mu = u @ M
        r = np.sqrt(np.einsum("ni,ni->n", Mu, u))
        pts = 0.5 * (np.array([V, Z]) + np.stack([-Mu[:, 1], Mu[:, 0]], axis=-1) / r[:, None])
        if model is Model.PH:
            raise ValueError("CR boundaries are drawn in CKBP or CKB")
        return convert(pts, Model.CKBP, model)
    raise ValueError("which must be 'W' or 'CR'")
