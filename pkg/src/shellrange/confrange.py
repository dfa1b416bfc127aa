"""Conformal range CR(A): the real Davis-Wielandt shell as a conic of the
hyperbolic plane, its invariants, shape, focal identities and the inverse
problem of recovering matrices from the conic.

Conics are 3x3 arrays acting on homogeneous coordinates (x, z, 1).
"""
import itertools
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, NamedTuple, Optional

import numpy as np

from .algebra import (
    CLASS_TOL, MobiusMap, SpectralClass, eigenvalues, invariants, reduced_five_data,
)
from .errors import (
    NotAConformalRangeQuadric, UnderdeterminedRealScalar, UndefinedForRealScalar,
    WrongSpectralClass,
)
from .models import (
    Model, as_model, convert, distance, distance_to_line, horocycle_distance, iota2,
)
from .quadric import form
from .shell import mobius_projective_rep, shell_distances

# CKBP homogeneous coordinates = T3 @ CKB homogeneous coordinates
T3 = np.array([[1, 0, 0], [0, 1, 1], [0, -1, 1]], dtype=float)
T3_INV = np.linalg.inv(T3)

QR0_CKBP = np.array([[1, 0, 0], [0, 0, -0.5], [0, -0.5, 0]])
GR0_CKBP = np.linalg.inv(QR0_CKBP)

_REAL_TYPES = (SpectralClass.REAL_ELLIPTIC, SpectralClass.REAL_PARABOLIC,
               SpectralClass.REAL_HYPERBOLIC)
_WITH_REAL_EIGENVALUE = (SpectralClass.REAL_PARABOLIC, SpectralClass.REAL_HYPERBOLIC,
                         SpectralClass.SEMI_REAL)


class ShapeKind(str, Enum):
    ASYMPTOTIC_POINT = "AsymptoticPoint"
    POINT = "HPoint"
    SEGMENT = "HSegment"
    LINE = "HLineDouble"
    CIRCLE_DISK = "HCircleDisk"
    ELLIPSE_DISK = "HEllipseDisk"
    HALF_LINE = "HalfLine"
    PARABOLA_DISK = "EllipticParabolaDisk"
    BAND = "DistanceBand"
    HORODISK = "Horodisk"


class CRInvariants(NamedTuple):
    U1: float
    U2: float
    U3: float
    C1: Optional[float]
    C2: Optional[float]


@dataclass(frozen=True)
class CRShape:
    """Classified conformal range. Semi-axes are hyperbolic semi-axis lengths
    (half of the axis lengths), +inf when the axis is unbounded."""
    kind: ShapeKind
    eigenpoints: List[np.ndarray] = field(repr=False)
    major_semi: float
    minor_semi: float
    characteristic_ckb: tuple
    model: Model = Model.CKBP
    borderline: List[ShapeKind] = field(default_factory=list)


def _to_model_Q(M, model):
    model = as_model(model)
    if model is Model.CKBP:
        return M
    if model is Model.CKB:
        return T3.T @ M @ T3
    raise ValueError("conics are available in the CKBP and CKB models")


def _to_model_G(M, model):
    model = as_model(model)
    if model is Model.CKBP:
        return M
    if model is Model.CKB:
        return T3_INV @ M @ T3_INV.T
    raise ValueError("conics are available in the CKBP and CKB models")


def Q_from_reduced(V, W, X, Y, Z) -> np.ndarray:
    """CKBP point conic from the reduced five data."""
    m = W * Z / 2 - V * X - Z * Z / 2
    return np.array([
        [Z * Z - 4 * Y, 2 * X - V * Z, 2 * V * Y - X * Z],
        [2 * X - V * Z, Z - W + V * V, m],
        [2 * V * Y - X * Z, m, X * X - Y * W + Y * Z],
    ])


def G_from_reduced(V, W, X, Y, Z) -> np.ndarray:
    return np.array([
        [(W - Z) / 4, X / 2, V / 2],
        [X / 2, Y, Z / 2],
        [V / 2, Z / 2, 1.0],
    ])


def confrange_Q(A, model=Model.CKBP) -> np.ndarray:
    """Point conic of CR(A); the form is <= 0 on the range."""
    return _to_model_Q(Q_from_reduced(*reduced_five_data(A)), model)


def confrange_G(A, model=Model.CKBP) -> np.ndarray:
    """Dual conic of CR(A), the shell dual restricted to x, z, w."""
    return _to_model_G(G_from_reduced(*reduced_five_data(A)), model)


def cr_base_Q(model=Model.CKBP) -> np.ndarray:
    """The asymptotic circle."""
    return _to_model_Q(QR0_CKBP.copy(), model)


def cr_base_G(model=Model.CKBP) -> np.ndarray:
    return _to_model_G(GR0_CKBP.copy(), model)


def confrange_L(A) -> np.ndarray:
    """4x3 elimination of y from the shell form: L^T Q_shell L = Q^R / k,
    with k = tr A*A - 2 Re det A."""
    from .algebra import five_data
    tr_re, tr_im, dr, di, Z = five_data(A)
    tr, det = complex(tr_re, tr_im), complex(dr, di)
    k = Z - 2 * det.real
    dt = det * tr.conjugate()
    return np.array([
        [1, 0, 0],
        [-2 * det.imag / k, tr.imag / k, dt.imag / k],
        [0, 1, 0],
        [0, 0, 1],
    ], dtype=float)


def cr_eigen_ratios(A, model=Model.CKBP):
    """Sorted eigenvalues of G^R Q^R0 and of G^R0 Q^R.

    The closed forms are -1/2 {U-|D|, U+|D|, U-|D|+2E} and four times the
    pairwise products of {U-|D|, U+|D|, U-|D|+2E}.
    """
    G, Q = confrange_G(A, model), confrange_Q(A, model)
    a = np.sort(np.linalg.eigvals(G @ cr_base_Q(model)).real)
    b = np.sort(np.linalg.eigvals(cr_base_G(model) @ Q).real)
    return a, b


def cr_triple(A):
    """(U-|D|, U+|D|, U-|D|+2E)."""
    inv = invariants(A)
    return inv.U - inv.absD, inv.U + inv.absD, inv.U - inv.absD + 2 * inv.E


def cr_invariants(A) -> CRInvariants:
    """U1, U2, U3 from the reduced five data; C1 = U2/U1^2, C2 = U3/U1^3.

    C1 and C2 are None for real scalar matrices, where U1 = 0.
    """
    V, W, X, Y, Z = reduced_five_data(A)
    U1 = 3 * Z - W
    U2 = 3 * Z * Z - 2 * W * Z + 4 * V * X - 4 * Y
    U3 = (Z ** 3 - W * Z * Z + 4 * V * X * Z - 4 * Y * Z - 4 * V * V * Y
          + 4 * W * Y - 4 * X * X)
    scale = max(1.0, Z)
    if abs(U1) <= CLASS_TOL * scale:
        return CRInvariants(U1, U2, U3, None, None)
    return CRInvariants(U1, U2, U3, U2 / U1 ** 2, U3 / U1 ** 3)


def cr_ratio_invariants(A):
    """(C1, C2), raising for real scalar matrices."""
    inv = cr_invariants(A)
    if inv.C1 is None:
        raise UndefinedForRealScalar("C1, C2 are undefined for real scalar matrices")
    return inv.C1, inv.C2


def _div0(a, b, zero_over_zero):
    if b == 0:
        return zero_over_zero if a == 0 else math.inf
    return a / b


def characteristic_ckb_values(A, tol: float = CLASS_TOL):
    """Euclidean semi-axes (major, minor) of the normalised range in the CKB disk.

    Uses 0/0 = 0.
    """
    inv = invariants(A, tol)
    U, aD, E = inv.U, inv.absD, inv.E
    scale = max(1.0, U, E)
    m = max(U - aD, 0.0)
    if abs(E - aD) <= tol * scale:
        return 1.0 if U + E > tol * scale else 0.0, math.sqrt(_div0(m, U + E, 0.0))
    if E >= aD:
        den = m + 2 * E
        return math.sqrt(_div0(U + aD, den, 0.0)), math.sqrt(_div0(m, den, 0.0))
    den = U + aD
    return math.sqrt(_div0(m + 2 * E, den, 0.0)), math.sqrt(_div0(m, den, 0.0))


def _artanh(u):
    return math.inf if u >= 1 else math.atanh(u)


def cr_semi_axes(A, tol: float = CLASS_TOL):
    """Hyperbolic semi-axes (major, minor) = artanh of the characteristic values."""
    c1, c2 = characteristic_ckb_values(A, tol)
    return _artanh(c1), _artanh(c2)


def cr_semi_axes_arcosh(A, tol: float = CLASS_TOL):
    """The same semi-axes from the half-arcosh displays, using 0/0 = 1."""
    inv = invariants(A, tol)
    U, aD, E = inv.U, inv.absD, inv.E

    def half(num, den):
        q = _div0(num, den, 1.0)
        return 0.5 * math.acosh(max(q, 1.0)) if math.isfinite(q) else math.inf

    if E >= aD:
        return half(U + E, E - aD), half(U - aD + E, E)
    return half(U + E, aD - E), half(U, aD)


def _shape_kind(A, tol):
    inv = invariants(A, tol)
    normal = inv.U - inv.absD <= tol * max(1.0, inv.U)
    cls = inv.cls
    if normal:
        return {
            SpectralClass.REAL_PARABOLIC: ShapeKind.ASYMPTOTIC_POINT,
            SpectralClass.NON_REAL_PARABOLIC: ShapeKind.POINT,
            SpectralClass.REAL_ELLIPTIC: ShapeKind.POINT,
            SpectralClass.REAL_HYPERBOLIC: ShapeKind.LINE,
            SpectralClass.SEMI_REAL: ShapeKind.HALF_LINE,
            SpectralClass.QUASI_ELLIPTIC: ShapeKind.SEGMENT,
            SpectralClass.QUASI_HYPERBOLIC: ShapeKind.SEGMENT,
        }[cls]
    return {
        SpectralClass.REAL_PARABOLIC: ShapeKind.HORODISK,
        SpectralClass.NON_REAL_PARABOLIC: ShapeKind.CIRCLE_DISK,
        SpectralClass.REAL_ELLIPTIC: ShapeKind.CIRCLE_DISK,
        SpectralClass.REAL_HYPERBOLIC: ShapeKind.BAND,
        SpectralClass.SEMI_REAL: ShapeKind.PARABOLA_DISK,
        SpectralClass.QUASI_ELLIPTIC: ShapeKind.ELLIPSE_DISK,
        SpectralClass.QUASI_HYPERBOLIC: ShapeKind.ELLIPSE_DISK,
    }[cls]


def cr_shape(A, model=Model.CKBP, tol: float = CLASS_TOL) -> CRShape:
    """Named shape of CR(A) with eigenpoints, semi-axes and characteristic values.

    Labels obtained with a 100x looser or tighter tolerance that differ from
    the chosen one are listed in ``borderline``.
    """
    kind = _shape_kind(A, tol)
    others = {_shape_kind(A, tol * 100), _shape_kind(A, tol / 100)} - {kind}
    l1, l2 = eigenvalues(A)
    pts = [iota2(l1, model), iota2(l2, model)]
    major, minor = cr_semi_axes(A, tol)
    return CRShape(kind, pts, major, minor, characteristic_ckb_values(A, tol),
                   as_model(model), sorted(others, key=lambda k: k.value))


def eigendistance(A, tol: float = CLASS_TOL) -> float:
    """Distance between the h-eigenpoints, log|(sqrt(E/|D|)+1)/(sqrt(E/|D|)-1)|.

    Uses E/|D| = 1 for 0/0, which gives +inf.
    """
    inv = invariants(A, tol)
    scale = max(1.0, inv.U, inv.E)
    if abs(inv.E - inv.absD) <= tol * scale:
        return math.inf
    if inv.absD == 0:
        return 0.0 if inv.E == 0 else math.inf
    s = math.sqrt(inv.E / inv.absD)
    return abs(math.log(abs((s + 1) / (s - 1))))


def eigenpoints_and_distance(A, model=Model.CKBP, tol: float = CLASS_TOL):
    l1, l2 = eigenvalues(A)
    return iota2(l1, model), iota2(l2, model), eigendistance(A, tol)


def hypfocal_quartic(G) -> np.ndarray:
    """Coefficients, highest first, of (2l, -1, -l^2) G (2l, -1, -l^2)^T.

    For G = G^R(A) this is |det(l - A)|^2 at real l.
    """
    G = np.asarray(G, dtype=float)
    return np.array([
        G[2, 2],
        -4 * G[0, 2],
        4 * G[0, 0] + 2 * G[1, 2],
        -4 * G[0, 1],
        G[1, 1],
    ])


def cr_mobius_rep(f: MobiusMap, model=Model.CKBP) -> np.ndarray:
    """3x3 action of a real Moebius map on (Re l, |l|^2, 1), |det| = 1."""
    if not f.is_real:
        raise ValueError("conformal range transport needs a real Moebius map")
    R = mobius_projective_rep(f)[np.ix_([0, 2, 3], [0, 2, 3])]
    if as_model(model) is Model.CKB:
        return T3_INV @ R @ T3
    return R


def cr_normalized(A, model=Model.CKBP):
    """(G^R / U1, Q^R / U2), covariant under real Moebius maps without scale."""
    inv = cr_invariants(A)
    return confrange_G(A, model) / inv.U1, confrange_Q(A, model) / inv.U2


# inverse problem

def _factor_quartic(V, W, X, Y, Z, iters=200):
    """Split l^4 - 2V l^3 + W l^2 - 2X l + Y into (l^2 - a1 l + b1)(l^2 - a2 l + b2).

    Starts from the companion roots paired with their nearest conjugates and
    polishes with Gauss-Newton. A perfect square (both eigenvalues real, or
    a repeated conjugate pair) is split exactly, since there the Jacobian of
    the splitting is singular.
    """
    sq = _square_split(V, W, X, Y)
    if sq is not None:
        return sq
    r = np.roots([1.0, -2 * V, W, -2 * X, Y])
    best = None
    for i, j, k, m in ((0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)):
        cost = abs(r[i] - np.conj(r[j])) + abs(r[k] - np.conj(r[m]))
        if best is None or cost < best[0]:
            best = (cost, (i, j), (k, m))
    (i, j), (k, m) = best[1], best[2]
    x = np.array([(r[i] + r[j]).real, (r[i] * r[j]).real,
                  (r[k] + r[m]).real, (r[k] * r[m]).real])
    target = np.array([2 * V, W, 2 * X, Y])

    def resid(x):
        a1, b1, a2, b2 = x
        return np.array([a1 + a2, b1 + b2 + a1 * a2, a1 * b2 + a2 * b1, b1 * b2]) - target

    fx = resid(x)
    for _ in range(iters):
        a1, b1, a2, b2 = x
        J = np.array([
            [1, 0, 1, 0],
            [a2, 1, a1, 1],
            [b2, a2, b1, a1],
            [0, b2, 0, b1],
        ], dtype=float)
        dx = np.linalg.lstsq(J, -fx, rcond=None)[0]
        xn = x + dx
        fn = resid(xn)
        if np.linalg.norm(fn) >= np.linalg.norm(fx):
            break
        x, fx = xn, fn
    return x


def _square_split(V, W, X, Y, rtol=1e-10):
    a, b = V, (W - V * V) / 2
    scale = max(1.0, abs(V) ** 4, abs(W) ** 2, abs(Y))
    if abs(2 * X - 2 * a * b) ** 2 > rtol * scale or abs(Y - b * b) > rtol * scale:
        return None
    disc = a * a / 4 - b
    if disc <= math.sqrt(rtol * scale) * 1e-2:
        return np.array([a, b, a, b])
    # two distinct real roots r1, r2: the conjugate pairs are (r1, r1), (r2, r2)
    h = math.sqrt(disc)
    r1, r2 = a / 2 + h, a / 2 - h
    return np.array([2 * r1, r1 * r1, 2 * r2, r2 * r2])


def _dual_from(M, model, role):
    M = np.asarray(M, dtype=float)
    if M.shape != (3, 3) or not np.allclose(M, M.T, rtol=1e-12, atol=1e-14 * np.abs(M).max()):
        raise NotAConformalRangeQuadric("expected a symmetric 3x3 matrix")
    if not np.all(np.isfinite(M)):
        raise NotAConformalRangeQuadric("non-finite entries")
    model = as_model(model)
    if role == "G":
        G = T3 @ M @ T3.T if model is Model.CKB else M
    elif role == "Q":
        Q = T3_INV.T @ M @ T3_INV if model is Model.CKB else M
        s = np.linalg.svd(Q, compute_uv=False)
        if s[0] == 0:
            raise UnderdeterminedRealScalar(
                "zero conic: a point range; pass the dual conic (role='G')")
        if s[2] <= 1e-10 * s[0]:
            raise NotAConformalRangeQuadric(
                "degenerate conic; pass the dual conic (role='G') for segments")
        G = np.linalg.inv(Q)
    else:
        raise ValueError("role must be 'Q' or 'G'")
    if abs(G[2, 2]) <= 1e-14 * np.abs(G).max():
        raise NotAConformalRangeQuadric("dual conic misses the affine chart")
    return G / G[2, 2]


def cr_reconstruct(M, model=Model.CKBP, role: str = "Q", tol: float = 1e-9):
    """All upper triangular [[l1, t], [0, l2]] whose conformal range has conic M.

    ``role`` says whether M is the point conic ("Q", up to scale) or the dual
    conic ("G"); segments only admit the dual. The number of candidates is the
    ambiguity of the range: 1 real hyperbolic or parabolic, 2 semi-real,
    3 real elliptic or non-real parabolic, 4 quasi-elliptic or quasi-hyperbolic.
    """
    G = _dual_from(M, model, role)
    V, Z, Y, X = 2 * G[0, 2], 2 * G[1, 2], G[1, 1], 2 * G[0, 1]
    W = 4 * G[0, 0] + Z
    scale = max(1.0, abs(V) ** 2, abs(W), math.sqrt(abs(Y)), Z)
    if Y < -tol * scale ** 2 or Z < -tol * scale or Z * Z - 4 * Y < -tol * scale ** 2:
        raise NotAConformalRangeQuadric("reduced five data out of range")
    # the eigenvalues of G Q0 are minus half of U-|D|, U+|D|, U-|D|+2E
    ev = np.linalg.eigvals(G @ QR0_CKBP)
    if np.any(np.abs(ev.imag) > 1e-7 * scale) or np.any(ev.real > 1e-7 * scale):
        raise NotAConformalRangeQuadric("eigenvalue signs inconsistent with a range")
    tsum = -2 * float(np.sum(ev.real))

    a1, b1, a2, b2 = _factor_quartic(V, W, X, Y, Z)
    ims = []
    for a, b in ((a1, b1), (a2, b2)):
        d = b - a * a / 4
        if d < -1e-7 * scale:
            raise NotAConformalRangeQuadric("quartic has simple real roots")
        ims.append(math.sqrt(d) if d > 1e-10 * scale else 0.0)
    lam_a = {complex(a1 / 2, s * ims[0]) for s in (1, -1)}
    lam_b = {complex(a2 / 2, s * ims[1]) for s in (1, -1)}

    out = []
    for l1, l2 in itertools.product(sorted(lam_a, key=_key), sorted(lam_b, key=_key)):
        if any(_same_pair((l1, l2), c) for c in out):
            continue
        out.append((l1, l2))
    reps = []
    target = np.array([V, W, X, Y, Z])
    for l1, l2 in out:
        aD = abs(l1 - l2) ** 2 / 4
        E = abs(l1 - l2.conjugate()) ** 2 / 4
        U = (tsum + aD - 2 * E) / 3
        t = math.sqrt(max(2 * (U - aD), 0.0))
        rep = np.array([[l1, t], [0, l2]], dtype=complex)
        got = np.array(reduced_five_data(rep))
        if np.max(np.abs(got - target)) > 1e-6 * max(1.0, np.max(np.abs(target))):
            raise NotAConformalRangeQuadric("candidate does not reproduce the conic")
        reps.append(rep)
    return reps


def _key(z):
    return (round(z.real, 12), round(z.imag, 12))


def _same_pair(p, q, tol=1e-7):
    s = tol * max(1.0, *(abs(z) for z in p + q))
    direct = abs(p[0] - q[0]) <= s and abs(p[1] - q[1]) <= s
    swapped = abs(p[0] - q[1]) <= s and abs(p[1] - q[0]) <= s
    return direct or swapped


# synthetic focal identities

def _quotient(A, p, model):
    """Q^R(p) / (-4 Q^R0(p)) at a plane point p."""
    q = convert(p, model, Model.CKBP)
    return form(confrange_Q(A), q) / (-4 * form(QR0_CKBP, q))


def bifocal_check(A, p, model=Model.CKBP):
    """Both sides of the bifocal identity for A without real eigenvalues.

    lhs = (cosh(f1+f2) - cosh m)(cosh m - cosh(f1-f2)) with f_i the distances
    of p from the eigenpoints and m = arcosh((U+E)/||D|-E|);
    rhs = Q^R(p)/(-4 Q^R0(p)) / (|D|-E)^2.
    """
    inv = invariants(A)
    if inv.cls in _WITH_REAL_EIGENVALUE:
        raise WrongSpectralClass("bifocal identity needs non-real eigenvalues")
    q = convert(p, model, Model.CKBP)
    l1, l2 = eigenvalues(A)
    f1, f2 = distance(q, iota2(l1)), distance(q, iota2(l2))
    m = math.acosh((inv.U + inv.E) / abs(inv.absD - inv.E))
    cm = math.cosh(m)
    lhs = (math.cosh(f1 + f2) - cm) * (cm - math.cosh(f1 - f2))
    rhs = _quotient(A, q, Model.CKBP) / (inv.absD - inv.E) ** 2
    return lhs, float(rhs)


def _split_semi_real(A):
    l1, l2 = eigenvalues(A)
    if abs(l1.imag) <= abs(l2.imag):
        return l1.real, l2
    return l2.real, l1


def parabola_vertex(A):
    """(V, Lambda, Lambda0) in CKBP: vertex, interior focus, asymptotic focus.

    V is the second intersection of the line through Lambda0 and Lambda with
    the boundary conic; for normal A the range is the half-line and V = Lambda.
    """
    inv = invariants(A)
    if inv.cls is not SpectralClass.SEMI_REAL:
        raise WrongSpectralClass("parabola identities need a semi-real matrix")
    lr, lc = _split_semi_real(A)
    L0, Lam = iota2(lr), iota2(lc)
    Q = confrange_Q(A)
    u0, u1 = np.append(L0, 1.0), np.append(Lam - L0, 0.0)
    c2, c1 = u1 @ Q @ u1, 2 * u0 @ Q @ u1
    if abs(c2) <= 1e-12 * max(1.0, np.abs(Q).max()):
        return Lam.copy(), Lam, L0
    return L0 - (c1 / c2) * (Lam - L0), Lam, L0


def _d0_factory(A):
    V, Lam, L0 = parabola_vertex(A)
    lr = L0[0]

    def raw(q):
        x, y = convert(q, Model.CKBP, Model.PH)
        return math.log(((x - lr) ** 2 + y * y) / y)

    anchor = raw(V)
    return (lambda q: raw(q) - anchor), V, Lam


def parabola_check(A, p, model=Model.CKBP):
    """Both sides of the monofocal identity for a semi-real matrix.

    d0 is the horocyclic distance function about the real eigenpoint,
    anchored by d0(V) = 0.
    """
    inv = invariants(A)
    d0, V, Lam = _d0_factory(A)
    q = convert(p, model, Model.CKBP)
    lhs = ((math.cosh(distance(q, Lam)) - math.cosh(d0(q) + d0(Lam) - 2 * d0(V)))
           * math.exp(d0(q) - d0(Lam)))
    rhs = _quotient(A, q, Model.CKBP) / (4 * inv.absD * (inv.U + inv.absD))
    return lhs, float(rhs)


def vertex_law(A):
    """(exp d(V, Lambda), exp(d0(V) - d0(Lambda)), cosh s-), all equal."""
    inv = invariants(A)
    d0, V, Lam = _d0_factory(A)
    s_minus = 0.5 * math.acosh(max(inv.U / inv.absD, 1.0))
    return math.exp(distance(V, Lam)), math.exp(d0(V) - d0(Lam)), math.cosh(s_minus)


def band_horo_check(A, p, model=Model.CKBP):
    """Both sides of the band (real hyperbolic) or horodisk (real parabolic)
    identity.

    band: cosh 2d - cosh 2s- = quotient / (|D|(U+|D|)), d the distance from
    the axis through the two asymptotic eigenpoints;
    horodisk: exp(2 d0) - 1 = quotient / U^2, d0 the oriented distance from
    the boundary horocycle. For a real scalar matrix d0 is identically +inf.
    """
    inv = invariants(A)
    q = convert(p, model, Model.CKBP)
    l1, l2 = eigenvalues(A)
    if inv.cls is SpectralClass.REAL_HYPERBOLIC:
        d = distance_to_line(q, l1, l2)
        s_minus = 0.5 * math.acosh(max(inv.U / inv.absD, 1.0))
        lhs = math.cosh(2 * d) - math.cosh(2 * s_minus)
        rhs = _quotient(A, q, Model.CKBP) / (inv.absD * (inv.U + inv.absD))
        return lhs, float(rhs)
    if inv.cls is SpectralClass.REAL_PARABOLIC:
        if inv.U <= CLASS_TOL:
            return math.inf, math.inf
        # the horocycle touches l1 and reaches up to |A - l1| = sqrt(2U)
        d0 = horocycle_distance(q, l1.real, math.sqrt(2 * inv.U))
        lhs = math.exp(2 * d0) - 1
        rhs = _quotient(A, q, Model.CKBP) / inv.U ** 2
        return lhs, float(rhs)
    raise WrongSpectralClass("band and horodisk identities need real eigenvalues")


def cr_oriented_distances(A):
    """(dis_O, dis_inf, dis_norm) for matrices of real type; these equal the
    shell values."""
    if invariants(A).cls not in _REAL_TYPES:
        raise WrongSpectralClass("oriented distances are certified for real types")
    return shell_distances(A)


def pythagorean_check(A):
    """(cosh s+, cosh s- * cosh c) with c half the eigendistance."""
    major, minor = cr_semi_axes(A)
    c = eigendistance(A) / 2
    return math.cosh(major), math.cosh(minor) * math.cosh(c)
