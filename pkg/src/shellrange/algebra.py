"""Complex 2x2 matrices: five data, unitary invariants, spectral classes,
canonical triangular form, norms and Moebius actions."""
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Optional

import numpy as np

from .errors import DegenerateMobius, ParseError, SingularResolvent

CLASS_TOL = 1e-9


class FiveData(NamedTuple):
    re_tr: float
    im_tr: float
    re_det: float
    im_det: float
    tr_gram: float


class ReducedFiveData(NamedTuple):
    V: float
    W: float
    X: float
    Y: float
    Z: float


class SpectralClass(str, Enum):
    REAL_ELLIPTIC = "RealElliptic"
    REAL_PARABOLIC = "RealParabolic"
    REAL_HYPERBOLIC = "RealHyperbolic"
    NON_REAL_PARABOLIC = "NonRealParabolic"
    SEMI_REAL = "SemiReal"
    QUASI_ELLIPTIC = "QuasiElliptic"
    QUASI_HYPERBOLIC = "QuasiHyperbolic"


# sign patterns of (|D|, E, K, H); 0 means zero, 1 positive, -1 negative
_SIGN_TABLE = {
    (1, 0, 1, -1): SpectralClass.REAL_ELLIPTIC,
    (0, 0, 0, 0): SpectralClass.REAL_PARABOLIC,
    (1, 1, 0, 0): SpectralClass.REAL_HYPERBOLIC,
    (0, 1, 1, 1): SpectralClass.NON_REAL_PARABOLIC,
    (1, 1, 1, 0): SpectralClass.SEMI_REAL,
    (1, 1, 1, -1): SpectralClass.QUASI_ELLIPTIC,
    (1, 1, 1, 1): SpectralClass.QUASI_HYPERBOLIC,
}


@dataclass(frozen=True)
class InvariantSet:
    U: float
    D: complex
    absD: float
    E: float
    K: float
    H: float
    B: complex
    cls: SpectralClass

    @property
    def normal(self) -> bool:
        return math.isclose(self.U, self.absD, rel_tol=1e-9, abs_tol=1e-12)


class TriangularForm(NamedTuple):
    lam1: complex
    lam2: complex
    t: float

    def matrix(self) -> np.ndarray:
        return np.array([[self.lam1, self.t], [0, self.lam2]], dtype=complex)


def as_matrix(A) -> np.ndarray:
    """Coerce to a finite complex 2x2 array."""
    M = np.asarray(A, dtype=complex)
    if M.shape != (2, 2):
        raise ValueError(f"expected a 2x2 matrix, got shape {M.shape}")
    if not np.all(np.isfinite(M)):
        raise ValueError("matrix entries must be finite")
    return M


def trace_det(A):
    A = as_matrix(A)
    tr = A[0, 0] + A[1, 1]
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    return complex(tr), complex(det)


def five_data(A) -> FiveData:
    """(Re tr A, Im tr A, Re det A, Im det A, tr A*A)."""
    A = as_matrix(A)
    tr, det = trace_det(A)
    return FiveData(tr.real, tr.imag, det.real, det.imag, float(np.sum(np.abs(A) ** 2)))


def reduced_five_data(A) -> ReducedFiveData:
    """(V, W, X, Y, Z), the data invariant under real Moebius conjugacy of the range."""
    A = as_matrix(A)
    tr, det = trace_det(A)
    return ReducedFiveData(
        tr.real,
        abs(tr) ** 2 + 2 * det.real,
        (det * tr.conjugate()).real,
        abs(det) ** 2,
        float(np.sum(np.abs(A) ** 2)),
    )


def matrix_from_five_data(fd) -> np.ndarray:
    """A representative [[l1, t], [0, l2]] with the given five data."""
    tr = complex(fd[0], fd[1])
    det = complex(fd[2], fd[3])
    r = principal_sqrt(tr * tr / 4 - det)
    l1, l2 = tr / 2 + r, tr / 2 - r
    t2 = fd[4] - abs(l1) ** 2 - abs(l2) ** 2
    return np.array([[l1, math.sqrt(max(t2, 0.0))], [0, l2]], dtype=complex)


def principal_sqrt(z: complex) -> complex:
    """Square root with its cut on the negative reals.

    The imaginary part takes the sign of Im z, with sign(0) = +1, so the cut
    itself maps to the positive imaginary axis: ``principal_sqrt(-1) == 1j``.
    """
    z = complex(z)
    if z == 0:
        return 0j
    r = abs(z)
    # take the larger component from the half-angle formula, the smaller
    # from |Im z| = 2 re im, which avoids cancellation
    if z.real >= 0:
        re_part = math.sqrt((r + z.real) / 2)
        im_part = abs(z.imag) / (2 * re_part)
    else:
        im_part = math.sqrt((r - z.real) / 2)
        re_part = abs(z.imag) / (2 * im_part)
    return complex(re_part, im_part if z.imag >= 0 else -im_part)


def _classify(absD, E, K, H, lam, scale, tol):
    def sgn(q):
        return 0 if abs(q) <= tol * scale else (1 if q > 0 else -1)

    key = (sgn(absD), sgn(E), sgn(K), sgn(H))
    if key in _SIGN_TABLE:
        return _SIGN_TABLE[key]
    # inconsistent pattern near a class boundary: decide from the eigenvalues
    l1, l2 = lam
    eps = math.sqrt(tol * scale)
    r1, r2 = abs(l1.imag) <= eps, abs(l2.imag) <= eps
    same = abs(l1 - l2) <= eps
    if r1 and r2:
        return SpectralClass.REAL_PARABOLIC if same else SpectralClass.REAL_HYPERBOLIC
    if r1 or r2:
        return SpectralClass.SEMI_REAL
    if abs(l1 - l2.conjugate()) <= eps:
        return SpectralClass.REAL_ELLIPTIC
    if same:
        return SpectralClass.NON_REAL_PARABOLIC
    if l1.imag * l2.imag < 0:
        return SpectralClass.QUASI_ELLIPTIC
    return SpectralClass.QUASI_HYPERBOLIC


def class_scale(A) -> float:
    """Scale against which class-defining quantities are compared with zero."""
    tr, det = trace_det(A)
    B = as_matrix(A) - tr / 2 * np.eye(2)
    U = float(np.sum(np.abs(B) ** 2)) / 2
    return max(1.0, U, abs(tr) ** 2 / 4, abs(det))


def invariants(A, tol: float = CLASS_TOL) -> InvariantSet:
    """U, D, |D|, E, K, H, B and the spectral class of A."""
    A = as_matrix(A)
    tr, det = trace_det(A)
    # shift to trace zero first; avoids cancellation in U and D
    B = A - tr / 2 * np.eye(2)
    U = float(np.sum(np.abs(B) ** 2)) / 2
    D = complex(-B[0, 0] ** 2 - B[0, 1] * B[1, 0])
    absD = abs(D)
    h = (tr.imag / 2) ** 2
    E = h + (absD - D.real) / 2
    K = h + (absD + D.real) / 2
    H = h - (absD + D.real) / 2
    Bc = complex(tr.imag / 2, principal_sqrt(D).imag)
    cls = _classify(absD, E, K, H, eigenvalues(A), class_scale(A), tol)
    return InvariantSet(U, D, absD, E, K, H, Bc, cls)


def eigenvalues(A):
    """Eigenvalues as tr/2 + sqrt(-D), tr/2 - sqrt(-D), in that order."""
    A = as_matrix(A)
    tr, _ = trace_det(A)
    b = A[0, 0] - tr / 2
    D = complex(-b * b - A[0, 1] * A[1, 0])
    r = principal_sqrt(-D)
    return tr / 2 + r, tr / 2 - r


def is_normal(A, tol: float = CLASS_TOL) -> bool:
    inv = invariants(A)
    return inv.U - inv.absD <= tol * max(1.0, inv.U)


def commutator_norm2(A) -> float:
    """Squared Frobenius norm of A*A - AA*."""
    A = as_matrix(A)
    C = A.conj().T @ A - A @ A.conj().T
    return float(np.sum(np.abs(C) ** 2))


def canonical_triangular(A):
    """Unitary reduction to [[lam1, t], [0, lam2]] with t real and >= 0.

    Returns
    -------
    form : TriangularForm
    Q : ndarray
        Unitary with ``Q^* A Q`` upper triangular.
    """
    A = as_matrix(A)
    lam1, lam2 = eigenvalues(A)
    # eigenvector of lam1 as the least right singular vector
    _, _, vh = np.linalg.svd(A - lam1 * np.eye(2))
    v = vh[-1].conj()
    v = v / np.linalg.norm(v)
    w = np.array([-v[1].conjugate(), v[0].conjugate()])
    off = np.vdot(v, A @ w)
    if abs(off) > 0:
        w = w * (abs(off) / off)
    Q = np.column_stack([v, w])
    T = Q.conj().T @ A @ Q
    return TriangularForm(lam1, lam2, float(abs(T[0, 1]))), Q


def norm_conorm(A):
    """Operator norm and co-norm from the five data; their product is |det A|."""
    fd = five_data(A)
    Z = fd.tr_gram
    adet = math.hypot(fd.re_det, fd.im_det)
    nrm = math.sqrt(Z / 2 + math.sqrt(max(Z * Z / 4 - adet * adet, 0.0)))
    return nrm, (adet / nrm if nrm > 0 else 0.0)


@dataclass(frozen=True)
class MobiusMap:
    """lambda -> (a lambda + b) / (c lambda + d)."""
    a: complex
    b: complex
    c: complex
    d: complex
    kind: Optional[str] = None

    def __post_init__(self):
        for name in "abcd":
            z = complex(getattr(self, name))
            if not (math.isfinite(z.real) and math.isfinite(z.imag)):
                raise ValueError("Moebius coefficients must be finite")
            object.__setattr__(self, name, z)
        if self.det == 0:
            raise DegenerateMobius("ad - bc must be nonzero")
        real = all(getattr(self, n).imag == 0 for n in "abcd")
        if self.kind is None:
            object.__setattr__(self, "kind", "real" if real else "complex")
        elif self.kind == "real" and not real:
            raise ValueError("real Moebius map with non-real coefficients")
        elif self.kind not in ("real", "complex"):
            raise ValueError(f"unknown kind {self.kind!r}")

    @property
    def det(self) -> complex:
        return self.a * self.d - self.b * self.c

    @property
    def is_real(self) -> bool:
        return self.kind == "real"

    def __call__(self, z):
        return (self.a * z + self.b) / (self.c * z + self.d)

    def matrix(self) -> np.ndarray:
        return np.array([[self.a, self.b], [self.c, self.d]])


def mobius_apply(f: MobiusMap, A, rtol: float = 1e-13) -> np.ndarray:
    """f(A) = (aA + bI)(cA + dI)^-1."""
    A = as_matrix(A)
    I = np.eye(2)
    M = f.c * A + f.d * I
    s = np.linalg.svd(M, compute_uv=False)
    if s[0] == 0 or s[1] <= rtol * s[0]:
        raise SingularResolvent("cA + dI is singular; -d/c is an eigenvalue")
    return np.linalg.solve(M.T, (f.a * A + f.b * I).T).T


def scaling_factor(f: MobiusMap, A) -> float:
    """The factor C(f, A) by which the quadrics of f(A) rescale.

    Contracting the dual shell quadric with (2Re(c'd), 2Im(c'd), |c|^2, |d|^2)
    kills the U-dependent part, leaving |det(cA + dI)|^2 / |ad - bc|^2.
    """
    tr, det = trace_det(A)
    c, d = f.c, f.d
    res = c * c * det + c * d * tr + d * d
    return abs(res) ** 2 / abs(f.det) ** 2


# canonical representatives

def L_t(t: float) -> np.ndarray:
    return np.array([[1, 2 * t], [0, -1]], dtype=complex)


def L_pm(alpha: float, t: float, sign: int) -> np.ndarray:
    """L^+ (sign=+1) or L^- (sign=-1) with angle alpha and off-diagonal 2t."""
    ca, sa = math.cos(alpha), math.sin(alpha)
    return np.array([[complex(ca, sa), 2 * t], [0, complex(-ca, sign * sa)]])


def S_beta(beta: float) -> np.ndarray:
    return np.array([[0, math.cos(beta)], [0, 1j * math.sin(beta)]], dtype=complex)


# literal parsing

_IMAG_ONLY = re.compile(r"(^|[+-])[ij]$")


def parse_complex(s: str) -> complex:
    """Parse ``1.5+2i``, ``-3i``, ``2``, ``i``; ``j`` is accepted for ``i``."""
    txt = s.strip().replace(" ", "")
    if not txt or any(ch in txt for ch in "()"):
        raise ParseError(f"bad complex literal {s!r}")
    txt = _IMAG_ONLY.sub(lambda m: m.group(1) + "1j", txt)
    txt = txt.replace("i", "j")
    if re.search(r"[^0-9eE.+\-j]", txt):
        raise ParseError(f"bad complex literal {s!r}")
    try:
        z = complex(txt)
    except ValueError as exc:
        raise ParseError(f"bad complex literal {s!r}") from exc
    if not (math.isfinite(z.real) and math.isfinite(z.imag)):
        raise ParseError(f"non-finite literal {s!r}")
    return z


def parse_matrix(s: str) -> np.ndarray:
    """Parse ``"[a11,a12;a21,a22]"``."""
    txt = s.strip()
    if not (txt.startswith("[") and txt.endswith("]")):
        raise ParseError(f"matrix literal must be bracketed: {s!r}")
    rows = txt[1:-1].split(";")
    if len(rows) != 2:
        raise ParseError(f"expected 2 rows in {s!r}")
    entries = [r.split(",") for r in rows]
    if any(len(r) != 2 for r in entries):
        raise ParseError(f"expected 2 entries per row in {s!r}")
    return np.array([[parse_complex(x) for x in r] for r in entries], dtype=complex)


def format_complex(z: complex) -> str:
    z = complex(z)
    if z.imag == 0:
        return repr(z.real)
    sign = "-" if z.imag < 0 else "+"
    return f"{z.real!r}{sign}{abs(z.imag)!r}i"


def format_matrix(A) -> str:
    A = as_matrix(A)
    return "[" + ";".join(",".join(format_complex(x) for x in row) for row in A) + "]"
