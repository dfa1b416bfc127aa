"""Small helpers shared by the quadric modules."""
import numpy as np


def adjugate(M) -> np.ndarray:
    """Transposed cofactor matrix; valid for singular M."""
    M = np.asarray(M, dtype=float)
    n = M.shape[0]
    out = np.empty_like(M)
    for i in range(n):
        for j in range(n):
            minor = np.delete(np.delete(M, i, axis=0), j, axis=1)
            out[j, i] = (-1) ** (i + j) * np.linalg.det(minor)
    return out


def form(M, p) -> np.ndarray:
    """Quadratic form of M at affine point(s) p, homogenised with a trailing 1."""
    p = np.asarray(p, dtype=float)
    v = np.concatenate([p, np.ones(p.shape[:-1] + (1,))], axis=-1)
    return np.einsum("...i,ij,...j->...", v, np.asarray(M, dtype=float), v)


def rank(M, rtol: float = 1e-9, scale: float = 1.0) -> int:
    """Numerical rank with threshold rtol * max(scale, largest singular value)."""
    s = np.linalg.svd(np.asarray(M, dtype=float), compute_uv=False)
    return int(np.sum(s > rtol * max(scale, s[0] if s.size else 0.0)))
