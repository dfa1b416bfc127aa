"""Points of hyperbolic space and plane in the CKB, CKBP and PH models.

Points are plain float arrays whose last axis holds the coordinates:
(x, y, z) in space, (x, z) in the plane. The CKBP point at infinity
(the image of the CKB north pole) is encoded as ``(0, 0, inf)``.
"""
import math
from enum import Enum

import numpy as np

ARCOSH_CLAMP = 1e-12


class Model(str, Enum):
    CKBP = "ckbp"
    CKB = "ckb"
    PH = "ph"


def as_model(model) -> Model:
    return model if isinstance(model, Model) else Model(str(model).lower())


def origin(model=Model.CKBP, dim: int = 3) -> np.ndarray:
    model = as_model(model)
    if model is Model.CKB:
        return np.zeros(dim)
    return np.array([0.0, 0.0, 1.0]) if dim == 3 else np.array([0.0, 1.0])


def _last(p):
    p = np.asarray(p, dtype=float)
    if p.shape[-1] not in (2, 3):
        raise ValueError("points must have 2 or 3 coordinates")
    return p


def _ckb_to_ckbp(p):
    z = p[..., -1]
    with np.errstate(divide="ignore", invalid="ignore"):
        out = np.concatenate([p[..., :-1], (1 + z)[..., None]], axis=-1) / (1 - z)[..., None]
    pole = z >= 1
    if np.any(pole):
        out = np.where(pole[..., None], 0.0, out)
        out[..., -1] = np.where(pole, np.inf, out[..., -1])
    return out


def _ckbp_to_ckb(p):
    z = p[..., -1]
    with np.errstate(invalid="ignore"):
        out = np.concatenate([2 * p[..., :-1], (z - 1)[..., None]], axis=-1) / (z + 1)[..., None]
    inf = np.isinf(z)
    if np.any(inf):
        out = np.where(inf[..., None], 0.0, out)
        out[..., -1] = np.where(inf, 1.0, out[..., -1])
    return out


def _ckbp_to_ph(p):
    h = p[..., -1] - np.sum(p[..., :-1] ** 2, axis=-1)
    with np.errstate(invalid="ignore"):
        zph = np.sqrt(np.maximum(h, 0.0))
    return np.concatenate([p[..., :-1], zph[..., None]], axis=-1)


def _ph_to_ckbp(p):
    z = np.sum(p ** 2, axis=-1)
    return np.concatenate([p[..., :-1], z[..., None]], axis=-1)


def convert(p, source, target) -> np.ndarray:
    """Convert points between models; works for plane and space points alike."""
    source, target = as_model(source), as_model(target)
    p = _last(p)
    if source is target:
        return p.copy()
    if source is Model.CKB:
        q = _ckb_to_ckbp(p)
    elif source is Model.PH:
        q = _ph_to_ckbp(p)
    else:
        q = p
    if target is Model.CKB:
        return _ckbp_to_ckb(q)
    if target is Model.PH:
        return _ckbp_to_ph(q)
    return q.copy()


def iota(lam, model=Model.CKBP) -> np.ndarray:
    """Embedding of the complex plane as the asymptotic boundary of space."""
    lam = np.asarray(lam, dtype=complex)
    x, y, r2 = lam.real, lam.imag, np.abs(lam) ** 2
    model = as_model(model)
    if model is Model.CKBP:
        return np.stack([x, y, r2], axis=-1)
    if model is Model.CKB:
        return np.stack([2 * x, 2 * y, r2 - 1], axis=-1) / (1 + r2)[..., None]
    return np.stack([x, y, np.zeros_like(x)], axis=-1)


def iota2(lam, model=Model.CKBP) -> np.ndarray:
    """Planar embedding lambda -> (Re lambda, |lambda|^2) and its images."""
    lam = np.asarray(lam, dtype=complex)
    x, r2 = lam.real, np.abs(lam) ** 2
    model = as_model(model)
    if model is Model.CKBP:
        return np.stack([x, r2], axis=-1)
    if model is Model.CKB:
        return np.stack([2 * x, r2 - 1], axis=-1) / (1 + r2)[..., None]
    return np.stack([x, np.abs(lam.imag)], axis=-1)


def _arcosh(arg):
    arg = np.asarray(arg, dtype=float)
    if np.any(arg < 1 - ARCOSH_CLAMP):
        raise ValueError("points lie outside the model")
    out = np.arccosh(np.maximum(arg, 1.0))
    return float(out) if out.ndim == 0 else out


def _split(p):
    """(horizontal coordinates, z) of a plane or space point."""
    return p[..., :-1], p[..., -1]


def distance(p, q, model=Model.CKBP):
    """Hyperbolic distance; +inf when a point is asymptotic."""
    model = as_model(model)
    p, q = _last(p), _last(q)
    if p.shape[-1] != q.shape[-1]:
        raise ValueError("points of different dimension")
    with np.errstate(divide="ignore", invalid="ignore"):
        if model is Model.CKB:
            hp, hq = 1 - np.sum(p * p, axis=-1), 1 - np.sum(q * q, axis=-1)
            num = 1 - np.sum(p * q, axis=-1)
        elif model is Model.CKBP:
            (u, z), (v, w) = _split(p), _split(q)
            hp, hq = z - np.sum(u * u, axis=-1), w - np.sum(v * v, axis=-1)
            num = z / 2 + w / 2 - np.sum(u * v, axis=-1)
        else:
            hp, hq = p[..., -1], q[..., -1]
            num = 2 * hp * hq + np.sum((p - q) ** 2, axis=-1)
        if np.any(hp < -ARCOSH_CLAMP) or np.any(hq < -ARCOSH_CLAMP):
            raise ValueError("points lie outside the model")
        den = 2 * hp * hq if model is Model.PH else np.sqrt(np.maximum(hp, 0) * np.maximum(hq, 0))
        boundary = den <= 0
        arg = np.where(boundary, np.inf, num / np.where(boundary, 1.0, den))
    return _arcosh(arg)


def horo_distance(p, model=Model.CKBP):
    """Oriented distance from the horosphere z_PH = 1 centred at infinity."""
    zph = convert(p, model, Model.PH)[..., -1]
    with np.errstate(divide="ignore"):
        out = -np.log(zph)
    return float(out) if np.ndim(out) == 0 else out


def norm_distance(p, model=Model.CKBP):
    """-(1/2) log z_CKBP, the oriented distance from the unit norm sphere."""
    z = convert(p, model, Model.CKBP)[..., -1]
    with np.errstate(divide="ignore"):
        out = -0.5 * np.log(z)
    return float(out) if np.ndim(out) == 0 else out


def distance_to_line(p, lam1: complex, lam2: complex, model=Model.CKBP) -> float:
    """Distance from a plane point to the h-line between two real asymptotic points."""
    x, y = convert(p, model, Model.PH)
    c, r = (lam1.real + lam2.real) / 2, abs(lam1.real - lam2.real) / 2
    return math.asinh(abs((x - c) ** 2 + y * y - r * r) / (2 * r * y))


def horocycle_distance(p, foot: float, height: float, model=Model.CKBP) -> float:
    """Oriented distance from the horocycle tangent at ``foot`` with top at ``height``.

    Negative inside the horodisk.
    """
    x, y = convert(p, model, Model.PH)
    return math.log(((x - foot) ** 2 + y * y) / (height * y))
