"""JSON analysis report. Layout is documented in docs/schema.md."""
import json
import math

import numpy as np

from .algebra import (
    CLASS_TOL, as_matrix, eigenvalues, five_data, format_matrix, invariants,
    reduced_five_data,
)
from .confrange import (
    confrange_G, confrange_Q, cr_invariants, cr_shape, eigendistance,
)
from .models import Model, as_model, convert
from .numrange import ellipse_data, numrange_G, numrange_Q
from .shell import shell_G, shell_Q, shell_distances, shell_geometry
from .verify import check_matrix

SCHEMA_VERSION = 1
MODELS = (Model.CKBP, Model.CKB)


def encode(x):
    """JSON-ready value: complex as {re, im}, infinities as "inf"/"-inf"."""
    if isinstance(x, dict):
        return {k: encode(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [encode(v) for v in x]
    if isinstance(x, np.ndarray):
        return encode(x.tolist())
    if isinstance(x, (complex, np.complexfloating)):
        return {"re": encode(float(x.real)), "im": encode(float(x.imag))}
    if isinstance(x, (bool, np.bool_)):
        return bool(x)
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, (float, np.floating)):
        x = float(x)
        if math.isinf(x):
            return "inf" if x > 0 else "-inf"
        if math.isnan(x):
            raise ValueError("NaN in report")
        return x + 0.0  # drops the sign of -0.0
    if hasattr(x, "value"):
        return x.value
    return x


def decode_matrix(rows) -> np.ndarray:
    """Inverse of ``encode`` for real or complex matrices."""
    def num(v):
        if isinstance(v, dict):
            return complex(num(v["re"]), num(v["im"]))
        if isinstance(v, str):
            return float(v)
        return v
    return np.array([[num(v) for v in r] for r in rows])


def analyze(A, model=Model.CKBP, tol: float = CLASS_TOL) -> dict:
    """Full report of the shell, W(A) and CR(A); points are given in ``model``."""
    A = as_matrix(A)
    model = as_model(model)
    inv = invariants(A, tol)
    geo = shell_geometry(A, tol)
    dis_O, dis_inf, dis_norm = shell_distances(A)
    ell = ellipse_data(A, tol)
    shape = cr_shape(A, model if model is not Model.PH else Model.CKBP, tol)
    cri = cr_invariants(A)
    checks = check_matrix(A)
    point_model = model if model is not Model.PH else Model.CKBP
    report = {
        "schema": SCHEMA_VERSION,
        "input": {"matrix": format_matrix(A), "entries": A},
        "tolerance": tol,
        "model": point_model,
        "five_data": five_data(A)._asdict(),
        "reduced_five_data": reduced_five_data(A)._asdict(),
        "eigenvalues": list(eigenvalues(A)),
        "invariants": {
            "U": inv.U, "absD": inv.absD, "D": inv.D, "E": inv.E, "K": inv.K,
            "H": inv.H, "B": inv.B, "class": inv.cls, "normal": inv.normal,
        },
        "shell": {
            "Q": {m.value: shell_Q(A, m) for m in MODELS},
            "G": {m.value: shell_G(A, m) for m in MODELS},
            "kind": geo.kind,
            "asymptotic_points": geo.asymptotic_points,
            "center": convert(geo.center, Model.CKBP, point_model),
            "radius": geo.radius,
            "distances": {"dis_O": dis_O, "dis_inf": dis_inf, "dis_norm": dis_norm},
        },
        "numrange": {
            "Q": numrange_Q(A),
            "G": numrange_G(A),
            "foci": list(ell.foci),
            "center": ell.center,
            "major_semi": ell.major_semi,
            "minor_semi": ell.minor_semi,
            "kind": ell.kind,
        },
        "confrange": {
            "Q": {m.value: confrange_Q(A, m) for m in MODELS},
            "G": {m.value: confrange_G(A, m) for m in MODELS},
            "U1": cri.U1, "U2": cri.U2, "U3": cri.U3, "C1": cri.C1, "C2": cri.C2,
            "shape": shape.kind,
            "borderline": shape.borderline,
            "characteristic_ckb": list(shape.characteristic_ckb),
            "major_semi": shape.major_semi,
            "minor_semi": shape.minor_semi,
            "eigenpoints": shape.eigenpoints,
            "eigendistance": eigendistance(A, tol),
        },
        "verification": [
            {"name": c.name, "residual": c.residual, "tol": c.tol, "passed": c.passed}
            for c in checks
        ],
    }
    return encode(report)


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, allow_nan=False)
