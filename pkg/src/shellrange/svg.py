"""Static SVG pictures of W(A), CR(A) and a projected shell point cloud."""
import numpy as np

from .algebra import as_matrix, eigenvalues
from .models import Model, as_model, iota, iota2
from .oracle import boundary_points, sample_shell

SIZE = 480
PAD = 24


class _Canvas:
    def __init__(self, lo, hi):
        span = max(hi[0] - lo[0], hi[1] - lo[1], 1e-9)
        self.lo, self.scale = lo, (SIZE - 2 * PAD) / span
        self.items = []

    def xy(self, p):
        x = PAD + (p[0] - self.lo[0]) * self.scale
        y = SIZE - PAD - (p[1] - self.lo[1]) * self.scale
        return f"{x:.3f},{y:.3f}"

    def path(self, pts, closed, cls):
        if len(pts) == 0:
            return
        d = "M" + " L".join(self.xy(p) for p in pts) + (" Z" if closed else "")
        self.items.append(f'<path class="{cls}" d="{d}"/>')

    def dots(self, pts, r, cls):
        for p in pts:
            x, y = self.xy(p).split(",")
            self.items.append(f'<circle class="{cls}" cx="{x}" cy="{y}" r="{r}"/>')

    def render(self, title):
        style = (".frame{fill:none;stroke:#888;stroke-width:1}"
                 ".range{fill:#4a90d9;fill-opacity:0.35;stroke:#1f4e8c;stroke-width:1.5}"
                 ".cloud{fill:#1f4e8c;fill-opacity:0.4}"
                 ".eig{fill:#d0021b}")
        body = "\n".join(self.items)
        return (f'<svg xmlns="http://www.w3.org/2000/svg" width="{SIZE}" height="{SIZE}" '
                f'viewBox="0 0 {SIZE} {SIZE}">\n<title>{title}</title>\n'
                f"<style>{style}</style>\n{body}\n</svg>\n")


def _bounds(*arrays):
    pts = np.vstack([a for a in arrays if len(a)])
    pts = pts[np.all(np.isfinite(pts), axis=1)]
    lo, hi = pts.min(axis=0), pts.max(axis=0)
    pad = 0.05 * max(hi[0] - lo[0], hi[1] - lo[1], 1.0)
    return lo - pad, hi + pad


def render(A, which: str = "CR", model=Model.CKB, n: int = 720, seed: int = 0) -> str:
    """SVG text for ``which`` in {"W", "CR", "shell"}.

    CR is drawn in the CKB disk or the CKBP parabola frame; "shell" shows a
    sampled point cloud projected onto the (x, z) plane of the CKB ball.
    """
    A = as_matrix(A)
    model = as_model(model)
    eig = np.array(eigenvalues(A))
    if which == "W":
        b = boundary_points(A, "W", n)
        e = np.stack([eig.real, eig.imag], axis=-1)
        cv = _Canvas(*_bounds(b, e))
        lo, hi = cv.lo, cv.lo + (SIZE - 2 * PAD) / cv.scale
        cv.path([(lo[0], 0), (hi[0], 0)], False, "frame")
        cv.path([(0, lo[1]), (0, hi[1])], False, "frame")
        cv.path(b, True, "range")
        cv.dots(e, 3, "eig")
        return cv.render("numerical range")
    if which == "CR":
        if model is Model.PH:
            raise ValueError("CR plots use the ckb or ckbp model")
        b = boundary_points(A, "CR", n, model)
        e = iota2(eig, model)
        th = np.linspace(0, 2 * np.pi, 361)
        if model is Model.CKB:
            frame = np.stack([np.cos(th), np.sin(th)], axis=-1)
            cv = _Canvas(np.array([-1.05, -1.05]), np.array([1.05, 1.05]))
        else:
            lo, hi = _bounds(b, e)
            xs = np.linspace(min(lo[0], -1), max(hi[0], 1), 241)
            frame = np.stack([xs, xs * xs], axis=-1)
            cv = _Canvas(np.array([xs[0], min(lo[1], -0.1)]), np.array([xs[-1], hi[1]]))
        cv.path(frame, model is Model.CKB, "frame")
        cv.path(b, True, "range")
        cv.dots(e, 3, "eig")
        return cv.render("conformal range")
    if which == "shell":
        pts = sample_shell(A, n, seed, Model.CKB).points[:, [0, 2]]
        th = np.linspace(0, 2 * np.pi, 361)
        cv = _Canvas(np.array([-1.05, -1.05]), np.array([1.05, 1.05]))
        cv.path(np.stack([np.cos(th), np.sin(th)], axis=-1), True, "frame")
        cv.dots(pts, 1, "cloud")
        cv.dots(iota(eig, Model.CKB)[:, [0, 2]], 3, "eig")
        return cv.render("Davis-Wielandt shell, projected")
    raise ValueError("which must be 'W', 'CR' or 'shell'")
