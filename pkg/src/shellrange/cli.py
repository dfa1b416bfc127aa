"""Command-line entry point ``shellrange``.

Exit codes: 0 success, 1 a verified identity failed, 2 bad input literal or
flag, 3 numerical failure, 4 output path not writable, 5 invalid quadric.
"""
import argparse
import csv
import io
import json
import os
import sys

import numpy as np

from .algebra import CLASS_TOL, format_matrix, parse_matrix, reduced_five_data
from .confrange import cr_reconstruct
from .errors import NotAConformalRangeQuadric, ParseError, ShellrangeError
from .models import Model, as_model
from .oracle import boundary_points, sample_shell
from .report import analyze, decode_matrix, dumps, encode
from .svg import render
from .verify import check_matrix, random_matrices, verify_many

EXIT_IDENTITY, EXIT_PARSE, EXIT_NUMERIC, EXIT_PATH, EXIT_QUADRIC = 1, 2, 3, 4, 5


class CliError(Exception):
    def __init__(self, code, msg):
        super().__init__(msg)
        self.code = code


def default_tol() -> float:
    raw = os.environ.get("SHELLRANGE_TOL")
    if raw is None:
        return CLASS_TOL
    try:
        tol = float(raw)
    except ValueError:
        raise CliError(EXIT_PARSE, f"SHELLRANGE_TOL is not a number: {raw!r}")
    if not tol > 0:
        raise CliError(EXIT_PARSE, "SHELLRANGE_TOL must be positive")
    return tol


def _matrix(text):
    try:
        return parse_matrix(text)
    except ParseError as exc:
        raise CliError(EXIT_PARSE, str(exc))


def _emit(text, out):
    if out in (None, "-"):
        sys.stdout.write(text)
        return
    try:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(EXIT_PATH, f"cannot write {out}: {exc.strerror}")


def cmd_analyze(args):
    A = _matrix(args.matrix)
    _emit(dumps(analyze(A, args.model, args.tol)) + "\n", args.out)
    return 0


def cmd_boundary(args):
    A = _matrix(args.matrix)
    model = as_model(args.model)
    if args.which == "shell":
        pts = sample_shell(A, args.n, args.seed, model).points
        cols = [f"x_{model.value}", f"y_{model.value}", f"z_{model.value}"]
    elif args.which == "W":
        pts = boundary_points(A, "W", args.n)
        cols = ["re", "im"]
    else:
        if model is Model.PH:
            raise CliError(EXIT_PARSE, "CR boundaries are available in ckb or ckbp")
        pts = boundary_points(A, "CR", args.n, model)
        cols = [f"x_{model.value}", f"z_{model.value}"]
    if args.format == "json":
        text = dumps(encode({"schema": 1, "which": args.which, "model": model,
                             "seed": args.seed, "columns": cols, "points": pts})) + "\n"
    else:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(cols)
        for p in pts:
            w.writerow([repr(float(v)) for v in p])
        text = buf.getvalue()
    _emit(text, args.out)
    return 0


def cmd_plot(args):
    A = _matrix(args.matrix)
    if as_model(args.model) is Model.PH:
        raise CliError(EXIT_PARSE, "plots use the ckb or ckbp model")
    _emit(render(A, args.which, args.model, args.n, args.seed), args.out)
    return 0


def cmd_verify(args):
    if args.matrix is not None:
        checks = check_matrix(_matrix(args.matrix), args.tol, seed=args.seed)
        label = args.matrix
    else:
        n = args.fuzz if args.fuzz is not None else 100
        checks = verify_many(random_matrices(n, args.seed), args.tol, seed=args.seed)
        label = f"{n} random matrices, seed {args.seed}"
    lines = [f"# {label}"]
    width = max(len(c.name) for c in checks)
    for c in checks:
        lines.append(f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}  "
                     f"residual={c.residual:.3e}  tol={c.tol:.0e}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if all(c.passed for c in checks) else EXIT_IDENTITY


def _load_quadric(path, model, role):
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise CliError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}")
    except json.JSONDecodeError as exc:
        raise CliError(EXIT_QUADRIC, f"not JSON: {exc}")
    try:
        if "confrange" in data:
            # an analyze report: its dual conic covers normal matrices too
            return decode_matrix(data["confrange"]["G"][as_model(model).value]).real, model, "G"
        M = decode_matrix(data["matrix"]).real
        return M, data.get("model", model), data.get("role", role)
    except (KeyError, TypeError, ValueError) as exc:
        raise CliError(EXIT_QUADRIC, f"malformed quadric file: {exc}")


def cmd_reconstruct(args):
    M, model, role = _load_quadric(args.from_quadric, args.model, args.role)
    try:
        reps = cr_reconstruct(M, model, role, args.tol)
    except NotAConformalRangeQuadric as exc:
        raise CliError(EXIT_QUADRIC, f"{type(exc).__name__}: {exc}")
    except ValueError as exc:
        raise CliError(EXIT_QUADRIC, str(exc))
    cands = [{
        "matrix": format_matrix(T),
        "lam1": complex(T[0, 0]),
        "lam2": complex(T[1, 1]),
        "t": float(T[0, 1].real),
        "reduced_five_data": reduced_five_data(T)._asdict(),
    } for T in reps]
    _emit(dumps(encode({"schema": 1, "multiplicity": len(reps), "candidates": cands})) + "\n",
          args.out)
    return 0


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--model", default="ckbp", choices=["ckbp", "ckb", "ph"],
                        help="hyperbolic model for points and quadrics")
    common.add_argument("--n", type=int, default=720, help="number of points")
    common.add_argument("--seed", type=int, default=0, help="sampling seed")
    common.add_argument("--tol", type=float, default=None,
                        help="classification tolerance (default: $SHELLRANGE_TOL or 1e-9)")
    common.add_argument("--format", default="json", choices=["json", "csv"])
    common.add_argument("--out", default=None, help="output file (default: stdout)")

    p = argparse.ArgumentParser(prog="shellrange",
                                description="Shells, numerical ranges and conformal ranges "
                                            "of 2x2 complex matrices.")
    sub = p.add_subparsers(dest="command", required=True)
    s = sub.add_parser("analyze", parents=[common], help="JSON report for a matrix")
    s.add_argument("matrix", help='matrix literal such as "[1,2;0,-1]"')
    s.set_defaults(func=cmd_analyze)
    s = sub.add_parser("boundary", parents=[common], help="boundary or sample points")
    s.add_argument("matrix")
    s.add_argument("--which", default="CR", choices=["shell", "W", "CR"])
    s.set_defaults(func=cmd_boundary)
    s = sub.add_parser("plot", parents=[common], help="SVG picture")
    s.add_argument("matrix")
    s.add_argument("--which", default="CR", choices=["shell", "W", "CR"])
    s.set_defaults(func=cmd_plot)
    s = sub.add_parser("verify", parents=[common], help="run the identity suite")
    s.add_argument("matrix", nargs="?")
    s.add_argument("--fuzz", type=int, default=None, help="number of random matrices")
    s.set_defaults(func=cmd_verify)
    s = sub.add_parser("reconstruct", parents=[common],
                       help="matrices whose conformal range has a given conic")
    s.add_argument("--from-quadric", required=True, dest="from_quadric",
                   help="JSON file with a 3x3 'matrix' (or an analyze report)")
    s.add_argument("--role", default="Q", choices=["Q", "G"],
                   help="point conic (Q) or dual conic (G)")
    s.set_defaults(func=cmd_reconstruct)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.tol is None:
            args.tol = default_tol()
        if args.n < 1:
            raise CliError(EXIT_PARSE, "--n must be positive")
        if args.command == "plot" and args.out is None:
            raise CliError(EXIT_PARSE, "plot needs --out FILE.svg")
        return args.func(args)
    except CliError as exc:
        print(f"shellrange: {exc}", file=sys.stderr)
        return exc.code
    except (ShellrangeError, ArithmeticError, np.linalg.LinAlgError, ValueError) as exc:
        print(f"shellrange: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":
    sys.exit(main())
