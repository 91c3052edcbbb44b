"""Command-line front end.

Subcommands: classify, verify, spectrum, export, table, landen.
Output is a deterministic JSON envelope by default (stable key order,
floats at 17 significant digits); ``--format text`` prints aligned
human-readable tables instead.

Exit codes: 0 ok, 1 invalid input, 2 verification failure, 3 numerical
non-convergence.  LAWSON_GRID_N overrides the default spectral grid
size when --grid is not given.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from .elliptic import Modulus, complete_E, complete_K, landen_gap
from .errors import InvalidTripleError, SpectralError
from .spectral import Symmetry, sl_problem, sl_spectrum
from .surface import Case, Triple, area_closed, classify, immersion, validate
from .verify import run_verification

EXIT_OK = 0
EXIT_INVALID_INPUT = 1
EXIT_VERIFICATION_FAILED = 2
EXIT_NUMERIC = 3

DEFAULT_GRID = 2048
DEFAULT_EXPORT_NX = 128
DEFAULT_EXPORT_NY = 128

_SYMMETRY_NAMES = {
    "full": Symmetry.FULL_PERIODIC,
    "even": Symmetry.EVEN_Y,
    "odd": Symmetry.ODD_Y,
    "pi-periodic": Symmetry.PI_PERIODIC,
    "pi-antiperiodic": Symmetry.PI_ANTIPERIODIC,
}


class _Parser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad input; remap to 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_INVALID_INPUT)


# ---------------------------------------------------------------------------
# Deterministic serialization: floats always at 17 significant digits.
# ---------------------------------------------------------------------------


def _fmt_float(x: float) -> str:
    if x != x or x in (float("inf"), float("-inf")):
        raise ValueError(f"non-finite float in output: {x!r}")
    s = format(x, ".17g")
    return s


def render_json(obj, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        items = [
            f'{pad}  "{k}": {render_json(v, indent + 1)}' for k, v in obj.items()
        ]
        return "{\n" + ",\n".join(items) + "\n" + pad + "}"
    if isinstance(obj, (list, tuple)):
        if not obj:
            return "[]"
        items = [f"{pad}  {render_json(v, indent + 1)}" for v in obj]
        return "[\n" + ",\n".join(items) + "\n" + pad + "]"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _fmt_float(float(obj))
    if obj is None:
        return "null"
    return '"' + str(obj).replace("\\", "\\\\").replace('"', '\\"') + '"'


def _triple_record(t: Triple) -> dict:
    rec = {"case": t.case.value, "a": t.a, "b": t.b}
    rec["c"] = t.c if t.case is Case.GENERALIZED else t.c_real
    return rec


def _envelope(command: str, t: Triple | None, payload: dict, tolerances: dict,
              status: str) -> dict:
    return {
        "command": command,
        "triple": _triple_record(t) if t is not None else None,
        "payload": payload,
        "tolerances": tolerances,
        "status": status,
    }


def _emit(env: dict, fmt: str) -> None:
    if fmt == "json":
        print(render_json(env))
        return
    # text rendering: flat aligned key/value lines
    print(f"command: {env['command']}   status: {env['status']}")
    if env["triple"]:
        tr = env["triple"]
        print(f"triple:  {tr['case']} ({tr['a']}, {tr['b']}, {tr['c']})")

    def walk(prefix, obj):
        if isinstance(obj, dict):
            for k, v in obj.items():
                walk(f"{prefix}{k}.", v) if isinstance(v, (dict, list)) else print(
                    f"  {prefix}{k:<28} {_text_value(v)}"
                )
        elif isinstance(obj, list):
            for i, v in enumerate(obj):
                walk(f"{prefix}{i}.", v) if isinstance(v, (dict, list)) else print(
                    f"  {prefix}{i:<28} {_text_value(v)}"
                )

    walk("", env["payload"])


def _text_value(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if isinstance(v, (float, np.floating)):
        return _fmt_float(float(v))
    return str(v)


def _parse_triple(args) -> Triple:
    ints = args.params
    if args.lawson:
        if len(ints) != 2:
            raise InvalidTripleError("Lawson case takes exactly two integers: a b")
        return validate(Case.LAWSON, ints[0], ints[1])
    if len(ints) != 3:
        raise InvalidTripleError("generalized case takes exactly three integers: a b c")
    return validate(Case.GENERALIZED, ints[0], ints[1], ints[2])


def _grid(args) -> int:
    if getattr(args, "grid", None):
        return args.grid
    env = os.environ.get("LAWSON_GRID_N")
    if env:
        try:
            n = int(env)
        except ValueError:
            raise InvalidTripleError(f"LAWSON_GRID_N must be a positive integer, got {env!r}")
        if n <= 0:
            raise InvalidTripleError(f"LAWSON_GRID_N must be a positive integer, got {env!r}")
        return n
    return DEFAULT_GRID


# ---------------------------------------------------------------------------
# Subcommands
# ---------------------------------------------------------------------------


def cmd_classify(args) -> int:
    t = _parse_triple(args)
    sc = classify(t)
    s, area = area_closed(t)
    payload = {
        "topology": sc.topology.value,
        "subcase": sc.subcase.value,
        "covering_degree": sc.covering_degree,
        "j": sc.j,
        "functional": sc.functional.value,
        "S": s,
        "area": area,
        "lambda": sc.lambda_value,
    }
    _emit(_envelope("classify", t, payload, {}, "ok"), args.format)
    return EXIT_OK


def cmd_verify(args) -> int:
    t = _parse_triple(args)
    grid_n = _grid(args)
    report = run_verification(t, grid_n=grid_n, deep=args.deep)
    payload = {
        "grid_n": grid_n,
        "deep": args.deep,
        "checks": [
            {"name": c.name, "passed": c.passed, "values": c.values}
            for c in report.checks
        ],
    }
    env = _envelope("verify", t, payload, report.tolerances(), report.status)
    _emit(env, args.format)
    if report.status == "indeterminate":
        return EXIT_NUMERIC
    return EXIT_OK if report.status == "ok" else EXIT_VERIFICATION_FAILED


def cmd_spectrum(args) -> int:
    t = _parse_triple(args)
    grid_n = _grid(args)
    symmetry = _SYMMETRY_NAMES[args.symmetry]
    problem = sl_problem(t, args.l, symmetry)
    result = sl_spectrum(problem, grid_n, count=args.count)
    payload = {
        "l": args.l,
        "symmetry": symmetry.value,
        "grid_n": grid_n,
        "eigenvalues": [float(v) for v in result.eigenvalues],
    }
    _emit(_envelope("spectrum", t, payload, {}, "ok"), args.format)
    return EXIT_OK


def _export_csv(t: Triple, nx: int, ny: int, path: str) -> None:
    xs = np.linspace(0.0, 2.0 * math.pi, nx, endpoint=False)
    ys = np.linspace(0.0, 2.0 * math.pi, ny, endpoint=False)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write("x,y,F1,F2,F3,F4,F5,F6\n")
        for x in xs:
            F = immersion(t, x, ys)  # shape (6, ny)
            for j in range(ny):
                row = [x, ys[j]] + [F[i, j] for i in range(6)]
                fh.write(",".join(_fmt_float(float(v)) for v in row) + "\n")


def _export_obj(t: Triple, nx: int, ny: int, axes: tuple[int, int, int], path: str) -> None:
    degree = classify(t).covering_degree
    xs = np.linspace(0.0, 2.0 * math.pi, nx, endpoint=False)
    ys = np.linspace(0.0, 2.0 * math.pi, ny, endpoint=False)
    xg, yg = np.meshgrid(xs, ys, indexing="ij")
    F = immersion(t, xg, yg)
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(f"# {t.label()} sampled on a {nx}x{ny} grid over [0,2pi)^2\n")
        fh.write(f"# axes: orthogonal projection onto coordinates {axes[0]},{axes[1]},{axes[2]} of R^6\n")
        if degree == 2:
            fh.write("# covering: the parameter torus double-covers this surface;\n")
            fh.write("# the identification is NOT collapsed, both sheets are present\n")
        else:
            fh.write("# covering: one-to-one parameterization\n")
        for ix in range(nx):
            for iy in range(ny):
                coords = (F[axes[0] - 1, ix, iy], F[axes[1] - 1, ix, iy], F[axes[2] - 1, ix, iy])
                fh.write("v " + " ".join(_fmt_float(float(v)) for v in coords) + "\n")
        for ix in range(nx):
            for iy in range(ny):
                v00 = ix * ny + iy + 1
                v10 = ((ix + 1) % nx) * ny + iy + 1
                v11 = ((ix + 1) % nx) * ny + (iy + 1) % ny + 1
                v01 = ix * ny + (iy + 1) % ny + 1
                fh.write(f"f {v00} {v10} {v11} {v01}\n")


def cmd_export(args) -> int:
    t = _parse_triple(args)
    nx, ny = args.nx, args.ny
    if nx < 2 or ny < 2:
        raise InvalidTripleError("grid must be at least 2x2")
    if args.file_format == "obj":
        try:
            axes = tuple(int(s) for s in args.axes.split(","))
        except ValueError:
            raise InvalidTripleError(f"bad axes {args.axes!r}: expected i,j,k")
        if len(axes) != 3 or len(set(axes)) != 3 or not all(1 <= i <= 6 for i in axes):
            raise InvalidTripleError(
                f"bad axes {args.axes!r}: need three distinct indices in 1..6"
            )
    try:
        if args.file_format == "csv":
            _export_csv(t, nx, ny, args.out)
        else:
            _export_obj(t, nx, ny, axes, args.out)
    except OSError as exc:
        print(f"cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    payload = {
        "file": args.out,
        "file_format": args.file_format,
        "nx": nx,
        "ny": ny,
    }
    _emit(_envelope("export", t, payload, {}, "ok"), "json")
    return EXIT_OK


def cmd_table(args) -> int:
    """Landmark surfaces and the maximal-Klein-bottle equality check."""
    rows = []
    for case, a, b, c, note in [
        (Case.GENERALIZED, 0, 0, 1, "Clifford torus, metric halved"),
        (Case.GENERALIZED, 1, 1, 2, "equilateral torus, Lambda_1 maximizer"),
        (Case.GENERALIZED, 0, 1, 2, "maximal Klein bottle"),
        (Case.LAWSON, 1, 1, None, "Clifford torus in S^3"),
        (Case.LAWSON, 3, 1, None, "its bipolar surface is the maximal Klein bottle"),
    ]:
        t = validate(case, a, b, c)
        sc = classify(t)
        s, _ = area_closed(t)
        rows.append(
            {
                "surface": t.label(),
                "topology": sc.topology.value,
                "subcase": sc.subcase.value,
                "j": sc.j,
                "lambda": sc.lambda_value,
                "S": s,
                "note": note,
            }
        )
    s012, _ = area_closed(validate(Case.GENERALIZED, 0, 1, 2))
    bipolar = 12.0 * math.pi * complete_E(Modulus.from_k(2.0 * math.sqrt(2.0) / 3.0))
    residual = abs(s012 - bipolar) / s012
    k_half = Modulus.from_k(0.5)
    payload = {
        "rows": rows,
        "klein_bottle_equality": {
            "S_012": s012,
            "closed_form_2pi_8E_minus_3K": 2.0
            * math.pi
            * (8.0 * complete_E(k_half) - 3.0 * complete_K(k_half)),
            "bipolar_12piE": bipolar,
            "relative_residual": residual,
        },
    }
    status = "ok" if residual <= 1e-10 else "fail"
    _emit(_envelope("table", None, payload, {"klein_bottle_equality": "<= 1e-10"}, status), args.format)
    return EXIT_OK if status == "ok" else EXIT_VERIFICATION_FAILED


def cmd_landen(args) -> int:
    ks = np.linspace(0.0, 0.99, args.points)
    gaps = [abs(landen_gap(float(k))) for k in ks]
    worst = int(np.argmax(gaps))
    payload = {
        "points": args.points,
        "k_range": [0.0, 0.99],
        "max_abs_gap": gaps[worst],
        "argmax_k": float(ks[worst]),
    }
    status = "ok" if gaps[worst] <= 1e-10 else "fail"
    _emit(_envelope("landen", None, payload, {"max_abs_gap": "<= 1e-10"}, status), args.format)
    return EXIT_OK if status == "ok" else EXIT_VERIFICATION_FAILED


def build_parser() -> _Parser:
    parser = _Parser(prog="lawson", description=__doc__)
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add_triple_args(p):
        p.add_argument("params", type=int, nargs="+", metavar="N",
                       help="a b c (generalized) or a b with --lawson")
        p.add_argument("--lawson", action="store_true",
                       help="boundary case c^2 = a^2 + b^2 (classical tau-surface)")

    def add_format(p):
        p.add_argument("--format", choices=("json", "text"), default="json")

    p = sub.add_parser("classify", help="topology, subcase, index and functional value")
    add_triple_args(p)
    add_format(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("verify", help="run the full residual suite for one surface")
    add_triple_args(p)
    add_format(p)
    p.add_argument("--grid", type=int, default=None, help=f"spectral grid (default {DEFAULT_GRID})")
    p.add_argument("--deep", action="store_true",
                   help="double the grids and report convergence orders")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("spectrum", help="lowest eigenvalues of the separated problem")
    add_triple_args(p)
    add_format(p)
    p.add_argument("--l", type=int, default=0, help="separation frequency (default 0)")
    p.add_argument("--symmetry", choices=sorted(_SYMMETRY_NAMES), default="full")
    p.add_argument("--grid", type=int, default=None)
    p.add_argument("--count", type=int, default=8, help="number of eigenvalues")
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("export", help="sample the immersion to CSV or OBJ")
    add_triple_args(p)
    p.add_argument("--nx", type=int, default=DEFAULT_EXPORT_NX)
    p.add_argument("--ny", type=int, default=DEFAULT_EXPORT_NY)
    p.add_argument("--format", dest="file_format", choices=("csv", "obj"), default="csv")
    p.add_argument("--axes", default="1,3,5",
                   help="three distinct R^6 coordinates for the OBJ projection (default 1,3,5)")
    p.add_argument("--out", required=True, help="output path")
    p.set_defaults(func=cmd_export)

    p = sub.add_parser("table", help="landmark surfaces and their functional values")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("landen", help="sweep the Landen identity defect")
    add_format(p)
    p.add_argument("--points", type=int, default=100)
    p.set_defaults(func=cmd_landen)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvalidTripleError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT
    except SpectralError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except ValueError as exc:
        print(f"invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID_INPUT


if __name__ == "__main__":
    raise SystemExit(main())
