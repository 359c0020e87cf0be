"""``bernstein-kit``: tabulate, verify and convert from the command line.

Exit codes: 0 success, 1 identity failure or impossible division, 2 usage or
configuration error (the message names the offending flag).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import basis_core as bc
from . import curves, poly_algebra, stochastic, verify
from .basis_core import BasisIndex, Interval
from .errors import NotDivisible
from .scalar import Backend, format_scalar, parse_scalar

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2

FLOAT_TOL = 1e-9


class UsageError(Exception):
    """Invalid configuration detected after argument parsing."""


def _emit(text: str, path: str | None) -> None:
    if path:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _dump_json(data) -> str:
    return json.dumps(data, indent=2) + "\n"


def _cell(value) -> str:
    out = format_scalar(value)
    return out if isinstance(out, str) else repr(out)


def _table(header: list[str], rows: list[list], fmt: str) -> str:
    if fmt == "json":
        return _dump_json([dict(zip(header, (format_scalar(v) for v in row))) for row in rows])
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([_cell(v) for v in row])
    return buf.getvalue()


def _interval(args, backend: Backend) -> Interval:
    try:
        a = parse_scalar(args.a, backend)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--a: cannot parse {args.a!r} as a number")
    try:
        b = parse_scalar(args.b, backend)
    except (ValueError, ZeroDivisionError):
        raise UsageError(f"--b: cannot parse {args.b!r} as a number")
    if a == b:
        raise UsageError("--b: interval endpoints must differ (a == b)")
    return Interval(a, b)


def _grid(iv: Interval, args, backend: Backend) -> list:
    inclusive = not args.exclude_ends
    if inclusive and args.grid < 2:
        raise UsageError("--grid: need at least 2 points when the ends are included")
    if args.grid < 1:
        raise UsageError("--grid: need at least 1 point")
    return [backend.coerce(x) for x in iv.exact().grid(args.grid, inclusive)]


def _require(args, *names: str) -> None:
    for name in names:
        if getattr(args, name) is None:
            raise UsageError(f"--{name.replace('_', '-')}: required for 'eval {args.object}'")
    if getattr(args, "n", None) is not None and args.n < 0:
        raise UsageError("--n: degree must be non-negative")


def cmd_eval(args) -> int:
    backend = Backend(args.backend)
    obj = args.object
    if obj == "curve":
        _require(args, "points_file")
        try:
            with open(args.points_file, encoding="utf-8") as fh:
                curve = curves.BezierCurve.from_json(json.load(fh), backend)
        except OSError as exc:
            raise UsageError(f"--points-file: {exc}")
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"--points-file: invalid curve JSON ({exc})")
        xs = _grid(curve.interval, args, backend)
        header = ["x", *(f"p{d}" for d in range(curve.dimension))]
        rows = [[x, *curves.bezier_eval(curve, x)] for x in xs]
        _emit(_table(header, rows, args.format), args.output)
        return EXIT_OK

    iv = _interval(args, backend)
    xs = _grid(iv, args, backend)
    if obj == "basis":
        _require(args, "n", "k")
        m = args.n if args.m is None else args.m
        idx = BasisIndex(args.n, args.k, m)
        rows = [[x, bc.eval_closed_form(idx, x, iv)] for x in xs]
        header = ["x", "value"]
    elif obj == "altsum":
        _require(args, "n")
        rows = [[x, bc.alternating_sum(args.n, x, iv)] for x in xs]
        header = ["x", "value"]
    elif obj == "pmf":
        _require(args, "n")
        rows = [[x, *stochastic.binomial_pmf(args.n, x, iv)] for x in xs]
        header = ["x", *(f"k{k}" for k in range(args.n + 1))]
    else:
        _require(args, "n", "i")
        if backend.exact:
            raise UsageError("--backend: Szasz basis values are transcendental; use --backend float")
        if args.n < 1:
            raise UsageError("--n: the Szasz parameter must be a positive integer")
        if args.i < 0:
            raise UsageError("--i: index must be non-negative")
        if iv.b < iv.a:
            raise UsageError("--b: Szasz functions need b > a")
        params = stochastic.SzaszBasisParams(args.n, iv)
        rows = [[x, stochastic.szasz_basis(params, args.i, x)] for x in xs]
        header = ["x", "value"]
    _emit(_table(header, rows, args.format), args.output)
    return EXIT_OK


def cmd_verify(args) -> int:
    backend = Backend(args.backend)
    if args.max_n is None:
        try:
            args.max_n = verify.default_max_n()
        except ValueError:
            raise UsageError(f"--max-n: environment variable {verify.MAX_N_ENV} is not an integer")
    if args.max_n < 0:
        raise UsageError("--max-n: must be non-negative")
    if args.workers is not None and args.workers < 1:
        raise UsageError("--workers: must be at least 1")
    if backend.exact:
        if args.tol not in (None, "0") and Fraction(args.tol) != 0:
            raise UsageError("--tol: the rational backend compares exactly; tolerance must be 0")
        tol = 0
    else:
        tol = FLOAT_TOL if args.tol is None else float(args.tol)
        if not tol > 0:
            raise UsageError("--tol: the float backend needs a positive tolerance")
    cfg = verify.VerifyConfig(
        backend=backend, max_n=args.max_n, tol=tol, family=args.family, weights=args.weights
    )
    report = verify.run(args.suite, cfg, args.workers)
    _emit(_dump_json(report), args.output)
    if report["verdict"] != "PASS":
        print("verification FAILED", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def _read_json(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise UsageError(f"--input: {exc}")
    except json.JSONDecodeError as exc:
        raise UsageError(f"--input: not valid JSON ({exc})")


def _nonneg_flag(value, flag: str) -> int:
    if value is None:
        raise UsageError(f"{flag}: required for this conversion")
    if value < 0:
        raise UsageError(f"{flag}: must be non-negative")
    return value


def cmd_convert(args) -> int:
    backend = Backend(args.backend)
    data = _read_json(args.input)
    op = args.op
    try:
        if op == "from-monomial":
            iv = Interval(parse_scalar(data["a"], backend), parse_scalar(data["b"], backend))
            seq = [parse_scalar(c, backend) for c in data["coeffs"]]
            p = poly_algebra.from_monomial(seq, iv, args.n, data.get("m"))
            _emit(_dump_json(p.to_json()), args.output)
            return EXIT_OK
        p = poly_algebra.BernsteinPoly.from_json(data, backend)
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"--input: invalid polynomial JSON ({exc})")

    if op == "to-monomial":
        out = {
            "a": format_scalar(p.interval.a),
            "b": format_scalar(p.interval.b),
            "basis": "monomial",
            "coeffs": [format_scalar(c) for c in poly_algebra.to_monomial(p)],
        }
        _emit(_dump_json(out), args.output)
        return EXIT_OK
    if op == "elevate":
        q = poly_algebra.elevate(p, _nonneg_flag(args.times, "--times"))
    else:
        if p.m != p.degree:
            p = p.normalized()
        try:
            if op == "mulxi":
                q = poly_algebra.multiply_by_xi_power(p, _nonneg_flag(args.d, "--d"))
            elif op == "muleta":
                q = poly_algebra.multiply_by_eta_power(p, _nonneg_flag(args.d, "--d"))
            elif op == "divxi":
                q = poly_algebra.divide_by_xi_power(p, _nonneg_flag(args.j, "--j"))
            else:
                q = poly_algebra.divide_by_eta_power(p, _nonneg_flag(args.j, "--j"))
        except NotDivisible as exc:
            print(f"NotDivisible: {exc}", file=sys.stderr)
            return EXIT_FAIL
    _emit(_dump_json(q.to_json()), args.output)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bernstein-kit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="tabulate a basis function, pmf or curve on a grid")
    ev.add_argument("object", choices=["basis", "altsum", "pmf", "szasz", "curve"])
    ev.add_argument("--n", type=int)
    ev.add_argument("--k", type=int)
    ev.add_argument("--m", type=int, help="normalization exponent (default: n)")
    ev.add_argument("--i", type=int, help="Szasz index")
    ev.add_argument("--a", default="0")
    ev.add_argument("--b", default="1")
    ev.add_argument("--grid", type=int, default=11, help="number of sample points")
    ev.add_argument("--exclude-ends", action="store_true", help="sample interior points only")
    ev.add_argument("--points-file", help="curve JSON with a, b and points")
    ev.add_argument("--backend", choices=[b.value for b in Backend], default="float")
    ev.add_argument("--format", choices=["csv", "json"], default="csv")
    ev.add_argument("--output")
    ev.set_defaults(func=cmd_eval)

    vf = sub.add_parser("verify", help="run identity-verification suites")
    vf.add_argument("--suite", choices=[*verify.SUITE_NAMES, "all"], default="all")
    vf.add_argument("--backend", choices=[b.value for b in Backend], default="rational")
    vf.add_argument("--max-n", type=int, help=f"degree cap (default ${verify.MAX_N_ENV} or {verify.DEFAULT_MAX_N})")
    vf.add_argument("--family", choices=["bernstein", "szasz", "both"], default="both")
    vf.add_argument("--weights", choices=["derived", "published", "both"], default="derived",
                    help="which weight sequences gate the orthogonality verdict")
    vf.add_argument("--tol", help=f"float tolerance (default {FLOAT_TOL}; rational is always exact)")
    vf.add_argument("--output")
    vf.add_argument("--workers", type=int)
    vf.set_defaults(func=cmd_verify)

    cv = sub.add_parser("convert", help="transform a Bernstein-form polynomial JSON file")
    cv.add_argument("op", choices=["elevate", "mulxi", "muleta", "divxi", "diveta", "to-monomial", "from-monomial"])
    cv.add_argument("--input", default="-", help="input JSON path ('-' for stdin)")
    cv.add_argument("--output")
    cv.add_argument("--times", type=int, default=1)
    cv.add_argument("--d", type=int)
    cv.add_argument("--j", type=int)
    cv.add_argument("--n", type=int, help="target degree for from-monomial")
    cv.add_argument("--backend", choices=[b.value for b in Backend], default="float")
    cv.set_defaults(func=cmd_convert)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        parser.error(str(exc))
    except ValueError as exc:
        parser.error(str(exc))
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
