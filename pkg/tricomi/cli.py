# tricomi/cli.py
"""Command-line front end.

    python -m tricomi eval --n 1 --x 0 --y -1 --quantity f_minus
    python -m tricomi grid --n 1 --quantity f_plus --x-axis 0 2 41 --y-axis -1 1 41 --out grid.csv
    python -m tricomi verify wronskian spectral-jumps --out reports.jsonl
    python -m tricomi serve --port 8000

Exit codes: 0 success, 1 failed verification, 2 singular locus, 64 usage, 73 output I/O.
"""
import argparse
import logging
import sys
from typing import Sequence

from pydantic import ValidationError

from tricomi.core.config import settings, setup_logging
from tricomi.core.errors import ParameterError, SingularLocusError, TricomiError
from tricomi.schemas.common import Quantity
from tricomi.schemas.fundsol import SpacetimePoint
from tricomi.schemas.grid import AxisSpec, GridSpec
from tricomi.schemas.verify import VerificationReport

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERIFY_FAILED = 1
EXIT_SINGULAR = 2
EXIT_USAGE = 64
EXIT_IO = 73


class UsageError(Exception):
    pass


class ArgumentParser(argparse.ArgumentParser):
    """argparse that reports usage errors with exit code 64."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _axis(values: list[str]) -> AxisSpec:
    lo, hi, count = values
    try:
        return AxisSpec(min=float(lo), max=float(hi), count=int(count))
    except (ValueError, ValidationError) as e:
        raise UsageError(f"bad axis {values}: {e}") from e


def parse_point(n: int, x: str, y: float) -> SpacetimePoint:
    """--x is either the full comma-separated vector or, for n > 1, a single |x|."""
    try:
        coords = [float(v) for v in x.split(",")]
    except ValueError as e:
        raise UsageError(f"--x must be numbers separated by commas, got {x!r}") from e
    try:
        if len(coords) == 1 and n > 1:
            return SpacetimePoint.on_ray(n, abs(coords[0]), y)
        if len(coords) != n:
            raise UsageError(f"--x has {len(coords)} components but --n is {n}")
        return SpacetimePoint(x=tuple(coords), y=y)
    except ValidationError as e:
        raise UsageError(str(e)) from e


def build_parser() -> ArgumentParser:
    from tricomi.services.pairing import PAIRING_DIMENSION_NOTE

    parser = ArgumentParser(prog="tricomi", description="Fundamental solutions of the generalized Tricomi operator.")
    parser.add_argument("--log-level", default=None, help=f"Logging level (default: {settings.LOG_LEVEL}).")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=ArgumentParser)

    p = commands.add_parser("eval", help="Evaluate one quantity at one point.")
    p.add_argument("--n", type=int, required=True, help="Spatial dimension.")
    p.add_argument("--x", required=True, help="Comma list x_1,...,x_n, or |x| when n > 1.")
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--quantity", type=Quantity, choices=list(Quantity), default=Quantity.F_MINUS)

    p = commands.add_parser("grid", help="Tabulate a quantity on an (|x|, y) grid as CSV.")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--quantity", type=Quantity, choices=list(Quantity), default=Quantity.F_MINUS)
    p.add_argument("--x-axis", nargs=3, required=True, metavar=("MIN", "MAX", "COUNT"))
    p.add_argument("--y-axis", nargs=3, required=True, metavar=("MIN", "MAX", "COUNT"))
    p.add_argument("--out", default="-", help="CSV path, or - for stdout.")

    p = commands.add_parser("verify", help="Run verification suites.", epilog=PAIRING_DIMENSION_NOTE)
    p.add_argument("suites", nargs="+", help="Suite names, or all.")
    p.add_argument("--out", default=None, help="JSON-lines report path, or - for stdout.")
    p.add_argument("--threads", type=int, default=None, help="Worker threads (default: TRICOMI_THREADS).")

    p = commands.add_parser("serve", help="Run the HTTP API.")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)
    return parser


# --- commands ---
def cmd_eval(args: argparse.Namespace) -> int:
    from tricomi.services.fundsol import evaluate

    if args.n < 1:
        raise UsageError("--n must be >= 1")
    p = parse_point(args.n, args.x, args.y)
    result = evaluate(args.quantity, args.n, p)
    value = result.value
    print(value if isinstance(value, str) else format(value, ".15g"))
    return EXIT_OK


def cmd_grid(args: argparse.Namespace) -> int:
    from tricomi.services.grid import build_grid, write_grid_csv

    try:
        spec = GridSpec(n=args.n, x_axis=_axis(args.x_axis), y_axis=_axis(args.y_axis), quantity=args.quantity)
    except ValidationError as e:
        raise UsageError(str(e)) from e
    frame = build_grid(spec)
    try:
        write_grid_csv(frame, sys.stdout if args.out == "-" else args.out)
    except OSError as e:
        print(f"cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_OK


def summary_table(reports: list[VerificationReport]) -> str:
    width = max((len(r.name) for r in reports), default=10)
    lines = [f"{'check':<{width}}  {'status':<6}  {'abs_err':>10}  {'tol':>8}"]
    for r in reports:
        lines.append(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL':<6}  {r.abs_err:>10.3g}  {r.tol:>8.2g}")
    passed = sum(r.passed for r in reports)
    lines.append(f"{passed}/{len(reports)} checks passed")
    return "\n".join(lines)


def cmd_verify(args: argparse.Namespace) -> int:
    from tricomi.services.verify import resolve_selection, run_suite

    try:
        resolve_selection(args.suites)
    except ParameterError as e:
        raise UsageError(str(e)) from e
    table_stream = sys.stderr if args.out == "-" else sys.stdout
    try:
        if args.out is None:
            reports = run_suite(args.suites, threads=args.threads)
        elif args.out == "-":
            reports = run_suite(args.suites, sys.stdout, threads=args.threads)
        else:
            with open(args.out, "w", encoding="utf-8", newline="\n") as sink:
                reports = run_suite(args.suites, sink, threads=args.threads)
    except OSError as e:
        print(f"cannot write {args.out}: {e}", file=sys.stderr)
        return EXIT_IO
    print(summary_table(reports), file=table_stream)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY_FAILED


def cmd_serve(args: argparse.Namespace) -> int:
    import uvicorn

    uvicorn.run("tricomi.main:app", host=args.host, port=args.port, log_level=(args.log_level or settings.LOG_LEVEL).lower())
    return EXIT_OK


COMMANDS = {"eval": cmd_eval, "grid": cmd_grid, "verify": cmd_verify, "serve": cmd_serve}


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    setup_logging(args.log_level)
    try:
        return COMMANDS[args.command](args)
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except SingularLocusError as e:
        print(f"singular locus: {e}", file=sys.stderr)
        return EXIT_SINGULAR
    except TricomiError as e:
        if isinstance(e, ValueError):
            print(f"usage error: {e}", file=sys.stderr)
            return EXIT_USAGE
        log.error(f"{args.command} failed: {e}", exc_info=True)
        return EXIT_VERIFY_FAILED
