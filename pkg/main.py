import argparse
import logging
import sys
from typing import List, Optional

import orjson

from constants import (
    ALGEBRAS,
    DEFAULT_FORMAT,
    DEFAULT_N,
    FORMATS,
    MAX_GRASSMANN_N,
    MAX_WORKERS,
    MULT_TABLE_N_RANGE,
    ROOT_ATLAS_N_RANGE,
    SUITES,
    TABLE_IDS,
    VERBS,
    W_MIN_N,
)
from src.atlas.tables import render
from src.verification.report import VerificationReport
from src.workbench import Workbench


def create_parser():
    """Create argument parser with verb selection"""
    parser = argparse.ArgumentParser(
        description="Workbench for the Cartan-type superalgebras W(n), S(n) and sl(1|n)",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
Examples:
  # Level dimensions
  python main.py dims --algebra w --n 4

  # Root table of W(3)
  python main.py roots --n 3 --format tsv

  # Grading and multiplicity tables
  python main.py table --table grading-s --n 5
  python main.py table --table mult-20 --n 6 --format records

  # Verification suites
  python main.py verify --suite all --n 3
  python main.py verify --suite ideal --n 5 --threads 1 -v
        """,
    )

    parser.add_argument("verb", choices=VERBS, help="Operation to run")
    parser.add_argument(
        "--algebra",
        choices=ALGEBRAS,
        default="w",
        help="Algebra for dims (default: w)",
    )
    parser.add_argument(
        "--n",
        type=int,
        default=DEFAULT_N,
        help=f"Number of odd generators (default: {DEFAULT_N})",
    )
    parser.add_argument(
        "--suite",
        choices=SUITES,
        default="all",
        help="Verification suite for verify (default: all)",
    )
    parser.add_argument(
        "--table",
        choices=TABLE_IDS,
        help="Table id (required for table)",
    )
    parser.add_argument(
        "--format",
        choices=FORMATS,
        default=DEFAULT_FORMAT,
        help=f"Output format (default: {DEFAULT_FORMAT})",
    )
    parser.add_argument(
        "--threads",
        type=int,
        default=MAX_WORKERS,
        help=f"Number of parallel verification workers (default: {MAX_WORKERS})",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="Debug logging and progress bars")

    return parser


def _usage_error(message: str):
    print(f"Error: {message}", file=sys.stderr)
    print("Usage: python main.py {dims|roots|table|verify} [--n N] [options]", file=sys.stderr)
    sys.exit(2)


def _require_range(n: int, low: int, high: int, what: str):
    if not low <= n <= high:
        _usage_error(f"{what} needs {low} <= n <= {high}, got {n}")


def validate_args(args):
    """Validate verb-specific requirements"""
    if args.threads < 1:
        _usage_error("--threads must be at least 1")
    if args.verb == "dims":
        if args.algebra == "sl1n":
            _require_range(args.n, 1, MAX_GRASSMANN_N, "sl(1|n)")
        else:
            _require_range(args.n, W_MIN_N, MAX_GRASSMANN_N, f"{args.algebra.upper()}(n)")
    elif args.verb == "roots":
        _require_range(args.n, *ROOT_ATLAS_N_RANGE, "roots")
    elif args.verb == "table":
        if not args.table:
            _usage_error("--table is required for table")
        if args.table == "roots":
            _require_range(args.n, *ROOT_ATLAS_N_RANGE, "roots table")
        elif args.table.startswith("mult-"):
            _require_range(args.n, *MULT_TABLE_N_RANGE, f"{args.table} table")
        else:
            _require_range(args.n, W_MIN_N, MAX_GRASSMANN_N, f"{args.table} table")
    elif args.verb == "verify":
        if args.n < 1:
            _usage_error(f"n must be positive, got {args.n}")


def render_reports(reports: List[VerificationReport], fmt: str) -> str:
    """Verification results as a document on stdout; failing labels and residuals included"""
    if fmt == "records":
        data = [report.to_record() for report in reports]
        return orjson.dumps(data, option=orjson.OPT_INDENT_2 | orjson.OPT_SORT_KEYS).decode() + "\n"
    rows = [report.summary() for report in reports]
    document = render(("check", "passed", "checks", "failures"), rows, fmt)
    lines = []
    for report in reports:
        if report.error:
            lines.append(f"ERROR [{report.check_id}] {report.error}")
        for outcome in report.failures:
            detail = outcome.residual if outcome.residual is not None else f"expected {outcome.expected}, got {outcome.actual}"
            lines.append(f"FAIL [{report.check_id}] {outcome.label}: {detail}")
    if lines and fmt == "text":
        document += "\n" + "\n".join(lines) + "\n"
    elif lines:
        print("\n".join(lines), file=sys.stderr)
    return document


def run(argv: Optional[List[str]] = None) -> int:
    """Parse argv, run the verb and return the process exit code"""
    parser = create_parser()
    try:
        args = parser.parse_args(argv)
        validate_args(args)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2

    logging.basicConfig(
        stream=sys.stderr,
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )

    workbench = Workbench(max_workers=args.threads)
    try:
        if args.verb == "dims":
            sys.stdout.write(workbench.dims(args.algebra, args.n, args.format))
        elif args.verb == "roots":
            sys.stdout.write(workbench.roots(args.n, args.format))
        elif args.verb == "table":
            sys.stdout.write(workbench.table(args.table, args.n, args.format))
        else:
            reports = workbench.verify(args.suite, args.n)
            sys.stdout.write(render_reports(reports, args.format))
            return 0 if all(report.passed for report in reports) else 1
    except ValueError as e:
        print(f"Error: {e}", file=sys.stderr)
        return 2
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
