"""
Console entry point: `laq <command> ...` or `python -m laq <command> ...`.

Reports go to standard output (aligned text, or one JSON document with
--format json); logging goes to standard error.
"""

from __future__ import annotations

import argparse
import sys
from typing import Optional, Sequence, Tuple

from laq.dcx import ORIENTATIONS
from laq.utils.config import load_settings, parse_window
from laq.utils.logger import configure_logging

from .commands import EXIT_PARSE, cmd_cohomology, cmd_nerve, cmd_selftest, cmd_spectral, cmd_validate
from .report import Report, emit_json, emit_text
from .selftest import JACOBI_DRAWS


def _window(text: str) -> Tuple[int, int]:
    try:
        return parse_window(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from exc


def _global_flags(default_format: object, default_window: object) -> argparse.ArgumentParser:
    flags = argparse.ArgumentParser(add_help=False)
    flags.add_argument("--format", choices=("text", "json"), default=default_format, help="report format")
    flags.add_argument("--window", type=_window, default=default_window, metavar="P,Q", help="override the double-complex window")
    return flags


def build_parser() -> argparse.ArgumentParser:
    # flags may appear before or after the sub-command
    common = _global_flags(argparse.SUPPRESS, argparse.SUPPRESS)
    ap = argparse.ArgumentParser(
        prog="laq",
        description="Cohomology of LA-groupoids over finite bases.",
        parents=[_global_flags("text", None)],
    )
    sub = ap.add_subparsers(dest="command", required=True)

    validate = sub.add_parser("validate", parents=[common], help="check a model's axioms")
    validate.add_argument("file")

    cohomology = sub.add_parser("cohomology", parents=[common], help="total cohomology dimensions")
    cohomology.add_argument("file")
    cohomology.add_argument("--max-degree", type=int, default=3, dest="max_degree")

    spectral = sub.add_parser("spectral", parents=[common], help="E1 or E2 page of a spectral sequence")
    spectral.add_argument("file")
    spectral.add_argument("--page", type=int, choices=(1, 2), default=2)
    spectral.add_argument("--orientation", choices=ORIENTATIONS, default="delta-first")

    nerve = sub.add_parser("nerve", parents=[common], help="composable tuples and nerve fiber dimensions")
    nerve.add_argument("file")
    nerve.add_argument("--q", type=int, default=1)

    selftest = sub.add_parser("selftest", parents=[common], help="run the acceptance suite")
    selftest.add_argument("--seed", type=int, default=None)
    selftest.add_argument("--draws", type=int, default=JACOBI_DRAWS, help="random bracket tables for the Jacobi check")
    return ap


def run(args: argparse.Namespace) -> Report:
    if args.command == "validate":
        return cmd_validate(args.file, args.window)
    if args.command == "cohomology":
        return cmd_cohomology(args.file, args.max_degree, args.window)
    if args.command == "spectral":
        return cmd_spectral(args.file, args.page, args.orientation, args.window)
    if args.command == "nerve":
        return cmd_nerve(args.file, args.q)
    return cmd_selftest(args.seed, args.draws)


def main(argv: Optional[Sequence[str]] = None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return int(exc.code or 0) and EXIT_PARSE
    configure_logging(load_settings().log_level)
    report = run(args)
    sys.stdout.write(emit_json(report) + "\n" if args.format == "json" else emit_text(report))
    return report.exit_status


if __name__ == "__main__":
    raise SystemExit(main())
