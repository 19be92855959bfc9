"""
The five CLI commands. Each returns a Report whose exit_status follows the
contract 0 = success, 1 = semantic or validation failure, 2 = parse/IO error.
"""

from __future__ import annotations

from pathlib import Path
from typing import Any, Callable, Dict, Optional, Tuple, Union

from laq.dcx import assemble, e1_page, e2_page, total_cohomology
from laq.groupoid import check_face_degeneracy_identities, check_simplicial_identities, validate_groupoid
from laq.lagroupoid import (
    LAGroupoid,
    check_multiplicative,
    check_simplicial_q_structure,
    core_dims,
    nerve_algebroid,
    vacancy_check,
    validate_la,
)
from laq.shared.data_types import jsonable
from laq.shared.errors import LAQError, ModelParseError, NotValidated
from laq.utils.config import load_settings
from laq.utils.latency import Stopwatch
from laq.utils.logger import StructuredLogger

from . import model_io
from .report import Report
from .selftest import JACOBI_DRAWS, run_selftest

logger = StructuredLogger(__name__)

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_PARSE = 2

PathLike = Union[str, Path]
Window = Tuple[int, int]


def _execute(command: str, arguments: Dict[str, Any], body: Callable[[Report], None]) -> Report:
    report = Report(command=command, arguments=jsonable(arguments))
    logger.info(f"{command}: start {report.arguments}")
    with Stopwatch() as watch:
        try:
            body(report)
            report.exit_status = EXIT_OK if report.all_ok else EXIT_FAILURE
        except ModelParseError as exc:
            report.note(f"parse error: {exc}")
            report.exit_status = EXIT_PARSE
        except NotValidated as exc:
            result = exc.result
            if result is not None and getattr(result, "failure", None) is not None:
                report.add_check(result.failure.check, result)
            report.note(f"validation failed: {exc}")
            report.exit_status = EXIT_FAILURE
        except LAQError as exc:
            report.note(f"{type(exc).__name__}: {exc}")
            report.exit_status = EXIT_FAILURE
    report.timing_seconds = watch.elapsed
    logger.info(f"{command}: exit {report.exit_status} after {report.timing_seconds}s")
    return report


def _require_valid(l: LAGroupoid) -> None:
    verdict = validate_la(l)
    if not verdict.ok:
        raise NotValidated(f"model is not an LA-groupoid: {verdict.failure.message}", result=verdict)


def cmd_validate(path: PathLike, window: Optional[Window] = None) -> Report:
    """Groupoid axioms, fibers, LA-groupoid laws, multiplicativity and the simplicial checks."""
    window = window or load_settings().default_window
    q_max = window[1]

    def body(report: Report) -> None:
        l = model_io.load(path)
        checks = [
            report.add_check("groupoid_axioms", validate_groupoid(l.base)),
            report.add_check("side_fibers", l.side.validate()),
            report.add_check("top_fibers", l.top.validate()),
            report.add_check("simplicial_identities", check_simplicial_identities(l.base, q_max)),
            report.add_check("face_degeneracy_identities", check_face_degeneracy_identities(l.base, q_max)),
        ]
        if not all(checks):
            return
        if not report.add_check("la_groupoid", validate_la(l)):
            return
        if report.add_check("multiplicative", check_multiplicative(l)):
            report.add_check("simplicial_q_structure", check_simplicial_q_structure(l, q_max))
        report.add_table("core", ["arrow", "core dim"], sorted(core_dims(l).items()))
        report.note(f"vacant: {'yes' if vacancy_check(l) else 'no'}")

    return _execute("validate", {"file": str(path), "window": list(window)}, body)


def cmd_cohomology(path: PathLike, max_degree: int, window: Optional[Window] = None) -> Report:
    """Total cohomology dims H^0..H^max_degree; the default window is (N+1, N+1)."""
    window = window or (max_degree + 1, max_degree + 1)

    def body(report: Report) -> None:
        l = model_io.load(path)
        complex_ = assemble(l, *window)
        table = total_cohomology(complex_, max_degree)
        report.add_table("total_cohomology", ["n", "dim H^n"], list(enumerate(table.dims)))
        report.note(f"window: {table.window[0]},{table.window[1]}")

    return _execute(
        "cohomology",
        {"file": str(path), "max_degree": max_degree, "window": list(window)},
        body,
    )


def cmd_spectral(path: PathLike, page: int, orientation: str = "delta-first", window: Optional[Window] = None) -> Report:
    """E1 or E2 grid of one orientation; entries outside the certified region render as masked."""
    window = window or load_settings().default_window

    def body(report: Report) -> None:
        if page not in (1, 2):
            raise LAQError(f"page must be 1 or 2, got {page}.")
        l = model_io.load(path)
        complex_ = assemble(l, *window)
        grid = (e1_page if page == 1 else e2_page)(complex_, orientation)
        columns = ["p\\q"] + [str(q) for q in range(complex_.q_max + 1)]
        rows = [[p] + row for p, row in enumerate(grid.to_rows())]
        report.add_table(f"E{page} ({orientation})", columns, rows)

    return _execute(
        "spectral",
        {"file": str(path), "page": page, "orientation": orientation, "window": list(window)},
        body,
    )


def cmd_nerve(path: PathLike, q: int) -> Report:
    """Composable q-tuples and the fiber dimension of the nerve algebroid over each."""

    def body(report: Report) -> None:
        if q < 0:
            raise LAQError(f"nerve level must be non-negative, got {q}.")
        l = model_io.load(path)
        _require_valid(l)
        level = nerve_algebroid(l, q)
        report.add_table("nerve", ["tuple", "fiber dim"], [[t.label(), level.fiber(t).dim] for t in level.tuples])
        report.note(f"{len(level.tuples)} composable {q}-tuples")

    return _execute("nerve", {"file": str(path), "q": q}, body)


def cmd_selftest(seed: Optional[int] = None, draws: int = JACOBI_DRAWS) -> Report:
    """Run every acceptance criterion; the first failing one is named in the messages."""
    seed = load_settings().selftest_seed if seed is None else seed

    def body(report: Report) -> None:
        for outcome in run_selftest(seed, draws):
            report.add_check(outcome.name, outcome.result)
        failing = [check["name"] for check in report.checks if not check["ok"]]
        report.note(f"first failing criterion: {failing[0]}" if failing else "all criteria pass")

    return _execute("selftest", {"seed": seed, "draws": draws}, body)


__all__ = [
    "EXIT_OK",
    "EXIT_FAILURE",
    "EXIT_PARSE",
    "cmd_validate",
    "cmd_cohomology",
    "cmd_spectral",
    "cmd_nerve",
    "cmd_selftest",
]
