from dataclasses import fields
from fractions import Fraction

from laq.cli import model_io
from laq.cli.report import Report, emit_json, parse_report
from laq.dcx import assemble, total_cohomology
from laq.lagroupoid import validate_la
from laq.shared.data_types import CheckResult, JacobiFailure, jsonable
from laq.shared.json_formats import (
    MODEL_EXAMPLE,
    MODEL_EXPLICIT_EXAMPLE,
    MODEL_JSON_SCHEMA,
    REPORT_EXAMPLE,
    REPORT_JSON_SCHEMA,
)


def test_model_example_builds_the_swap_action():
    l = model_io.build(model_io.document_from_data(MODEL_EXAMPLE))
    assert validate_la(l).ok
    assert total_cohomology(assemble(l, 3, 3), 2).dims == (1, 1, 0)


def test_explicit_model_example_builds():
    l = model_io.build(model_io.document_from_data(MODEL_EXPLICIT_EXAMPLE))
    assert l.base.arrows == ("1x",)
    assert validate_la(l).ok


def test_report_example_round_trips():
    report = Report(**REPORT_EXAMPLE)
    assert parse_report(emit_json(report)) == report
    assert report.all_ok


def test_report_schema_names_every_field():
    assert set(REPORT_JSON_SCHEMA["required"]) == {f.name for f in fields(Report)}
    assert MODEL_JSON_SCHEMA["required"] == ["format"]


def test_jsonable_payloads():
    assert jsonable({"r": Fraction(3, 6), "n": Fraction(4), "pair": ("a", 1)}) == {
        "r": "1/2",
        "n": 4,
        "pair": ["a", 1],
    }


def test_check_result_truthiness():
    assert CheckResult.passed()
    failed = CheckResult.failed(JacobiFailure("jacobi", "Jacobi fails.", {"triple": (0, 1, 2)}))
    assert not failed
    assert failed.failure.to_dict()["kind"] == "JacobiFailure"
    assert failed.failure.to_dict()["witness"] == {"triple": [0, 1, 2]}
