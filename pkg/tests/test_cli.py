import json

import pytest

from laq.cli import model_io
from laq.cli.commands import EXIT_FAILURE, EXIT_OK, EXIT_PARSE, cmd_cohomology, cmd_selftest, cmd_validate
from laq.cli.main import main
from laq.cli.report import Report, emit_json, emit_text, parse_report
from laq.cli.selftest import (
    check_counterexamples,
    check_finite_groups,
    check_jacobi_homological,
    check_simplicial,
    criteria,
)
from laq.shared.errors import ModelParseError


def run_json(capsys, *argv):
    status = main([*argv, "--format", "json"])
    report = parse_report(capsys.readouterr().out)
    assert report.exit_status == status
    return status, report


def column(report, table, index):
    return [row[index] for row in report.tables[table]["rows"]]


def check(report, name):
    return next(c for c in report.checks if c["name"] == name)


def test_validate_trivial_sl2(capsys, fixture_path):
    status, report = run_json(capsys, "validate", str(fixture_path("trivial_sl2.laq")))
    assert status == EXIT_OK
    assert report.all_ok
    assert [c["name"] for c in report.checks] == [
        "groupoid_axioms",
        "side_fibers",
        "top_fibers",
        "simplicial_identities",
        "face_degeneracy_identities",
        "la_groupoid",
        "multiplicative",
        "simplicial_q_structure",
    ]
    assert "vacant: yes" in report.messages


def test_validate_reports_the_broken_jacobi_triple(capsys, fixture_path):
    status, report = run_json(capsys, "validate", str(fixture_path("broken_jacobi.laq")))
    assert status == EXIT_FAILURE
    failure = check(report, "jacobi")["failure"]
    assert failure["kind"] == "JacobiFailure"
    assert failure["witness"]["triple"] == [0, 1, 2]


def test_validate_non_vacant_explicit_model(capsys, fixture_path):
    status, report = run_json(capsys, "validate", str(fixture_path("vacancy_counterexample.laq")))
    assert status == EXIT_OK
    assert "vacant: no" in report.messages
    assert report.tables["core"]["rows"] == [["g", 1]]


def test_validate_explicit_line(capsys, fixture_path):
    status, report = run_json(capsys, "validate", str(fixture_path("explicit_line.laq")))
    assert status == EXIT_OK
    assert report.tables["core"]["rows"] == [["1x", 0]]


def test_missing_format_tag_is_a_parse_error(capsys, tmp_path):
    model = tmp_path / "untagged.laq"
    model.write_text(json.dumps({"builder": "pair_zero", "points": ["a"]}))
    status, report = run_json(capsys, "validate", str(model))
    assert status == EXIT_PARSE
    assert any("$.format" in message for message in report.messages)


def test_malformed_json_reports_its_line(capsys, tmp_path):
    model = tmp_path / "broken.laq"
    model.write_text('{\n  "format": "laq-v1",\n  "builder": \n}\n')
    status, report = run_json(capsys, "cohomology", str(model))
    assert status == EXIT_PARSE
    assert any("line 4" in message for message in report.messages)


def test_missing_file_is_a_parse_error(capsys, tmp_path):
    status, _ = run_json(capsys, "nerve", str(tmp_path / "absent.laq"))
    assert status == EXIT_PARSE


def test_usage_errors_exit_two(capsys):
    assert main(["spectral"]) == EXIT_PARSE
    assert main(["cohomology", "x.laq", "--window", "three"]) == EXIT_PARSE
    capsys.readouterr()


@pytest.mark.parametrize(
    "name,degree,expected",
    [
        ("trivial_abelian2.laq", 3, [1, 2, 1, 0]),
        ("trivial_sl2.laq", 3, [1, 0, 0, 1]),
        ("z2_group.laq", 2, [1, 0, 0]),
        ("equivariant_swap.laq", 2, [1, 1, 0]),
        ("pair_2.laq", 2, [1, 0, 0]),
    ],
)
def test_cohomology_fixtures(capsys, fixture_path, name, degree, expected):
    status, report = run_json(capsys, "cohomology", str(fixture_path(name)), "--max-degree", str(degree))
    assert status == EXIT_OK
    assert column(report, "total_cohomology", 1) == expected
    assert f"window: {degree + 1},{degree + 1}" in report.messages


def test_cohomology_window_too_small(capsys, fixture_path):
    status, report = run_json(capsys, "cohomology", str(fixture_path("trivial_sl2.laq")), "--window", "2,2")
    assert status == EXIT_FAILURE
    assert any(message.startswith("WindowTooSmall") for message in report.messages)


def test_spectral_e2_masks_the_last_column(capsys, fixture_path):
    status, report = run_json(capsys, "spectral", str(fixture_path("trivial_sl2.laq")), "--page", "2")
    assert status == EXIT_OK
    table = report.tables["E2 (delta-first)"]
    assert table["columns"] == ["p\\q", "0", "1", "2", "3", "4"]
    assert column(report, "E2 (delta-first)", 1) == [1, 0, 0, 1, None]


def test_spectral_e1_of_equivariant_swap(capsys, fixture_path):
    status, report = run_json(
        capsys, "spectral", str(fixture_path("equivariant_swap.laq")), "--page", "1", "--window", "3,3"
    )
    assert status == EXIT_OK
    assert column(report, "E1 (delta-first)", 1)[:3] == [1, 1, 0]


def test_spectral_psi_first(capsys, fixture_path):
    status, report = run_json(
        capsys,
        "spectral",
        str(fixture_path("trivial_abelian2.laq")),
        "--page",
        "1",
        "--orientation",
        "psi-first",
        "--window",
        "3,3",
    )
    assert status == EXIT_OK
    assert column(report, "E1 (psi-first)", 1) == [1, 2, 1, None]


@pytest.mark.parametrize(
    "name,q,count,dims",
    [
        ("pair_2.laq", 3, 16, {0}),
        ("trivial_sl2.laq", 2, 1, {3}),
        ("equivariant_swap.laq", 1, 2, {2}),
    ],
)
def test_nerve_fixtures(capsys, fixture_path, name, q, count, dims):
    status, report = run_json(capsys, "nerve", str(fixture_path(name)), "--q", str(q))
    assert status == EXIT_OK
    assert len(report.tables["nerve"]["rows"]) == count
    assert set(column(report, "nerve", 1)) == dims
    assert f"{count} composable {q}-tuples" in report.messages


def test_flags_before_the_sub_command(capsys, fixture_path):
    status = main(["--format", "json", "nerve", str(fixture_path("pair_2.laq"))])
    report = parse_report(capsys.readouterr().out)
    assert status == EXIT_OK
    assert report.command == "nerve"


def test_text_report_marks_masked_entries(capsys, fixture_path):
    assert main(["spectral", str(fixture_path("trivial_sl2.laq"))]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("laq spectral: exit 0")
    assert "·" in out


@pytest.mark.parametrize("name", ["trivial_sl2.laq", "broken_jacobi.laq", "equivariant_swap.laq"])
def test_json_reports_round_trip(fixture_path, name):
    for report in (cmd_validate(fixture_path(name)), cmd_cohomology(fixture_path(name), 2)):
        assert parse_report(emit_json(report)) == report


def test_text_report_lists_failures():
    report = Report(command="validate", exit_status=EXIT_FAILURE)
    report.checks.append(
        {"name": "jacobi", "ok": False, "failure": {"message": "Jacobi fails.", "witness": {"triple": [0, 1, 2]}}}
    )
    text = emit_text(report)
    assert "FAIL jacobi: Jacobi fails. [triple=[0, 1, 2]]" in text


@pytest.mark.parametrize(
    "document,path",
    [
        ({"format": "laq-v2", "builder": "pair_zero", "points": ["a"]}, "$.format"),
        ({"format": "laq-v1"}, "$"),
        ({"format": "laq-v1", "builder": "mystery"}, "$.builder"),
        ({"format": "laq-v1", "builder": "pair_zero", "points": ["a"], "explicit": {}}, "$"),
    ],
)
def test_document_envelope_errors(document, path):
    with pytest.raises(ModelParseError) as info:
        model_io.document_from_data(document)
    assert info.value.witness["path"] == path


@pytest.mark.parametrize("value", [1.5, True, "1/0", "x", None])
def test_bad_rationals(value):
    with pytest.raises(ModelParseError):
        model_io.parse_rational(value, "$.r")


def test_rationals():
    assert model_io.parse_rational("-3/6", "$") == model_io.parse_rational(-1, "$") / 2
    assert model_io.parse_rational(4, "$") == 4


def test_matrix_shape_is_checked():
    with pytest.raises(ModelParseError) as info:
        model_io.parse_matrix([[1, 2], [3]], 2, 2, "$.m")
    assert info.value.witness["path"] == "$.m[1]"
    assert model_io.parse_matrix([], 0, 3, "$.m").shape == (0, 3)


def test_bracket_indices_are_one_based():
    algebra = model_io.parse_algebra({"dim": 2, "brackets": [[1, 2, 2, 1]]}, "$.a")
    assert algebra.structure_constant(0, 1, 1) == 1
    with pytest.raises(ModelParseError):
        model_io.parse_algebra({"dim": 2, "brackets": [[0, 1, 1, 1]]}, "$.a")


def test_duplicate_arrow_ids():
    groupoid = {
        "objects": ["*"],
        "arrows": [{"id": "e", "src": "*", "tgt": "*"}, {"id": "e", "src": "*", "tgt": "*"}],
        "mult": [["e", "e", "e"]],
        "units": {"*": "e"},
        "inverses": {"e": "e"},
    }
    with pytest.raises(ModelParseError) as info:
        model_io.parse_groupoid(groupoid, "$.groupoid")
    assert info.value.witness["path"] == "$.groupoid.arrows[1].id"


def test_product_document(tmp_path):
    model = tmp_path / "product.laq"
    model.write_text(
        json.dumps(
            {
                "format": "laq-v1",
                "builder": "product",
                "factors": [
                    {"builder": "trivial_algebroid", "algebroid": {"points": ["pt"], "algebra": {"catalog": "sl2"}}},
                    {"builder": "pair_zero", "points": ["a", "b"]},
                ],
            }
        )
    )
    l = model_io.load(model)
    assert len(l.base.objects) == 2
    assert {l.side_dim(x) for x in l.base.objects} == {3}


def test_non_utf8_input():
    with pytest.raises(ModelParseError) as info:
        model_io.parse(b'{"format": "\xff"}')
    assert info.value.column == 13


@pytest.mark.parametrize("criterion", [check_finite_groups, check_simplicial, check_counterexamples])
def test_selftest_criteria_pass(criterion):
    assert criterion().ok


def test_selftest_runs_every_criterion():
    report = cmd_selftest(7, draws=25)
    assert report.arguments == {"seed": 7, "draws": 25}
    assert [check["name"] for check in report.checks] == [name for name, _ in criteria(7)]
    assert report.all_ok
    assert report.exit_status == EXIT_OK
    assert report.messages == ["all criteria pass"]


def test_jacobi_draws_agree_with_the_homological_check():
    assert check_jacobi_homological(3, draws=60).ok


def swap_document(**action):
    return {
        "format": "laq-v1",
        "builder": "equivariant",
        "algebroid": {"points": ["pt"], "algebra": {"dim": 2, "brackets": []}},
        "group": {"catalog": "cyclic", "order": 2},
        "action": action,
    }


@pytest.mark.parametrize(
    "action,path",
    [
        ({"moves": [["pt", "0", "pt"], ["pt", "7", "pt"]]}, "$.action.moves[1]"),
        ({"moves": [["pt", "0", "elsewhere"]]}, "$.action.moves[0]"),
        ({"lifts": {"7": {"pt": [[1, 0], [0, 1]]}}}, "$.action.lifts.7"),
    ],
)
def test_unknown_names_in_an_action_exit_two(capsys, tmp_path, action, path):
    model = tmp_path / "stray.laq"
    model.write_text(json.dumps(swap_document(**action)))
    status, report = run_json(capsys, "cohomology", str(model))
    assert status == EXIT_PARSE
    assert any(path in message for message in report.messages)


def test_unknown_lift_arrow_in_a_vacant_document():
    document = {
        "format": "laq-v1",
        "builder": "vacant",
        "groupoid": {"catalog": "cyclic", "order": 2},
        "algebroid": {"points": ["*"], "algebra": {"dim": 1, "brackets": []}},
        "lifts": {"5": [[1]]},
    }
    with pytest.raises(ModelParseError) as info:
        model_io.build(model_io.document_from_data(document))
    assert info.value.witness["path"] == "$.lifts.5"


def test_deeply_nested_input_is_a_parse_error(capsys, tmp_path):
    with pytest.raises(ModelParseError, match="nesting too deep"):
        model_io.parse("[" * 100000 + "]" * 100000)
    model = tmp_path / "nested.laq"
    model.write_text("[" * 100000 + "]" * 100000)
    status, _ = run_json(capsys, "validate", str(model))
    assert status == EXIT_PARSE
