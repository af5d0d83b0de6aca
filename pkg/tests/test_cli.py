import json

import pytest
from click.testing import CliRunner

from gotas.cli import (
    EXIT_CHECK_FAILED,
    EXIT_INPUT_ERROR,
    DocumentError,
    load_space,
    main,
    parse_document,
)

TOPOLOGY_GOLDEN = """\
{}
{a}
{a, b}
{c, d}
{a, c, d}
{a, b, c, d}
count: 6
"""

PROBE_DOC = {
    "universe": ["a", "b", "c"],
    "base": [["a"], ["b"]],
    "order": [],
}


@pytest.fixture
def runner():
    return CliRunner()


def write_doc(tmp_path, payload, name="space.json"):
    path = tmp_path / name
    path.write_text(json.dumps(payload), encoding="utf-8")
    return str(path)


class TestTopologyCommand:
    def test_worked_example_golden_output(self, runner, example_doc):
        result = runner.invoke(main, ["topology", str(example_doc)])
        assert result.exit_code == 0
        assert result.output == TOPOLOGY_GOLDEN

    def test_empty_base_gives_two_opens(self, runner, tmp_path):
        doc = write_doc(tmp_path, {"universe": ["a", "b"], "base": [], "order": []})
        result = runner.invoke(main, ["topology", doc])
        assert result.exit_code == 0
        assert result.output == "{}\n{a, b}\ncount: 2\n"

    def test_relation_mode(self, runner, tmp_path):
        doc = write_doc(
            tmp_path,
            {
                "universe": ["a", "b"],
                "relation": [["a", "a"], ["b", "a"], ["b", "b"]],
                "order": [],
            },
        )
        result = runner.invoke(main, ["topology", doc])
        assert result.exit_code == 0
        assert result.output == "{}\n{a}\n{a, b}\ncount: 3\n"

    def test_invalid_order_is_an_input_error(self, runner, tmp_path):
        doc = write_doc(
            tmp_path,
            {"universe": ["a", "b"], "base": [], "order": [["a", "b"], ["b", "a"]]},
        )
        result = runner.invoke(main, ["topology", doc])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "antisymmetry" in result.stderr


class TestAnalyzeCommand:
    def test_beta_dec_row(self, runner, example_doc):
        result = runner.invoke(
            main,
            ["analyze", str(example_doc), "--set", "a,c",
             "--family", "beta", "--direction", "dec"],
        )
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[0] == "A = {a, c}"
        assert len(lines) == 3  # header plus the single filtered row
        row = lines[2]
        for cell in ("beta", "Dec", "{a, c}", "{a, b, c}", "{b}", "2/3", "rough"):
            assert cell in row

    def test_full_table_has_ten_rows(self, runner, example_doc):
        result = runner.invoke(main, ["analyze", str(example_doc), "--set", "a,c"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert len(lines) == 12  # title, header, ten rows
        families = [line.split()[0] for line in lines[2:]]
        assert families == ["R", "R", "S", "S", "P", "P",
                            "gamma", "gamma", "beta", "beta"]
        directions = [line.split()[1] for line in lines[2:]]
        assert directions == ["Inc", "Dec"] * 5

    def test_empty_set_is_exact_everywhere(self, runner, example_doc):
        result = runner.invoke(main, ["analyze", str(example_doc), "--set", ""])
        assert result.exit_code == 0
        for line in result.output.splitlines()[2:]:
            assert line.endswith("exact")
            assert line.split()[-2] == "1"  # accuracy column

    def test_gamma_inc_row(self, runner, example_doc):
        result = runner.invoke(
            main,
            ["analyze", str(example_doc), "--set", "a,c",
             "--family", "gamma", "--direction", "inc"],
        )
        assert result.exit_code == 0
        row = result.output.splitlines()[2]
        assert "{a, c}" in row and "{a, b, c, d}" in row

    def test_json_round_trip_matches_table(self, runner, example_doc):
        table = runner.invoke(main, ["analyze", str(example_doc), "--set", "a,c"])
        as_json = runner.invoke(
            main, ["analyze", str(example_doc), "--set", "a,c", "--format", "json"]
        )
        assert as_json.exit_code == 0
        payload = json.loads(as_json.output)
        assert payload["set"] == ["a", "c"]
        assert len(payload["rows"]) == 10
        table_rows = table.output.splitlines()[2:]
        for row, line in zip(payload["rows"], table_rows):
            for key in ("lower", "upper", "boundary", "positive", "negative"):
                rendered = "{" + ", ".join(row[key]) + "}"
                assert rendered in line
            assert row["accuracy"] in line
            assert ("exact" if row["exact"] else "rough") in line

    def test_unknown_label_is_an_input_error(self, runner, example_doc):
        result = runner.invoke(main, ["analyze", str(example_doc), "--set", "a,z"])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "unknown label" in result.stderr


class TestCheckCommand:
    def test_worked_example_exhaustive_all_pass(self, runner, example_doc):
        result = runner.invoke(main, ["check", str(example_doc), "--exhaustive"])
        assert result.exit_code == 0
        lines = result.output.splitlines()
        assert lines[-1] == "result: all laws hold"
        assert all("PASS" in line for line in lines[:-1])
        assert not any("FAIL" in line for line in lines)

    def test_json_format(self, runner, example_doc):
        result = runner.invoke(
            main, ["check", str(example_doc), "--exhaustive", "--format", "json"]
        )
        assert result.exit_code == 0
        payload = json.loads(result.output)
        assert payload["all_pass"] is True
        assert payload["mode"] == "exhaustive"
        assert {p["id"] for p in payload["propositions"]} >= {"sandwich", "3.2", "duality"}
        assert all(p["pass"] for p in payload["propositions"])

    def test_exhaustive_over_cap_is_an_input_error(self, runner, tmp_path):
        doc = write_doc(
            tmp_path,
            {"universe": list("abcdef"), "base": [], "order": []},
        )
        result = runner.invoke(main, ["check", doc, "--exhaustive"])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "cap" in result.stderr

    def test_sampled_mode_on_larger_space(self, runner, tmp_path):
        doc = write_doc(
            tmp_path,
            {
                "universe": list("abcdef"),
                "base": [["a"], ["a", "b"], ["c", "d"], ["e", "f"]],
                "order": [],
            },
        )
        result = runner.invoke(main, ["check", doc, "--samples", "40", "--seed", "7"])
        assert result.exit_code == 0

    def test_exclusive_flags(self, runner, example_doc):
        result = runner.invoke(
            main, ["check", str(example_doc), "--exhaustive", "--samples", "5"]
        )
        assert result.exit_code == EXIT_INPUT_ERROR

    def test_corrupted_fixture_mode_fails(self, runner, tmp_path):
        doc = write_doc(tmp_path, PROBE_DOC)
        result = runner.invoke(main, ["check", doc, "--exhaustive", "--corrupt-gamma"])
        assert result.exit_code == EXIT_CHECK_FAILED
        assert "FAIL" in result.output
        assert "result: violations found" in result.output


class TestOracleDiffCommand:
    def test_worked_example(self, runner, example_doc):
        result = runner.invoke(main, ["oracle-diff", str(example_doc)])
        assert result.exit_code == 0
        assert result.output == "0 mismatches / 64 comparisons\n"

    def test_singleton_universe(self, runner, tmp_path):
        doc = write_doc(tmp_path, {"universe": ["x"], "base": [], "order": []})
        result = runner.invoke(main, ["oracle-diff", doc])
        assert result.exit_code == 0
        assert result.output == "0 mismatches / 8 comparisons\n"

    def test_cap_from_environment(self, runner, example_doc, monkeypatch):
        monkeypatch.setenv("GOTAS_ORACLE_CAP", "3")
        result = runner.invoke(main, ["oracle-diff", str(example_doc)])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "cap 3" in result.stderr

    def test_invalid_cap_value(self, runner, example_doc, monkeypatch):
        monkeypatch.setenv("GOTAS_ORACLE_CAP", "lots")
        result = runner.invoke(main, ["oracle-diff", str(example_doc)])
        assert result.exit_code == EXIT_INPUT_ERROR


class TestDocumentParsing:
    def test_json_error_reports_line(self):
        with pytest.raises(DocumentError, match="line 2"):
            parse_document('{\n  "universe": [,]\n}', source="bad.json")

    def test_relation_and_base_are_exclusive(self):
        with pytest.raises(DocumentError, match="exactly one"):
            parse_document(json.dumps({
                "universe": ["a"], "base": [], "relation": [], "order": [],
            }))
        with pytest.raises(DocumentError, match="exactly one"):
            parse_document(json.dumps({"universe": ["a"], "order": []}))

    def test_unknown_field_rejected(self):
        with pytest.raises(DocumentError, match="unknown field"):
            parse_document(json.dumps({
                "universe": ["a"], "base": [], "order": [], "extra": 1,
            }))

    def test_order_labels_must_resolve(self, tmp_path):
        doc = tmp_path / "doc.json"
        doc.write_text(json.dumps({
            "universe": ["a"], "base": [], "order": [["a", "z"]],
        }))
        with pytest.raises(ValueError, match="unknown label"):
            load_space(doc)

    def test_auto_reflexive_off_requires_loops(self, runner, tmp_path):
        doc = write_doc(tmp_path, {
            "universe": ["a", "b"],
            "base": [],
            "order": [["a", "b"]],
            "options": {"auto_reflexive": False},
        })
        result = runner.invoke(main, ["topology", doc])
        assert result.exit_code == EXIT_INPUT_ERROR
        assert "reflexivity" in result.stderr

    def test_missing_file(self, runner):
        result = runner.invoke(main, ["topology", "no-such-file.json"])
        assert result.exit_code == EXIT_INPUT_ERROR
