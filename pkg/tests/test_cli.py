"""CLI surface: analyze reports, DOT export, the sweep driver."""

import json
import re

import pytest
from click.testing import CliRunner

from stonekit import (
    EX_74,
    EX_213,
    EX_75,
    FiniteGroupAction,
    FinitePoset,
    FiniteT0Space,
    SweepFailed,
    SweepReport,
    document_for,
    dumps_document,
    j_x,
    to_inclusion_data,
)
from stonekit.cli import main


def write_model(tmp_path, name, model):
    path = tmp_path / name
    path.write_text(dumps_document(document_for(model)))
    return str(path)


def write_raw(tmp_path, name, text):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


CHAIN_DOC = '{"kind": "lattice", "payload": {"order": {"points": 2, "covers": [[0, 1]]}}}'


def node_lines(dot, tag):
    return re.findall(rf"^\s+{tag}\d+ \[label=", dot, flags=re.M)


class TestAnalyze:
    def test_separating_fixture_report(self, tmp_path):
        path = write_model(tmp_path, "d.json", to_inclusion_data(EX_213()))
        result = CliRunner().invoke(main, ["analyze", path])
        assert result.exit_code == 0
        assert "JR: fail" in result.output
        assert "C1: n/a (gated on JR)" in result.output
        assert "MIf: pass" in result.output
        assert "separates: yes" in result.output

    def test_matrix_fixture_json(self, tmp_path):
        path = write_model(tmp_path, "m.json", EX_74())
        result = CliRunner().invoke(main, ["analyze", path, "--json"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["conditions"]["MIf"] is False
        assert report["conditions"]["MI"] is False
        assert report["conditions"]["C2"] is None
        assert report["MIf_witness"] == [2, 3]
        assert report["symmetric"] == [[], [0, 1]]

    def test_identity_lattice_has_every_condition(self, tmp_path):
        path = write_raw(tmp_path, "c.json", CHAIN_DOC)
        result = CliRunner().invoke(main, ["analyze", path, "--json"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["conditions"] == {
            "JR": True,
            "C1": True,
            "MIf": True,
            "MI": True,
            "C2": True,
        }
        assert report["detects"] and report["separates"]

    def test_graph_report(self, tmp_path):
        path = write_model(tmp_path, "g.json", (EX_75(), j_x(EX_75())))
        result = CliRunner().invoke(main, ["analyze", path])
        assert result.exit_code == 0
        assert "pairs: 4" in result.output
        assert "prime points: 2" in result.output

    def test_output_is_byte_identical(self, tmp_path):
        path = write_model(tmp_path, "m.json", EX_74())
        runs = [
            CliRunner().invoke(main, ["analyze", path, "--json"]).output
            for _ in range(2)
        ]
        assert runs[0] == runs[1]

    def test_missing_file_exits_one(self, tmp_path):
        result = CliRunner().invoke(main, ["analyze", str(tmp_path / "no.json")])
        assert result.exit_code == 1
        assert "error:" in result.output

    def test_parse_error_is_line_anchored(self, tmp_path):
        path = write_raw(tmp_path, "bad.json", '{"kind": "lattice"')
        result = CliRunner().invoke(main, ["analyze", path])
        assert result.exit_code == 1
        assert "line 1" in result.output

    def test_schema_error_is_path_anchored(self, tmp_path):
        path = write_raw(
            tmp_path,
            "bad.json",
            '{"kind": "multiplicity", "payload": {"matrix": [[1], [1, 0]]}}',
        )
        result = CliRunner().invoke(main, ["analyze", path])
        assert result.exit_code == 1
        assert "$.payload.matrix" in result.output


class TestSpectrum:
    def run_dot(self, tmp_path, doc_path):
        out = tmp_path / "out.dot"
        result = CliRunner().invoke(main, ["spectrum", doc_path, "--dot", str(out)])
        assert result.exit_code == 0
        return out.read_text()

    def test_separating_fixture_has_two_bare_spectra(self, tmp_path):
        path = write_model(tmp_path, "d.json", to_inclusion_data(EX_213()))
        dot = self.run_dot(tmp_path, path)
        assert len(node_lines(dot, "s")) == 3
        assert len(node_lines(dot, "t")) == 2
        assert not node_lines(dot, "q")
        assert "rho" not in dot

    def test_action_collapses_to_one_class(self, tmp_path):
        space = FiniteT0Space.from_poset(FinitePoset.antichain(3))
        action = FiniteGroupAction(space, ((1, 2, 0),))
        path = write_model(tmp_path, "a.json", action)
        dot = self.run_dot(tmp_path, path)
        assert len(node_lines(dot, "s")) == 3
        assert len(node_lines(dot, "q")) == 1
        assert dot.count("-> q0 [style=dashed]") == 3
        assert dot.count('label="rho"') == 1

    def test_single_point_lattice_is_a_single_node(self, tmp_path):
        path = write_raw(tmp_path, "c.json", CHAIN_DOC)
        dot = self.run_dot(tmp_path, path)
        assert len(node_lines(dot, "p")) == 1
        assert dot.startswith("digraph spectrum {")

    def test_graph_documents_render_the_pair_primes(self, tmp_path):
        path = write_model(tmp_path, "g.json", (EX_75(), j_x(EX_75())))
        dot = self.run_dot(tmp_path, path)
        assert len(node_lines(dot, "p")) == 2

    def test_bad_document_exits_one(self, tmp_path):
        path = write_raw(tmp_path, "bad.json", "[]")
        out = tmp_path / "out.dot"
        result = CliRunner().invoke(main, ["spectrum", path, "--dot", str(out)])
        assert result.exit_code == 1
        assert not out.exists()


class TestVerify:
    def test_clean_sweep_prints_report(self):
        result = CliRunner().invoke(main, ["verify", "--suite", "L51"])
        assert result.exit_code == 0
        report = json.loads(result.output)
        assert report["violations"] == 0
        assert report["checked"] == 441

    def test_runs_are_reproducible(self):
        args = ["verify", "--suite", "T42", "--budget", "25", "--seed", "9"]
        a = CliRunner().invoke(main, args)
        b = CliRunner().invoke(main, args)
        assert a.exit_code == b.exit_code == 0
        assert a.output == b.output

    def test_unknown_suite_exits_one(self):
        result = CliRunner().invoke(main, ["verify", "--suite", "bogus"])
        assert result.exit_code == 1
        assert "unknown sweep tag" in result.output

    def test_over_cap_budget_exits_one(self):
        result = CliRunner().invoke(
            main, ["verify", "--suite", "T62", "--budget", "6"]
        )
        assert result.exit_code == 1

    def test_missing_suite_is_an_input_error(self):
        result = CliRunner().invoke(main, ["verify"])
        assert result.exit_code == 1

    def test_assert_escalates_violations(self, monkeypatch):
        report = SweepReport(
            tag="T42",
            seed=1,
            budget=5,
            checked=3,
            applicable=2,
            violations=1,
            counterexample={"kind": "multiplicity", "payload": {"matrix": [[1]]}},
        )

        def explode(tag, budget=None, seed=0):
            raise SweepFailed("instance violates the equivalence", report=report)

        monkeypatch.setattr("stonekit.cli.sweep_theorem", explode)
        strict = CliRunner().invoke(
            main, ["verify", "--suite", "T42", "--assert"]
        )
        assert strict.exit_code == 2
        assert json.loads(strict.output)["counterexample"]["kind"] == "multiplicity"
        lax = CliRunner().invoke(main, ["verify", "--suite", "T42"])
        assert lax.exit_code == 0
        assert json.loads(lax.output)["violations"] == 1
