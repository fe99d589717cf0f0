"""
Tests for the tbn command-line front end.
"""
import json

import pytest

import src.cli.cli as cli_module
from config.config import SCHEMA_VERSION, TBN_BUDGET
from src.cli import execute, main, parse, render
from src.graph_core import Divisor, dump_divisor, dump_graph


@pytest.fixture
def lol4_file(lol4, tmp_path):
    path = tmp_path / "lol4.json"
    dump_graph(lol4, path)
    return path


def _run(argv, capsys):
    code = main([str(a) for a in argv])
    return code, json.loads(capsys.readouterr().out)


class TestParse:
    """Tests for command-line parsing."""

    def test_rank_command(self):
        """Test that defaults are filled in from the configuration."""
        cmd = parse(["rank", "--graph", "g.json", "--divisor", "d.json"])
        assert cmd.subcommand == "rank"
        assert cmd.budget == TBN_BUDGET
        assert cmd.format == "json"
        assert not cmd.oracle

    def test_sweep_defaults_to_tsv(self):
        """Test that sweep tables default to TSV and need no graph."""
        cmd = parse(["sweep", "--family", "lol4-scaled", "--ts", "0,1/2", "-r", "1", "-d", "3", "-q", "2"])
        assert cmd.format == "tsv"
        assert cmd.graph is None

    def test_unknown_flag(self):
        """Test that usage errors exit with code 2."""
        with pytest.raises(SystemExit) as exc:
            parse(["rank", "--graph", "g.json", "--divisor", "d.json", "--bogus"])
        assert exc.value.code == 2
        assert main(["genus"]) == 2


class TestCommands:
    """Tests for running subcommands end to end."""

    def test_gen_then_genus(self, tmp_path, capsys):
        """Test generating a loop of loops and reading back its genus."""
        path = tmp_path / "g.json"
        code, _ = _run(["gen", "--family", "loop-of-loops", "--g", 4, "--lengths", "5,4,3", "--out", path], capsys)
        assert code == 0
        code, report = _run(["genus", "--graph", path], capsys)
        assert code == 0
        assert report["result"] == {"genus": 4}
        assert report["schema_version"] == SCHEMA_VERSION

    def test_equiv_on_firing_pair(self, lol112, tmp_path, capsys):
        """Test that v1 + w2 + v3 and w1 + v2 + v3 are reported equivalent."""
        dump_graph(lol112, tmp_path / "g.json")
        dump_divisor(Divisor.of(lol112, "v1", "w2", "v3"), tmp_path / "d1.json")
        dump_divisor(Divisor.of(lol112, "w1", "v2", "v3"), tmp_path / "d2.json")
        code, report = _run(["equiv", "--graph", tmp_path / "g.json", "--d1", tmp_path / "d1.json",
                             "--d2", tmp_path / "d2.json"], capsys)
        assert code == 0
        assert report["result"] == {"equivalent": True}

    def test_rank_metric_and_oracle(self, lol4, lol4_file, tmp_path, capsys):
        """Test that both rank back ends answer 1 for v1 + w3 + e2@3."""
        dump_divisor(Divisor.of(lol4, "v1", "w3", "e2@3"), tmp_path / "d.json")
        _, report = _run(["rank", "--graph", lol4_file, "--divisor", tmp_path / "d.json"], capsys)
        assert report["result"] == {"rank": 1}
        _, report = _run(["rank", "--graph", lol4_file, "--divisor", tmp_path / "d.json", "--oracle"], capsys)
        assert report["result"]["rank"] == 1

    def test_reduce_default_basepoint(self, lol4, lol4_file, tmp_path, capsys):
        """Test that reduce uses the first vertex when no basepoint is given."""
        dump_divisor(Divisor.of(lol4, "w1"), tmp_path / "d.json")
        _, report = _run(["reduce", "--graph", lol4_file, "--divisor", tmp_path / "d.json"], capsys)
        assert report["result"]["basepoint"] == "v1"

    def test_report_written_to_file(self, lol4_file, tmp_path, capsys):
        """Test that --out receives the report instead of stdout."""
        out = tmp_path / "report.json"
        assert main(["canonical", "--graph", str(lol4_file), "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert len(json.loads(out.read_text())["result"]) == 6

    def test_sweep_tsv(self, capsys):
        """Test the header of a sweep table."""
        code = main(["sweep", "--family", "lol4-scaled", "--ts", "0", "-r", "1", "-d", "3", "-q", "1"])
        lines = capsys.readouterr().out.splitlines()
        assert code == 0
        assert lines[0] == "t\tclasses\tdim_estimate\trho"
        assert lines[1].startswith("0/1\t1\t")


class TestErrors:
    """Tests for domain errors in reports."""

    def test_unknown_point(self, lol4_file, tmp_path, capsys):
        """Test that a divisor naming a missing vertex exits with code 1."""
        (tmp_path / "d.json").write_text('[{"vertex": "zz", "coeff": 1}]')
        code, report = _run(["rank", "--graph", lol4_file, "--divisor", tmp_path / "d.json"], capsys)
        assert code == 1
        assert report["error"] == "UnknownPoint"
        assert report["result"] is None

    def test_decimal_length(self, tmp_path, capsys):
        """Test that a decimal edge length is reported as InvalidRational."""
        (tmp_path / "g.json").write_text('{"vertices": ["v"], "edges": [{"id": "e", "ends": ["v", "v"], "length": "1.5"}]}')
        code, report = _run(["genus", "--graph", tmp_path / "g.json"], capsys)
        assert code == 1
        assert report["error"] == "InvalidRational"

    def test_unsupported_family(self, capsys):
        """Test that an unknown family is a domain error."""
        code, report = _run(["gen", "--family", "moebius"], capsys)
        assert code == 1
        assert report["error"] == "UnknownFamily"

    def test_zero_grid_denominator(self, lol4_file, capsys):
        """Test that -q 0 is reported as IncompatibleDenominator."""
        code, report = _run(["scan-wrd", "--graph", lol4_file, "-r", "1", "-d", "3", "-q", 0], capsys)
        assert code == 1
        assert report["error"] == "IncompatibleDenominator"
        code, report = _run(["bn-rank", "--graph", lol4_file, "-r", "1", "-d", "3", "-q", 0], capsys)
        assert report["error"] == "IncompatibleDenominator"

    def test_empty_point_set(self, lol4, lol4_file, tmp_path, capsys):
        """Test that an empty --points list is a domain error."""
        dump_divisor(Divisor.of(lol4, "v1"), tmp_path / "d.json")
        code, report = _run(["arank", "--graph", lol4_file, "--divisor", tmp_path / "d.json", "--points", ""], capsys)
        assert code == 1
        assert report["error"] == "InvalidParameter"

    def test_missing_generator_argument(self, capsys):
        """Test that a family without its required parameters is a domain error."""
        code, report = _run(["gen", "--family", "loop-of-loops"], capsys)
        assert code == 1
        assert report["error"] == "InvalidParameter"
        assert "lengths" in report["message"]

    def test_numeric_length(self, tmp_path, capsys):
        """Test that a JSON number that is not an integer is reported as MalformedFile."""
        (tmp_path / "g.json").write_text('{"vertices": ["v"], "edges": [{"id": "e", "ends": ["v", "v"], "length": 1.5}]}')
        code, report = _run(["genus", "--graph", tmp_path / "g.json"], capsys)
        assert code == 1
        assert report["error"] == "MalformedFile"

    def test_malformed_divisor(self, lol4_file, tmp_path, capsys):
        """Test that a divisor entry naming both a vertex and an edge is reported as MalformedFile."""
        (tmp_path / "d.json").write_text('[{"vertex": "v1", "edge": "e1", "offset": "1", "coeff": 1}]')
        code, report = _run(["rank", "--graph", lol4_file, "--divisor", tmp_path / "d.json"], capsys)
        assert code == 1
        assert report["error"] == "MalformedFile"

    def test_missing_file(self, tmp_path, capsys):
        """Test that a graph path that does not exist is reported as UnreadableFile."""
        code, report = _run(["genus", "--graph", tmp_path / "absent.json"], capsys)
        assert code == 1
        assert report["error"] == "UnreadableFile"
        assert report["result"] is None


class TestReports:
    """Tests for report rendering."""

    def test_deterministic(self, lol4_file):
        """Test that repeating a command gives the same report apart from timing."""
        cmd = parse(["scan-wrd", "--graph", str(lol4_file), "-r", "1", "-d", "3", "-q", "1"])
        first, _ = execute(cmd)
        second, _ = execute(cmd)
        assert first.model_dump(exclude={"timing_seconds"}) == second.model_dump(exclude={"timing_seconds"})

    def test_inputs_recorded(self, lol4_file):
        """Test that the report echoes its inputs without output options."""
        report, code = execute(parse(["genus", "--graph", str(lol4_file)]))
        assert code == 0
        assert report.inputs["graph"] == str(lol4_file)
        assert "format" not in report.inputs

    def test_tsv_falls_back_to_json(self, lol4_file):
        """Test that non-tabular results are rendered as JSON."""
        report, _ = execute(parse(["genus", "--graph", str(lol4_file)]))
        assert json.loads(render(report, "tsv"))["result"] == {"genus": 4}

    def test_saved_to_report_directory(self, lol4_file, tmp_path, monkeypatch, capsys):
        """Test that --save writes a copy of the report under the report directory."""
        monkeypatch.setattr(cli_module, "OUTPUT_DIR", tmp_path / "reports")
        assert main(["genus", "--graph", str(lol4_file), "--save"]) == 0
        printed = json.loads(capsys.readouterr().out)
        saved = list((tmp_path / "reports").glob("genus-*.json"))
        assert len(saved) == 1
        assert json.loads(saved[0].read_text()) == printed
        assert "save" not in printed["inputs"]
