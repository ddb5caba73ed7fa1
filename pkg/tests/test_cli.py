"""
Tests for the command-line interface.
"""

import json
import sys
from pathlib import Path

from click.testing import CliRunner

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.cli import cli  # noqa: E402

BOUNDS = ["--trunc-hom", "3", "--trunc-int", "4"]


class TestAnalyze:
    """koszul-golod analyze."""

    def test_markdown_report(self, presentation_file):
        """The summary names the bounds."""
        path = presentation_file("GF(2)", "x,y", "x^2", "y^2")
        result = CliRunner().invoke(cli, BOUNDS + ["analyze", path])
        assert result.exit_code == 0, result.output
        assert "koszul up to (3,4)" in result.output
        assert "## Golod-ring test" in result.output

    def test_json_report(self, presentation_file, tmp_path):
        """--json writes the report instead of printing it."""
        path = presentation_file("QQ", "x,y", "x^2", "x*y", "y^2")
        out = tmp_path / "report.json"
        result = CliRunner().invoke(cli, BOUNDS + ["--json", str(out), "analyze", path, "--power", "2"])
        assert result.exit_code == 0, result.output
        assert "✅ Report written to" in result.output
        data = json.loads(out.read_text(encoding="utf-8"))
        assert data["koszul"]["verdict"] == "koszul-to-bound"
        assert data["hilbert"]["coefficients"][:3] == [1, 2, 0]
        assert "golod" in data
        assert "nu_powers" in data

    def test_missing_file(self, tmp_path):
        """Unreadable input exits with 1."""
        result = CliRunner().invoke(cli, BOUNDS + ["analyze", str(tmp_path / "absent.txt")])
        assert result.exit_code == 1
        assert "File not found" in result.output

    def test_parse_error(self, tmp_path):
        """A file without a field line exits with 1."""
        path = tmp_path / "bad.txt"
        path.write_text("vars: x\nrel: x^2\n", encoding="utf-8")
        result = CliRunner().invoke(cli, BOUNDS + ["analyze", str(path)])
        assert result.exit_code == 1
        assert "ParseError" in result.output

    def test_invalid_bounds(self, presentation_file):
        """J below 2 is rejected before any computation."""
        path = presentation_file("QQ", "x,y", "x*y")
        result = CliRunner().invoke(cli, ["--trunc-int", "1", "analyze", path])
        assert result.exit_code == 2
        assert "Invalid arguments" in result.output


class TestWitness:
    """koszul-golod witness."""

    def test_explicit_quadrics(self, presentation_file):
        """--quadric verifies instead of searching."""
        path = presentation_file("GF(2)", "x,y", "x^2", "y^2")
        result = CliRunner().invoke(
            cli, BOUNDS + ["witness", path, "--quadric", "x^2", "--quadric", "y^2"]
        )
        assert result.exit_code == 0, result.output
        assert "golod-and-koszul" in result.output

    def test_rejected_quadric_is_a_report(self, presentation_file):
        """A witness precondition failure prints an error but exits with 0."""
        path = presentation_file("GF(2)", "x,y", "x^2", "y^2")
        result = CliRunner().invoke(cli, BOUNDS + ["witness", path, "--quadric", "x*y"])
        assert result.exit_code == 0
        assert "WitnessError" in result.output

    def test_search(self, presentation_file):
        """Without quadrics the attempts are listed."""
        path = presentation_file("QQ", "x,y", "x^2", "x*y", "y^2")
        result = CliRunner().invoke(cli, BOUNDS + ["witness", path, "--budget", "5"])
        assert result.exit_code == 0, result.output
        assert "## Attempts" in result.output


class TestCorpusCommand:
    """koszul-golod corpus."""

    def test_unknown_entry(self):
        """A missing entry name exits with 1."""
        result = CliRunner().invoke(cli, ["corpus", "--name", "absent"])
        assert result.exit_code == 1
        assert "CorpusError" in result.output
