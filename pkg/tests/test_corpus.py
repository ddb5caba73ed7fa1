"""
Tests for the example corpus: loading, comparison rows and the shipped data.
"""

import json
import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.classifier.corpus import load_corpus, run_corpus, transfer_mismatches  # noqa: E402
from src.koszul_golod.classifier.pipeline import classify  # noqa: E402
from src.koszul_golod.core.parsing import parse_presentation  # noqa: E402
from src.koszul_golod.models.reports import CorpusEntry  # noqa: E402
from src.koszul_golod.utils.errors import CorpusError  # noqa: E402

MSQUARE = "field: QQ\nvars: x,y\nrel: x^2\nrel: x*y\nrel: y^2\n"


def write_corpus(tmp_path, entries, name="corpus.json"):
    path = tmp_path / name
    path.write_text(json.dumps({"schema_version": "1", "entries": entries}), encoding="utf-8")
    return path


def entry(name, presentation=MSQUARE, **expected):
    return {
        "name": name,
        "presentation": presentation,
        "expected": expected,
        "provenance": "hand computation",
        "bounds": {"hom": 3, "internal": 4},
    }


class TestLoadCorpus:
    """Schema and file errors become CorpusError."""

    def test_missing_file(self, tmp_path):
        """Unreadable paths are reported."""
        with pytest.raises(CorpusError, match="Cannot read"):
            load_corpus(tmp_path / "absent.json")

    def test_bad_json(self, tmp_path):
        """Malformed JSON is reported."""
        path = tmp_path / "bad.json"
        path.write_text("{entries: [", encoding="utf-8")
        with pytest.raises(CorpusError, match="not valid JSON"):
            load_corpus(path)

    def test_no_entries_list(self, tmp_path):
        """The top level needs an entries list."""
        path = tmp_path / "empty.json"
        path.write_text(json.dumps({"schema_version": "1"}), encoding="utf-8")
        with pytest.raises(CorpusError, match="entries"):
            load_corpus(path)

    def test_missing_provenance(self, tmp_path):
        """Every entry records where its expectations come from."""
        bad = entry("m2")
        del bad["provenance"]
        with pytest.raises(CorpusError, match="schema"):
            load_corpus(write_corpus(tmp_path, [bad]))

    def test_duplicate_names(self, tmp_path):
        """Names are unique."""
        with pytest.raises(CorpusError, match="twice"):
            load_corpus(write_corpus(tmp_path, [entry("m2"), entry("m2")]))


class TestRunCorpus:
    """Rows compare classification results with expectations."""

    def test_wrong_expectations(self, tmp_path):
        """Each unmet field is named."""
        path = write_corpus(tmp_path, [entry("m2", hilbert_prefix=[1, 2, 1], koszul=False)])
        report = run_corpus(path, seed=0, budget=5)
        row = report.rows[0]
        assert not row.passed
        assert "hilbert_prefix" in row.mismatches
        assert "koszul" in row.mismatches
        assert report.failed == 1

    def test_met_expectations(self, tmp_path):
        """(x,y)^2 has h = 1,2,0 and is Koszul with a trivial witness."""
        path = write_corpus(
            tmp_path,
            [entry("m2", hilbert_prefix=[1, 2, 0], koszul=True, witness_codim_max=0, branch="artinian")],
        )
        report = run_corpus(path, seed=0, budget=5)
        assert "hilbert_prefix" not in report.rows[0].mismatches
        assert "koszul" not in report.rows[0].mismatches
        assert "witness_codim_max" not in report.rows[0].mismatches
        assert "branch" not in report.rows[0].mismatches

    def test_broken_entry_is_a_row(self, tmp_path):
        """Parse failures become error rows."""
        path = write_corpus(tmp_path, [entry("broken", presentation="vars: x\nrel: x^2\n")])
        report = run_corpus(path)
        assert report.rows[0].mismatches == ["error"]
        assert not report.rows[0].passed

    def test_unknown_name(self, tmp_path):
        """Selecting a missing entry is an error."""
        with pytest.raises(CorpusError, match="No corpus entry"):
            run_corpus(write_corpus(tmp_path, [entry("m2")]), name="absent")


class TestTransfer:
    """Trivial fiber variants keep the verdicts of their base."""

    def test_acceptance_difference_is_reported(self):
        """A variant whose witness is missing while the base has one is flagged."""
        ci = "field: GF(2)\nvars: x,y\nrel: x^2\nrel: y^2\n"
        wide = "field: QQ\nvars: x,y,z\nrel: x*y\n"
        entries = [
            CorpusEntry(name="base", presentation=ci, provenance="hand computation"),
            CorpusEntry(name="variant", presentation=wide, provenance="hand computation", variant_of="base"),
        ]
        reports = {
            e.name: classify(parse_presentation(e.presentation), 3, 5, seed=0, budget=10) for e in entries
        }
        problems = transfer_mismatches(entries, reports)
        assert problems == ["variant: witness acceptance differs from base"]

    def test_matching_pair(self):
        """Identical reports transfer cleanly; entries without a base are skipped."""
        ci = "field: GF(2)\nvars: x,y\nrel: x^2\nrel: y^2\n"
        entries = [
            CorpusEntry(name="base", presentation=ci, provenance="hand computation"),
            CorpusEntry(name="copy", presentation=ci, provenance="hand computation", variant_of="base"),
            CorpusEntry(name="orphan", presentation=ci, provenance="hand computation", variant_of="absent"),
        ]
        report = classify(parse_presentation(ci), 3, 5, seed=0, budget=10)
        assert transfer_mismatches(entries, {"base": report, "copy": report, "orphan": report}) == []


class TestShippedCorpus:
    """The corpus bundled with the package."""

    def test_loads(self):
        """The default file validates."""
        entries = load_corpus()
        assert len(entries) > 30
        assert all(e.provenance for e in entries)

    def test_variants_name_existing_entries(self):
        """Every trivial fiber variant points at a base entry."""
        entries = load_corpus()
        names = {e.name for e in entries}
        for e in entries:
            if e.variant_of is not None:
                assert e.variant_of in names

    def test_case_eight_over_gf3(self):
        """The GF(3) case (8) entry passes."""
        report = run_corpus(name="case8-gf3", seed=0)
        assert len(report.rows) == 1
        assert report.rows[0].passed, report.rows[0].mismatches

    def test_full_run(self):
        """Every shipped entry passes and at least ten trivial fiber pairs transfer."""
        entries = load_corpus()
        assert sum(1 for e in entries if e.variant_of is not None) >= 10
        report = run_corpus(seed=0)
        failures = [(r.name, r.mismatches, r.detail) for r in report.rows if not r.passed]
        assert failures == []
        assert report.transfer == []
