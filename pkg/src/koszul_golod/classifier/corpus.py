"""The shipped example corpus: load, classify every entry, compare expectations."""

import json
import logging
from pathlib import Path
from typing import Dict, List, Optional, Union

from pydantic import ValidationError

from ..core.parsing import parse_presentation
from ..models.inputs import Bounds
from ..models.reports import (
    ClassificationReport,
    CorpusEntry,
    CorpusExpectation,
    CorpusReport,
    CorpusRow,
)
from ..utils.errors import CorpusError
from .pipeline import classify

logger = logging.getLogger(__name__)

CORPUS_PATH = Path(__file__).parent / "data" / "corpus.json"


def load_corpus(path: Optional[Union[str, Path]] = None) -> List[CorpusEntry]:
    """Entries of a corpus file ``{"schema_version": ..., "entries": [...]}``.

    Raises:
        CorpusError: unreadable file, bad JSON, schema violation or duplicate names
    """
    p = Path(path) if path is not None else CORPUS_PATH
    try:
        raw = json.loads(p.read_text(encoding="utf-8"))
    except OSError as e:
        raise CorpusError(f"Cannot read corpus {p}: {e}") from e
    except json.JSONDecodeError as e:
        raise CorpusError(f"Corpus {p} is not valid JSON: {e}") from e

    if not isinstance(raw, dict) or not isinstance(raw.get("entries"), list):
        raise CorpusError(f"Corpus {p} has no 'entries' list")
    try:
        entries = [CorpusEntry.model_validate(item) for item in raw["entries"]]
    except ValidationError as e:
        raise CorpusError(f"Corpus {p} does not match the entry schema: {e}") from e

    seen = set()
    for entry in entries:
        if entry.name in seen:
            raise CorpusError(f"Corpus {p} lists {entry.name!r} twice")
        seen.add(entry.name)
    logger.debug(f"Loaded {len(entries)} corpus entries from {p}")
    return entries


def _accepted(report: ClassificationReport) -> bool:
    cert = report.witness.certificate if report.witness else None
    return cert is not None and cert.accepted


def compare(report: ClassificationReport, expected: CorpusExpectation) -> List[str]:
    """Names of the expectation fields the report does not meet."""
    mismatches = []
    if expected.hilbert_prefix is not None:
        prefix = report.hilbert.coefficients[: len(expected.hilbert_prefix)]
        if prefix != expected.hilbert_prefix:
            mismatches.append("hilbert_prefix")
    if expected.koszul is not None:
        if report.koszul is None or report.koszul.is_koszul != expected.koszul:
            mismatches.append("koszul")
    if expected.witness_codim_max is not None:
        cert = report.witness.certificate if report.witness else None
        if cert is None or not cert.accepted or cert.codimension > expected.witness_codim_max:
            mismatches.append("witness_codim_max")
    if expected.case_id is not None:
        found = report.structure.case_id if report.structure else None
        if found != expected.case_id:
            mismatches.append("case_id")
    if expected.exceptional is not None:
        found_exc = report.exceptional.exceptional if report.exceptional else None
        if found_exc != expected.exceptional:
            mismatches.append("exceptional")
    if expected.branch is not None and report.branch != expected.branch:
        mismatches.append("branch")
    if not report.consistent:
        mismatches.append("consistent")
    return mismatches


def _detail(report: ClassificationReport) -> str:
    cert = report.witness.certificate if report.witness else None
    koszul = report.koszul.verdict.value if report.koszul else "-"
    case_id = report.structure.case_id if report.structure else None
    witness = f"d={cert.codimension} {cert.status.value}" if cert else "none"
    return f"branch={report.branch.value} koszul={koszul} case={case_id or '-'} witness={witness}"


def transfer_mismatches(entries: List[CorpusEntry], reports: Dict[str, ClassificationReport]) -> List[str]:
    """Trivial fiber variants must share the Koszul verdict and witness acceptance of their base."""
    problems = []
    for entry in entries:
        if entry.variant_of is None:
            continue
        base = reports.get(entry.variant_of)
        variant = reports.get(entry.name)
        if base is None or variant is None:
            continue
        if base.koszul is not None and variant.koszul is not None:
            if base.koszul.is_koszul != variant.koszul.is_koszul:
                problems.append(f"{entry.name}: Koszul verdict differs from {entry.variant_of}")
        if _accepted(base) != _accepted(variant):
            problems.append(f"{entry.name}: witness acceptance differs from {entry.variant_of}")
    return problems


def run_corpus(
    path: Optional[Union[str, Path]] = None,
    name: Optional[str] = None,
    bounds: Optional[Bounds] = None,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
) -> CorpusReport:
    """Classify every entry (or the one named) and tabulate pass/fail.

    ``bounds`` overrides the per-entry bounds. A failing classification
    becomes a failed row, not an error.

    Raises:
        CorpusError: the corpus does not load, or no entry has the given name
    """
    entries = load_corpus(path)
    if name is not None:
        entries = [e for e in entries if e.name == name]
        if not entries:
            raise CorpusError(f"No corpus entry named {name!r}")

    report = CorpusReport()
    results: Dict[str, ClassificationReport] = {}
    for entry in entries:
        b = bounds or entry.bounds or Bounds()
        try:
            pres = parse_presentation(entry.presentation, source=f"corpus:{entry.name}")
            result = classify(pres, b.hom, b.internal, seed=seed, budget=budget)
        except Exception as e:
            logger.error(f"Corpus entry {entry.name} failed: {e}")
            report.rows.append(CorpusRow(name=entry.name, passed=False, mismatches=["error"], detail=str(e)))
            continue
        results[entry.name] = result
        mismatches = compare(result, entry.expected)
        report.rows.append(
            CorpusRow(name=entry.name, passed=not mismatches, mismatches=mismatches, detail=_detail(result))
        )
        logger.info(f"Corpus {entry.name}: {'pass' if not mismatches else 'FAIL ' + ','.join(mismatches)}")

    report.transfer = transfer_mismatches(entries, results)
    for problem in report.transfer:
        logger.warning(f"Transfer check: {problem}")
    return report
