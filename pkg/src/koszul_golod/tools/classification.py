"""Classification and corpus tools."""

import json

from ..classifier.corpus import run_corpus
from ..classifier.pipeline import classify
from ..models.enums import ResponseFormat
from ..models.inputs import ClassifyInput, CorpusInput
from ..models.reports import ClassificationReport, CorpusReport
from ..utils.errors import _handle_engine_error
from ..utils.formatting import _truncate_response, verdict_mark
from .analysis import load_input
from .witness import certificate_markdown


def classification_markdown(report: ClassificationReport) -> str:
    echo = report.input
    koszul = report.koszul.summary if report.koszul else "not run"
    markdown = f"""# {echo.field}[{",".join(echo.variables)}]/({", ".join(echo.relations)})

**Branch:** {report.branch.value}
**Bounds:** {report.bounds.text()}
**Hilbert series:** {report.hilbert.series} (h = {", ".join(str(h) for h in report.hilbert.coefficients)})
**dim R_2:** {report.dim_r2}
**Koszul:** {koszul}
**Absolutely Koszul:** {verdict_mark(report.absolutely_koszul)}
**Consistent:** {verdict_mark(report.consistent)}

## Trivial fiber reduction
- s = {report.socle.s}{f" ({', '.join(report.socle.forms)})" if report.socle.forms else ""}
- R' = {report.socle.reduced.field}[{",".join(report.socle.reduced.variables)}]/({", ".join(report.socle.reduced.relations)})
"""
    if report.exceptional is not None:
        exc = report.exceptional
        markdown += f"""
## Exceptional test
- exceptional: {verdict_mark(exc.exceptional)}
- normal form: {exc.normal_form or "-"}
- {exc.evidence}
"""
    if report.structure is not None:
        st = report.structure
        markdown += f"""
## Structural case
- case: {st.case_id or "none"}
- coordinates: {", ".join(st.coordinates) or "-"}
- relations in these coordinates: {", ".join(st.relations) or "-"}
- null-square form: {st.null_square_form or "-"} (rank {st.rank if st.rank is not None else "-"})
- assignments tried: {st.tried}
"""
    if report.witness is not None:
        markdown += "\n## Witness\n"
        if report.witness.certificate is not None:
            markdown += certificate_markdown(report.witness.certificate)
        else:
            markdown += f"No witness after {len(report.witness.attempts)} attempts.\n"
    checks = report.checks
    markdown += f"""
## Checks
- Artinian bounds: {verdict_mark(checks.artinian_bounds)}
- Hilbert trichotomy: {verdict_mark(checks.hilbert_trichotomy)}
- Koszul iff not exceptional: {verdict_mark(checks.main_theorem)}
"""
    if report.notes:
        markdown += "\n## Notes\n" + "".join(f"- {note}\n" for note in report.notes)
    return markdown


def corpus_markdown(report: CorpusReport) -> str:
    lines = [
        f"# Corpus: {report.passed} passed, {report.failed} failed",
        "",
        "| Entry | Result | Mismatches | Detail |",
        "|---|---|---|---|",
    ]
    for row in report.rows:
        lines.append(
            f"| {row.name} | {'pass' if row.passed else 'FAIL'} | {', '.join(row.mismatches) or '-'} | {row.detail} |"
        )
    if report.transfer:
        lines += ["", "## Trivial fiber transfer"] + [f"- {t}" for t in report.transfer]
    return "\n".join(lines)


def koszul_golod_classify(params: ClassifyInput) -> str:
    """
    Run the classification pipeline on one presentation.

    Args:
        params (ClassifyInput): path, field, bounds, seed, budget, response_format

    Returns:
        str: ClassificationReport as JSON or markdown, or an error message
    """
    try:
        pres, bounds = load_input(params)
        report = classify(pres, bounds.hom, bounds.internal, seed=params.seed, budget=params.budget)
        if params.response_format == ResponseFormat.JSON:
            return _truncate_response(json.dumps(report.model_dump(mode="json"), indent=2))
        return _truncate_response(classification_markdown(report))
    except Exception as e:
        return _handle_engine_error(e)


def koszul_golod_corpus(params: CorpusInput) -> str:
    """
    Classify the corpus entries and tabulate the expectations that failed.

    Args:
        params (CorpusInput): name, path, bounds override, response_format

    Returns:
        str: CorpusReport as JSON or markdown, or an error message
    """
    try:
        report = run_corpus(params.path, params.name, params.bounds)
        if params.response_format == ResponseFormat.JSON:
            data = report.model_dump(mode="json")
            data["passed"] = report.passed
            data["failed"] = report.failed
            return _truncate_response(json.dumps(data, indent=2), len(report.rows))
        return _truncate_response(corpus_markdown(report), len(report.rows))
    except Exception as e:
        return _handle_engine_error(e)
