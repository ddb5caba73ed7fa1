"""The classification pipeline.

  build -> trivial fiber reduction -> branch -> exceptional test
        -> structural case -> witness search -> Koszul test -> report

Everything after the reduction runs on R', the ring with its degree-one
socle removed; the Koszul test runs on the input R. Koszulness and the
existence of a Golod witness both transfer along trivial fiber extensions.
"""

import logging
from typing import List, Optional

from .. import config
from ..algebra.graded import GradedAlgebra, QuadraticPresentation, build_algebra
from ..algebra.socle import TrivialFiberReduction, trivial_fiber_reduce
from ..models.enums import Branch, CertificateStatus
from ..models.inputs import Bounds
from ..models.reports import (
    ClassificationReport,
    HilbertReport,
    PresentationEcho,
    SocleReport,
    TheoremChecks,
)
from ..resolutions.koszul_test import koszul_test
from ..witness.search import witness_search
from .exceptional import detect_exceptional
from .prescriptions import prescribed_quadrics
from .structure_match import match_structure

logger = logging.getLogger(__name__)

# Condition sets compare ideals up to degree 3 and the series tests need h_4.
MIN_TRUNCATION = 4


def echo(presentation: QuadraticPresentation) -> PresentationEcho:
    return PresentationEcho(
        field=presentation.field.name,
        variables=list(presentation.names),
        relations=presentation.relation_texts(),
    )


def select_branch(reduced: GradedAlgebra) -> Branch:
    if reduced.nvars == 0:
        # R' = k
        return Branch.ARTINIAN
    if not reduced.presentation.relations:
        return Branch.POLYNOMIAL
    if reduced.dim(2) > 3:
        return Branch.OUT_OF_SCOPE
    if reduced.is_artinian():
        return Branch.ARTINIAN
    if reduced.dim(2) <= 2:
        return Branch.DIM2
    if reduced.nvars == 3:
        return Branch.E3
    return Branch.DIM3_NONARTINIAN


def artinian_bounds_hold(algebra: GradedAlgebra) -> bool:
    """h_4 = 0 and h_3 <= 1."""
    h = algebra.hilbert.coefficients(4)
    return h[4] == 0 and h[3] <= 1


def hilbert_trichotomy_holds(algebra: GradedAlgebra, s: int) -> bool:
    """H = 1 + eT + h_2 T^2 + h_3 T^3/(1-T) with h_3 in {0, 1, 2} as dictated by e - s and h_2."""
    e = algebra.nvars
    top = max(algebra.truncation, 4)
    h = algebra.hilbert.coefficients(top)
    h2, h3 = h[2], h[3]
    if any(c != h3 for c in h[3:]):
        return False
    if algebra.is_artinian():
        return h3 == 0
    if e - s == 2 and h2 == 2:
        return h3 == 2
    return h3 == 1


def _socle_report(red: TrivialFiberReduction) -> SocleReport:
    alg = red.original
    return SocleReport(
        s=red.s,
        forms=[x.format(alg.field, alg.names) for x in red.socle_forms],
        reduced=echo(red.reduced.presentation),
    )


def classify(
    presentation: QuadraticPresentation,
    hom_bound: Optional[int] = None,
    internal_bound: Optional[int] = None,
    seed: Optional[int] = None,
    budget: Optional[int] = None,
    structure_budget: Optional[int] = None,
    max_codim: int = 3,
) -> ClassificationReport:
    """Run the whole pipeline; out-of-scope inputs give a report, never an error.

    Raises:
        PresentationError: relations are not independent quadrics
    """
    N = config.TRUNC_HOM if hom_bound is None else hom_bound
    J = max(config.TRUNC_INT if internal_bound is None else internal_bound, MIN_TRUNCATION)
    bounds = Bounds(hom=N, internal=J)
    algebra = build_algebra(presentation, J)
    red = trivial_fiber_reduce(algebra)
    reduced = red.reduced
    branch = select_branch(reduced)
    notes: List[str] = []

    report = ClassificationReport(
        input=echo(presentation),
        bounds=bounds,
        socle=_socle_report(red),
        branch=branch,
        hilbert=HilbertReport(
            series=algebra.hilbert.format(),
            coefficients=algebra.hilbert.coefficients(J),
            is_artinian=algebra.is_artinian(),
        ),
        dim_r2=algebra.dim(2),
    )
    logger.info(f"Classifying {algebra.describe()}: branch {branch.value}, s={red.s}")

    koszul = koszul_test(algebra, N, J)
    report.koszul = koszul

    if branch == Branch.OUT_OF_SCOPE:
        notes.append(f"dim R_2 = {algebra.dim(2)} > 3: only the Koszul test was run")
        report.notes = notes
        return report

    report.exceptional = detect_exceptional(reduced)

    prescribed = []
    if branch != Branch.E3:
        match = match_structure(reduced, budget=structure_budget, seed=seed, bounds=(min(N, 6), J))
        report.structure = match.report
        if match.case_id is not None:
            prescribed = prescribed_quadrics(reduced, match.case_id, match.coords, match.params)
    else:
        notes.append("e = 3, dim R_2 = 3, not Artinian: no structural case; witness by search")

    report.witness = witness_search(
        reduced,
        max_codim=max_codim,
        budget=budget,
        seed=seed,
        prescribed=prescribed,
        hom_bound=N,
        internal_bound=J,
        koszul_hint=koszul.is_koszul,
    )
    if red.s:
        notes.append(f"witness computed for R' (s={red.s} socle forms removed)")

    cert = report.witness.certificate
    report.absolutely_koszul = (
        koszul.is_koszul and cert is not None and cert.status == CertificateStatus.GOLOD_AND_KOSZUL
    )

    checks = TheoremChecks()
    if algebra.is_artinian():
        checks.artinian_bounds = artinian_bounds_hold(algebra)
    if algebra.dim(2) <= 2:
        checks.hilbert_trichotomy = hilbert_trichotomy_holds(algebra, red.s)
    not_exceptional = not report.exceptional.exceptional
    checks.main_theorem = koszul.is_koszul == not_exceptional and report.absolutely_koszul == koszul.is_koszul
    report.checks = checks

    consistent = True
    if report.exceptional.exceptional and koszul.is_koszul:
        consistent = False
        notes.append("exceptional ring reported Koszul: raise the bounds")
    if cert is not None and not cert.consistent:
        consistent = False
    if report.witness.exhausted:
        notes.append("no witness found within the budget")
    if any(v is False for v in (checks.artinian_bounds, checks.hilbert_trichotomy, checks.main_theorem)):
        notes.append("a theorem-level check failed")
    if not koszul.routes_agree:
        notes.append("Koszul routes disagree within the bounds")
    report.consistent = consistent
    report.notes = notes
    logger.info(
        f"Classified: branch {branch.value}, koszul={koszul.is_koszul}, "
        f"witness d={cert.codimension if cert else None}"
    )
    return report
