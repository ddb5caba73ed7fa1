"""Verification of a candidate Golod witness P = Q/(f_1..f_d) -> R.

Three routes are run on the short Tate complex D = K<Z_1..Z_d>:

  (a) ν(mD) = 0
  (b) Tor^P_i(R,k)_j = 0 for i >= 1 unless j = i + 1, with Tor^P(R,k) = H(D)
  (c) P^R_k = P^P_k / (1 - z(P^P_R - 1)) coefficientwise

(a) and (b) are each equivalent to "P -> R is Golod and R is Koszul";
(c) alone is equivalent to "P -> R is Golod".
"""

import logging
from typing import Optional, Sequence, Tuple

from .. import config
from ..algebra.graded import GradedAlgebra, QuadraticPresentation, build_algebra
from ..complexes.koszul import koszul_complex
from ..complexes.nu import homology, nu_vanishes
from ..complexes.tate import ShortTateComplex, short_tate_from_quadrics
from ..core.polynomial import Polynomial
from ..models.enums import CandidateSource, CertificateStatus
from ..models.inputs import Bounds
from ..models.reports import BettiTable, GolodCertificate, RouteResult
from ..resolutions.golod import serre_compare
from ..resolutions.resolution import MinimalResolution, minimal_resolution_of_k
from ..resolutions.series import TruncatedSeries, complete_intersection_poincare
from ..utils.errors import WitnessError
from .regular import is_regular_sequence

logger = logging.getLogger(__name__)

MAX_CODIM = 3


def ci_presentation(presentation: QuadraticPresentation, quadrics: Sequence[Polynomial]) -> QuadraticPresentation:
    """P = Q/(f) in the variables of R."""
    return presentation.with_relations(quadrics)


def ci_poincare(e: int, d: int, hom_bound: int, internal_bound: int) -> TruncatedSeries:
    """P^P_k = (1+zt)^e / (1-z^2t^2)^d."""
    return complete_intersection_poincare(e, d, hom_bound, internal_bound)


def ci_poincare_check(
    algebra: GradedAlgebra, quadrics: Sequence[Polynomial], hom_bound: int, internal_bound: int
) -> Optional[Tuple[int, int]]:
    """Resolve k over P directly; the first coefficient that differs from the closed form, or None."""
    P = build_algebra(ci_presentation(algebra.presentation, quadrics), max(internal_bound, 2))
    res = minimal_resolution_of_k(P, hom_bound, internal_bound)
    direct = TruncatedSeries.from_dict(res.betti().entries(), hom_bound, internal_bound)
    return direct.first_difference(ci_poincare(algebra.nvars, len(quadrics), hom_bound, internal_bound))


def _in_ideal(algebra: GradedAlgebra, quadric: Polynomial) -> bool:
    vec, _ = algebra.element(quadric)
    return not vec


def short_tate(
    algebra: GradedAlgebra, quadrics: Sequence[Polynomial], hom_bound: int, internal_bound: int
) -> ShortTateComplex:
    """D for the quadrics f, which must lie in I.

    Raises:
        WitnessError: some f_i is not in I
    """
    for i, q in enumerate(quadrics):
        if not _in_ideal(algebra, q):
            raise WitnessError(f"f_{i + 1} = {q.format(algebra.names)} is not in I")
    K = koszul_complex(algebra, hom_bound, internal_bound)
    return short_tate_from_quadrics(K, quadrics)


def tor_over_P(
    algebra: GradedAlgebra, quadrics: Sequence[Polynomial], hom_bound: int, internal_bound: int
) -> BettiTable:
    """Tor^P_i(R,k)_j = dim H_i(D)_j for i <= N, j <= J.

    Raises:
        WitnessError: some f_i is not in I
    """
    return _tor_table(short_tate(algebra, quadrics, hom_bound, internal_bound), hom_bound, internal_bound)


def _tor_table(D: ShortTateComplex, hom_bound: int, internal_bound: int) -> BettiTable:
    return BettiTable.from_dict(
        homology(D.complex, hom_bound, internal_bound), hom_bound, internal_bound, label="Tor^P(R,k)"
    )


def _check_preconditions(algebra: GradedAlgebra, quadrics: Sequence[Polynomial]) -> None:
    names = algebra.names
    if len(quadrics) > MAX_CODIM:
        raise WitnessError(f"Codimension d={len(quadrics)} exceeds {MAX_CODIM}")
    for i, q in enumerate(quadrics):
        if q.nvars != algebra.nvars or q.is_zero() or not q.is_homogeneous() or q.degree != 2:
            raise WitnessError(f"f_{i + 1} is not a homogeneous quadric in {','.join(names)}")
    for i, q in enumerate(quadrics):
        if not _in_ideal(algebra, q):
            raise WitnessError(f"f_{i + 1} = {q.format(names)} is not in I")
    if not is_regular_sequence(quadrics, algebra.nvars):
        raise WitnessError(
            f"({', '.join(q.format(names) for q in quadrics)}) is not a regular sequence",
            hint="Q/(f) must have Hilbert series (1-t^2)^d/(1-t)^e.",
        )


def _status(
    nu: bool, two_linear: bool, serre: bool, koszul_hint: Optional[bool]
) -> Tuple[CertificateStatus, bool]:
    consistent = nu == two_linear and (serre or not nu)
    if not consistent:
        return CertificateStatus.INCONCLUSIVE, False
    if not serre:
        return CertificateStatus.NOT_GOLOD, True
    if nu:
        if koszul_hint is False:
            # ν(mD) = 0 forces R Koszul
            return CertificateStatus.INCONCLUSIVE, False
        return CertificateStatus.GOLOD_AND_KOSZUL, True
    if koszul_hint is False:
        return CertificateStatus.GOLOD_NOT_KOSZUL, True
    return CertificateStatus.INCONCLUSIVE, False


def verify_witness(
    algebra: GradedAlgebra,
    quadrics: Sequence[Polynomial],
    hom_bound: Optional[int] = None,
    internal_bound: Optional[int] = None,
    resolution: Optional[MinimalResolution] = None,
    koszul_hint: Optional[bool] = None,
    source: CandidateSource = CandidateSource.EXPLICIT,
    provenance: str = "",
    seed: Optional[int] = None,
) -> GolodCertificate:
    """Run routes (a), (b) and (c) for P = Q/(f) -> R and record them.

    Args:
        algebra: R
        quadrics: f_1..f_d, a regular sequence in I with d <= 3
        resolution: minimal resolution of k over R, reused across candidates
        koszul_hint: Koszul verdict of R; read off the resolution when None

    Raises:
        WitnessError: a precondition fails; the message names it
    """
    N = config.TRUNC_HOM if hom_bound is None else hom_bound
    J = algebra.truncation if internal_bound is None else min(internal_bound, algebra.truncation)
    _check_preconditions(algebra, quadrics)
    d = len(quadrics)

    D = short_tate(algebra, quadrics, N, J)
    nu = nu_vanishes(D.complex, N, J)
    tor_table = _tor_table(D, N, J)
    off = tor_table.first_off_diagonal(shift=1)
    two_linear = off is None
    linear_detail = "Tor^P_i(R,k) sits in degree i+1" if off is None else f"Tor^P_{off[0]}(R,k)_{off[1]} != 0"

    res = resolution or minimal_resolution_of_k(algebra, N, J)
    p_k_R = res.betti()
    if koszul_hint is None:
        koszul_hint = p_k_R.first_off_diagonal() is None
    serre = serre_compare(p_k_R, ci_poincare(algebra.nvars, d, N, J), tor_table)

    status, consistent = _status(nu.vanishes, two_linear, serre.equal, koszul_hint)
    if not consistent:
        logger.warning(f"Witness routes disagree up to ({N},{J}); raise the bounds")

    cert = GolodCertificate(
        quadrics=[q.format(algebra.names) for q in quadrics],
        codimension=d,
        regular=True,
        nu_route=RouteResult(name="nu-mD", verdict=nu.vanishes, detail=nu.describe()),
        two_linear_route=RouteResult(
            name="two-linear",
            verdict=two_linear,
            detail=linear_detail,
        ),
        serre_route=RouteResult(name="serre-equality", verdict=serre.equal, detail=serre.describe()),
        serre_compared=serre.compared,
        serre_inequality_holds=serre.violation is None,
        consistent=consistent,
        status=status,
        tor_table=tor_table,
        source=source,
        provenance=provenance,
        seed=seed,
        bounds=Bounds(hom=N, internal=J),
    )
    logger.info(f"Verified d={d} witness ({source.value}): {status.value}")
    return cert
