"""Golod-ring test: ν(mK) = 0 and the Serre equality for Q -> R."""

import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from .. import config
from ..algebra.graded import GradedAlgebra
from ..complexes.koszul import koszul_complex
from ..complexes.nu import homology, nu_vanishes
from ..models.inputs import Bounds
from ..models.reports import BettiTable, GolodRingReport, RouteResult
from .resolution import MinimalResolution, minimal_resolution_of_k, tor_over_polynomial_ring
from .series import TruncatedSeries, complete_intersection_poincare, serre_bound

logger = logging.getLogger(__name__)


@dataclass
class SerreComparison:
    """P^R_k against P^P_k / (1 - z(P^P_R - 1)), coefficient by coefficient."""

    equal: bool
    first_difference: Optional[Tuple[int, int]]
    violation: Optional[Tuple[int, int]]
    compared: int
    bound: TruncatedSeries

    def describe(self) -> str:
        if self.violation is not None:
            i, j = self.violation
            return f"Serre bound exceeded at z^{i}t^{j}"
        if self.equal:
            return f"equality on all {self.compared} coefficients"
        i, j = self.first_difference or (0, 0)
        return f"strict inequality first at z^{i}t^{j}"


def serre_compare(p_k_R: BettiTable, p_k_P: TruncatedSeries, p_P_R: BettiTable) -> SerreComparison:
    N, J = p_k_R.hom, p_k_R.internal
    actual = TruncatedSeries.from_dict(p_k_R.entries(), N, J)
    bound = serre_bound(p_k_P.truncate(N, J), TruncatedSeries.from_dict(p_P_R.entries(), N, J))
    diff = actual.first_difference(bound)
    violation = actual.dominated_by(bound)
    if violation is not None:
        logger.warning(f"Serre inequality violated at {violation}; raise the bounds")
    return SerreComparison(diff is None, diff, violation, (N + 1) * (J + 1), bound)


def golod_ring_test(
    algebra: GradedAlgebra,
    hom_bound: Optional[int] = None,
    internal_bound: Optional[int] = None,
    resolution: Optional[MinimalResolution] = None,
) -> GolodRingReport:
    """Route (a) ν(mK) = 0 certifies a Koszul Golod ring; route (b) the Serre equality a Golod ring."""
    N = config.TRUNC_HOM if hom_bound is None else hom_bound
    J = algebra.truncation if internal_bound is None else min(internal_bound, algebra.truncation)
    bounds = Bounds(hom=N, internal=J)

    K = koszul_complex(algebra, N, J)
    nu = nu_vanishes(K, N, J)

    tor_table = tor_over_polynomial_ring(algebra, N, J)
    matches = homology(K, N, J) == tor_table.entries()
    if not matches:
        logger.warning("Tor^Q(R,k) from the resolution differs from H(K)")

    res = resolution or minimal_resolution_of_k(algebra, N, J)
    p_k_Q = complete_intersection_poincare(algebra.nvars, 0, N, J)
    serre = serre_compare(res.betti(), p_k_Q, tor_table)

    report = GolodRingReport(
        bounds=bounds,
        nu_route=RouteResult(name="nu-mK", verdict=nu.vanishes, detail=nu.describe()),
        serre_route=RouteResult(name="serre-equality", verdict=serre.equal, detail=serre.describe()),
        koszul_golod=nu.vanishes,
        golod=serre.equal,
        consistent=serre.equal or not nu.vanishes,
        serre_inequality_holds=serre.violation is None,
        tor_matches_koszul_homology=matches,
        tor_table=tor_table,
    )
    logger.info(
        f"Golod-ring test up to {bounds.text()}: ν(mK)={'0' if nu.vanishes else 'nonzero'}, "
        f"Serre {'equal' if serre.equal else 'strict'}"
    )
    return report
