"""Search for a Golod witness P -> R with P a complete intersection of quadrics.

Candidates are tried in a fixed order:

  1. prescribed quadrics of a matched structural case
  2. subsets of the defining relations, by size (the empty set first)
  3. seeded random combinations of the relations

and the first verified candidate wins. The resolution of k over R is
computed once and shared by every verification.
"""

import itertools
import logging
import random
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Set, Tuple

from .. import config
from ..algebra.graded import GradedAlgebra
from ..core.polynomial import Polynomial
from ..models.enums import CandidateSource
from ..models.reports import AttemptRecord, WitnessSearchResult
from ..resolutions.resolution import minimal_resolution_of_k
from ..utils.errors import UnsupportedInputError, WitnessError
from .certificate import MAX_CODIM, verify_witness
from .regular import is_regular_sequence

logger = logging.getLogger(__name__)

# Random draws per unit of budget before the random rung gives up.
DRAWS_PER_BUDGET = 10

Prescription = Tuple[str, Sequence[Polynomial]]


@dataclass
class Candidate:
    source: CandidateSource
    provenance: str
    quadrics: List[Polynomial]


def _relation_subsets(relations: Sequence[Polynomial], max_codim: int) -> Iterator[Candidate]:
    for size in range(min(max_codim, len(relations)) + 1):
        for idx in itertools.combinations(range(len(relations)), size):
            source = CandidateSource.TRIVIAL if size == 0 else CandidateSource.RELATION_SUBSET
            label = "relations " + ",".join(str(i + 1) for i in idx) if idx else "P = Q"
            yield Candidate(source, label, [relations[i] for i in idx])


def _random_combinations(
    algebra: GradedAlgebra, relations: Sequence[Polynomial], max_codim: int, draws: int, seed: int
) -> Iterator[Candidate]:
    if not relations:
        return
    f = algebra.field
    rng = random.Random(seed)
    top = min(max_codim, len(relations))
    for draw in range(draws):
        size = rng.randint(1, top)
        quadrics = []
        for _ in range(size):
            q = Polynomial.zero(f, algebra.nvars)
            for rel in relations:
                q = q + rel.scale(f.random_element(rng))
            quadrics.append(q)
        yield Candidate(CandidateSource.RANDOM, f"draw {draw + 1} (seed {seed})", quadrics)


def _key(algebra: GradedAlgebra, quadrics: Sequence[Polynomial]) -> Tuple[str, ...]:
    return tuple(sorted(q.format(algebra.names) for q in quadrics))


def witness_search(
    algebra: GradedAlgebra,
    max_codim: int = MAX_CODIM,
    budget: Optional[int] = None,
    seed: Optional[int] = None,
    prescribed: Sequence[Prescription] = (),
    hom_bound: Optional[int] = None,
    internal_bound: Optional[int] = None,
    koszul_hint: Optional[bool] = None,
) -> WitnessSearchResult:
    """First verified witness of codimension <= max_codim, or an exhaustion report.

    ``budget`` bounds the number of candidates that reach verification;
    candidates failing the membership or regularity test are logged but not
    counted. A candidate is accepted when the Serre equality holds and, for
    Koszul R, when ν(mD) = 0 and Tor^P(R,k) is 2-linear as well.

    Raises:
        UnsupportedInputError: dim R_2 > 3 and R is not a polynomial ring
    """
    if algebra.dim(2) > 3 and algebra.presentation.relations:
        raise UnsupportedInputError(f"dim R_2 = {algebra.dim(2)} > 3")
    N = config.TRUNC_HOM if hom_bound is None else hom_bound
    J = algebra.truncation if internal_bound is None else min(internal_bound, algebra.truncation)
    budget = config.BUDGET if budget is None else budget
    seed = config.SEED if seed is None else seed
    max_codim = min(max_codim, MAX_CODIM)

    res = minimal_resolution_of_k(algebra, N, J)
    if koszul_hint is None:
        koszul_hint = res.betti().first_off_diagonal() is None
    result = WitnessSearchResult(budget=budget, seed=seed, max_codim=max_codim, koszul_hint=koszul_hint)

    relations = list(algebra.presentation.relations)
    candidates = itertools.chain(
        (Candidate(CandidateSource.PRESCRIBED, label, list(qs)) for label, qs in prescribed),
        _relation_subsets(relations, max_codim),
        _random_combinations(algebra, relations, max_codim, budget * DRAWS_PER_BUDGET, seed),
    )

    seen: Set[Tuple[str, ...]] = set()
    verified = 0
    for cand in candidates:
        if verified >= budget:
            break
        if len(cand.quadrics) > max_codim:
            continue
        key = _key(algebra, cand.quadrics)
        if key in seen:
            continue
        seen.add(key)
        record = AttemptRecord(
            index=len(result.attempts) + 1, source=cand.source, quadrics=list(key), outcome=""
        )
        result.attempts.append(record)
        if not is_regular_sequence(cand.quadrics, algebra.nvars):
            record.outcome = "not a regular sequence"
            continue
        try:
            cert = verify_witness(
                algebra,
                cand.quadrics,
                N,
                J,
                resolution=res,
                koszul_hint=koszul_hint,
                source=cand.source,
                provenance=cand.provenance,
                seed=seed if cand.source == CandidateSource.RANDOM else None,
            )
        except WitnessError as e:
            record.outcome = str(e)
            continue
        verified += 1
        record.outcome = cert.status.value
        if cert.accepted:
            result.certificate = cert
            logger.info(
                f"Witness found after {len(result.attempts)} attempts: d={cert.codimension} "
                f"({cand.source.value}, {cand.provenance})"
            )
            return result

    result.exhausted = True
    logger.warning(f"No witness within budget {budget} (seed {seed}, {len(result.attempts)} attempts)")
    return result
