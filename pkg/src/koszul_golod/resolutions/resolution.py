"""Minimal graded free resolutions of cyclic modules R/L.

The resolution is built step by step as a BidegreeComplex F with F_0 = R.
At step i the kernel of ∂_i is computed degree by degree; in degree j the
part already generated (R_1 times the degree j-1 part) is removed and a
complement is emitted as new generators of F_{i+1}. Generators are
therefore chosen in the lowest internal degree first, and the resulting
β_{i,j} are exact for i <= N and j <= J.
"""

import logging
import random
from dataclasses import dataclass
from typing import List, Optional, Sequence

from ..algebra.graded import GradedAlgebra, build_algebra
from ..algebra.ideals import Generator, GradedIdealSlice
from ..complexes.bidegree import BidegreeComplex
from ..core.field import Field
from ..core.polynomial import Polynomial, unit_monomial
from ..models.reports import BettiTable
from ..utils.linalg import EchelonBasis, Vector, kernel

logger = logging.getLogger(__name__)


@dataclass
class MinimalResolution:
    """F with its truncation bounds; F_{N+1} is built so that H_N(aF) is exact."""

    complex: BidegreeComplex
    hom_bound: int
    internal_bound: int
    label: str
    seed: Optional[int] = None

    @property
    def algebra(self) -> GradedAlgebra:
        return self.complex.algebra

    def betti(self) -> BettiTable:
        N, J = self.hom_bound, self.internal_bound
        entries = {}
        for i in range(N + 1):
            for gen in self.complex.gens(i):
                if gen.weight <= J:
                    entries[(i, gen.weight)] = entries.get((i, gen.weight), 0) + 1
        table = BettiTable.from_dict(entries, N, J, label=self.label)
        # generators sitting on the top column may continue past J
        table.complete = N < J and all(table.get(i, J) == 0 for i in range(N + 1))
        return table


def _mix(field: Field, vectors: List[Vector], rng: random.Random) -> List[Vector]:
    """Shuffle and replace v_t by v_t + sum_{s > t} r_s v_s: same span, other choices."""
    work = list(vectors)
    rng.shuffle(work)
    out = []
    for t, v in enumerate(work):
        mixed = dict(v)
        for w in work[t + 1 :]:
            field.axpy(mixed, w, field.random_element(rng))
        out.append(mixed)
    return out


def resolve_cyclic(
    algebra: GradedAlgebra,
    generators: Sequence[Generator],
    hom_bound: int,
    internal_bound: Optional[int] = None,
    label: str = "Tor(R/L,k)",
    name: str = "F",
    shuffle_seed: Optional[int] = None,
) -> MinimalResolution:
    """Minimal resolution of R/L, L generated by homogeneous elements (vector, degree).

    Raises:
        TruncationError: internal_bound exceeds the truncation of the algebra
    """
    f = algebra.field
    N = hom_bound
    J = algebra.truncation if internal_bound is None else internal_bound
    F = BidegreeComplex(algebra, N, J, name=name)
    F.add_generator(0, "1", 0)

    ideal = GradedIdealSlice.from_generators(algebra, generators, J)
    for t, (vec, d) in enumerate(ideal.minimal_generators()):
        F.add_generator(1, f"g1_{t + 1}", d, {0: vec})

    rng = random.Random(shuffle_seed) if shuffle_seed is not None else None
    for i in range(1, N + 1):
        previous: List[Vector] = []
        emitted = 0
        for j in range(J + 1):
            if not F.dim(i, j):
                previous = []
                continue
            generated = EchelonBasis(f)
            for v in previous:
                for k in range(algebra.nvars):
                    generated.add(F.multiply(v, i, j - 1, unit_monomial(algebra.nvars, k)))
            cycles = kernel(f, F.differential(i, j))
            logger.debug(f"{name}: ker ∂_{i} in degree {j} has dim {len(cycles)}")
            if rng is not None:
                cycles = _mix(f, cycles, rng)
            for z in cycles:
                if generated.add(z):
                    emitted += 1
                    F.add_generator(i + 1, f"g{i + 1}_{emitted}", j, F.from_vector(i, j, z))
            previous = generated.basis()
        logger.debug(f"{name}: step {i} emitted {emitted} generators of F_{i + 1}")
    logger.info(f"Resolved {label} up to ({N},{J}): ranks {[F.rank(i) for i in range(N + 1)]}")
    return MinimalResolution(F, N, J, label, shuffle_seed)


def minimal_resolution_of_k(
    algebra: GradedAlgebra,
    hom_bound: int,
    internal_bound: Optional[int] = None,
    shuffle_seed: Optional[int] = None,
) -> MinimalResolution:
    """Resolution of k = R/m; β_{i,j} = dim Tor^R_i(k,k)_j."""
    n = algebra.nvars
    gens = [(algebra.nf_monomial(unit_monomial(n, k)), 1) for k in range(n)]
    return resolve_cyclic(
        algebra, gens, hom_bound, internal_bound, label="Tor^R(k,k)", shuffle_seed=shuffle_seed
    )


def polynomial_ring(algebra: GradedAlgebra, truncation: Optional[int] = None) -> GradedAlgebra:
    """Q = k[x_1..x_e] built to the same truncation as R."""
    pres = algebra.presentation.with_relations(())
    return build_algebra(pres, algebra.truncation if truncation is None else truncation)


def resolve_over_ambient(
    ambient: GradedAlgebra,
    relations: Sequence[Polynomial],
    hom_bound: int,
    internal_bound: Optional[int] = None,
    label: str = "Tor^Q(R,k)",
) -> MinimalResolution:
    """Resolution of R = ambient/(relations) over the ambient ring (Q, or a CI ring P)."""
    gens = [ambient.element(rel) for rel in relations if not rel.is_zero()]
    return resolve_cyclic(ambient, gens, hom_bound, internal_bound, label=label, name="G")


def tor_over_polynomial_ring(
    algebra: GradedAlgebra, hom_bound: int, internal_bound: Optional[int] = None
) -> BettiTable:
    """Tor^Q(R,k), computed by resolving R over Q; Tor_i vanishes for i > e."""
    Q = polynomial_ring(algebra)
    steps = min(hom_bound, algebra.nvars + 1)
    res = resolve_over_ambient(Q, algebra.presentation.relations, steps, internal_bound)
    table = res.betti()
    J = table.internal
    entries = table.entries()
    return BettiTable.from_dict(entries, hom_bound, J, label="Tor^Q(R,k)", complete=table.complete)
