"""Short Tate complexes D = K<Z_1, ..., Z_d | ∂Z_i = z_i>.

Each Z_i is a divided-power variable of bidegree (2, 2) killing a cycle
z_i = sum_k c_ik X_k of K_1 with c_ik in R_1. Basis symbols are
X_S Z^(mu) with S an increasing index tuple and mu a multi-exponent;
the differential is

  ∂(X_S Z^(mu)) = ∂(X_S) Z^(mu) + (-1)^|S| sum_i X_S z_i Z^(mu - e_i).

Divided powers only enter through the labels; products Z^(a) Z^(b) are
never formed.
"""

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from ..algebra.graded import GradedAlgebra
from ..core.polynomial import Polynomial, unit_monomial
from ..utils.errors import ComplexError
from ..utils.linalg import Vector
from .bidegree import BidegreeComplex
from .koszul import Subset, exterior_boundary, exterior_label, variable_vectors, wedge

logger = logging.getLogger(__name__)

# Cycle of K_1: variable index k -> coefficient of X_k in R_1.
Cycle = Dict[int, Vector]
Exponent = Tuple[int, ...]


def cycle_boundary(algebra: GradedAlgebra, cycle: Cycle) -> Vector:
    """∂(sum_k c_k X_k) = sum_k c_k x_k in R_2."""
    f = algebra.field
    xs = variable_vectors(algebra)
    out: Vector = {}
    for k, coeff in cycle.items():
        f.axpy(out, algebra.multiply(coeff, 1, xs[k], 1), f.one)
    return out


def cycle_from_quadric(algebra: GradedAlgebra, quadric: Polynomial) -> Cycle:
    """The cycle of K_1 lifting a quadric of I: x_a x_b contributes x_b X_a, a the first variable.

    Raises:
        ComplexError: the quadric is not homogeneous of degree 2 or not in I
    """
    f = algebra.field
    n = algebra.nvars
    if quadric.is_zero() or not quadric.is_homogeneous() or quadric.degree != 2:
        raise ComplexError(f"{quadric.format(algebra.names)} is not a quadric")
    cycle: Cycle = {}
    for mono, c in quadric.terms.items():
        a = next(k for k, exp in enumerate(mono) if exp > 0)
        b = next(k for k, exp in enumerate(mono) if exp - (1 if k == a else 0) > 0)
        coeff = f.scale(algebra.nf_monomial(unit_monomial(n, b)), c)
        cycle.setdefault(a, {})
        f.axpy(cycle[a], coeff, f.one)
    cycle = {k: v for k, v in cycle.items() if v}
    if cycle_boundary(algebra, cycle):
        raise ComplexError(
            f"{quadric.format(algebra.names)} is not in I: its lift is not a cycle of K_1",
            hint="Witness quadrics must lie in the defining ideal of R.",
        )
    return cycle


def format_cycle(algebra: GradedAlgebra, cycle: Cycle) -> str:
    pieces = []
    for k in sorted(cycle):
        coeff = algebra.format_element(cycle[k], 1)
        pieces.append(f"({coeff})*X[{algebra.names[k]}]")
    return " + ".join(pieces) or "0"


def _exponents(d: int, total: int) -> Iterator[Exponent]:
    """Multi-exponents of length d and sum ``total`` in lexicographic order."""
    if d == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _exponents(d - 1, total - first):
            yield (first,) + rest


def divided_label(mu: Exponent) -> str:
    parts = []
    for i, m in enumerate(mu):
        if m == 1:
            parts.append(f"Z{i + 1}")
        elif m > 1:
            parts.append(f"Z{i + 1}^({m})")
    return "*".join(parts)


@dataclass
class ShortTateComplex:
    """D together with the cycles it kills and the quadrics they come from."""

    complex: BidegreeComplex
    cycles: List[Cycle]
    quadrics: List[Polynomial] = dc_field(default_factory=list)
    regular: Optional[bool] = None
    index: Dict[Tuple[Subset, Exponent], int] = dc_field(default_factory=dict)

    @property
    def d(self) -> int:
        return len(self.cycles)

    @property
    def algebra(self) -> GradedAlgebra:
        return self.complex.algebra

    def describe(self) -> str:
        alg = self.algebra
        if not self.cycles:
            return "D = K"
        parts = [f"∂Z{i + 1} = {format_cycle(alg, z)}" for i, z in enumerate(self.cycles)]
        return "D = K<" + ", ".join(f"Z{i + 1}" for i in range(self.d)) + " | " + "; ".join(parts) + ">"


def adjoin_divided(
    K: BidegreeComplex,
    cycles: Sequence[Cycle],
    quadrics: Optional[Sequence[Polynomial]] = None,
    regular: Optional[bool] = None,
    verify: bool = True,
) -> ShortTateComplex:
    """Build D = K<Z_1..Z_d | ∂Z_i = z_i> to the bounds of K.

    Raises:
        ComplexError: an input is not a cycle of K_1, or ∂∘∂ != 0
    """
    alg = K.algebra
    f = alg.field
    e = alg.nvars
    d = len(cycles)
    for i, z in enumerate(cycles):
        if cycle_boundary(alg, z):
            raise ComplexError(f"Input {i + 1} ({format_cycle(alg, z)}) is not a cycle of K_1")

    N, J = K.hom_bound, K.internal_bound
    D = BidegreeComplex(alg, N, J, name="D")
    tate = ShortTateComplex(D, list(cycles), list(quadrics or []), regular)
    index = tate.index
    for hom in range(N + 2):
        if hom > J:
            break
        for half in range(hom // 2 + 1):
            size = hom - 2 * half
            if size > e:
                continue
            for mu in _exponents(d, half):
                for subset in itertools.combinations(range(e), size):
                    boundary: Dict[int, Vector] = {}
                    for face, coeff in exterior_boundary(alg, subset):
                        if coeff:
                            target = index[(face, mu)]
                            boundary.setdefault(target, {})
                            f.axpy(boundary[target], coeff, f.one)
                    sign_s = -1 if size % 2 else 1
                    for i, m in enumerate(mu):
                        if m == 0:
                            continue
                        lowered = mu[:i] + (m - 1,) + mu[i + 1 :]
                        for k, coeff in cycles[i].items():
                            moved = wedge(subset, k)
                            if moved is None:
                                continue
                            sign, bigger = moved
                            target = index[(bigger, lowered)]
                            c = f.from_int(sign * sign_s)
                            boundary.setdefault(target, {})
                            f.axpy(boundary[target], coeff, c)
                    label = "*".join(p for p in (exterior_label(subset, alg.names), divided_label(mu)) if p != "1" and p)
                    index[(subset, mu)] = D.add_generator(hom, label or "1", hom, boundary)
    if verify:
        D.verify_square_zero()
    logger.debug(f"Short Tate complex with d={d}: ranks {[D.rank(i) for i in range(N + 2)]}")
    return tate


def short_tate_from_quadrics(
    K: BidegreeComplex, quadrics: Sequence[Polynomial], regular: Optional[bool] = None
) -> ShortTateComplex:
    cycles = [cycle_from_quadric(K.algebra, q) for q in quadrics]
    return adjoin_divided(K, cycles, quadrics, regular)
