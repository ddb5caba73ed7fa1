"""The Koszul complex K = R<X_1, ..., X_e> on the variables of R."""

import itertools
import logging
from typing import Dict, List, Optional, Sequence, Tuple

from ..algebra.graded import GradedAlgebra
from ..core.polynomial import unit_monomial
from ..utils.linalg import Vector
from .bidegree import BidegreeComplex

logger = logging.getLogger(__name__)

Subset = Tuple[int, ...]


def exterior_label(subset: Subset, names: Sequence[str]) -> str:
    if not subset:
        return "1"
    return "X[" + ",".join(names[a] for a in subset) + "]"


def wedge(subset: Subset, k: int) -> Optional[Tuple[int, Subset]]:
    """X_S ∧ X_k = sign * X_T with T sorted, or None when k is in S."""
    if k in subset:
        return None
    larger = sum(1 for s in subset if s > k)
    return (-1) ** larger, tuple(sorted(subset + (k,)))


def variable_vectors(algebra: GradedAlgebra) -> List[Vector]:
    n = algebra.nvars
    return [algebra.nf_monomial(unit_monomial(n, k)) for k in range(n)]


def exterior_boundary(algebra: GradedAlgebra, subset: Subset) -> List[Tuple[Subset, Vector]]:
    """∂X_S = sum_t (-1)^t x_{a_t} X_{S minus a_t}, t counted from 0."""
    f = algebra.field
    xs = variable_vectors(algebra)
    out = []
    for t, a in enumerate(subset):
        coeff = xs[a] if t % 2 == 0 else f.scale(xs[a], f.neg(f.one))
        out.append((subset[:t] + subset[t + 1 :], coeff))
    return out


class KoszulComplex(BidegreeComplex):
    """K with generators X_S in bidegree (|S|, |S|)."""

    def __init__(self, algebra: GradedAlgebra, hom_bound: int, internal_bound: int):
        super().__init__(algebra, hom_bound, internal_bound, name="K")
        self.index: Dict[Subset, int] = {}


def koszul_complex(
    algebra: GradedAlgebra, hom_bound: Optional[int] = None, internal_bound: Optional[int] = None
) -> KoszulComplex:
    """K up to (hom_bound, internal_bound); generators are built one degree past hom_bound."""
    e = algebra.nvars
    N = e if hom_bound is None else hom_bound
    J = algebra.truncation if internal_bound is None else internal_bound
    K = KoszulComplex(algebra, N, J)
    for i in range(min(N + 1, e) + 1):
        for subset in itertools.combinations(range(e), i):
            boundary = {}
            for face, coeff in exterior_boundary(algebra, subset):
                if coeff:
                    boundary[K.index[face]] = coeff
            K.index[subset] = K.add_generator(i, exterior_label(subset, algebra.names), i, boundary)
    logger.debug(f"Koszul complex: ranks {[K.rank(i) for i in range(min(N + 1, e) + 1)]}")
    return K
