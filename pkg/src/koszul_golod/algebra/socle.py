"""Degree-one socle and the trivial fiber reduction."""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from ..core.polynomial import Polynomial, quadric_space
from ..utils.linalg import EchelonBasis, kernel
from .graded import GradedAlgebra, LinearForm, QuadraticPresentation, build_algebra

logger = logging.getLogger(__name__)


def socle_degree1(algebra: GradedAlgebra) -> List[LinearForm]:
    """Basis of {v in R_1 : v R_1 = 0}."""
    f = algebra.field
    n = algebra.nvars
    if algebra.dim(1) == 0:
        return []
    width = algebra.dim(2)
    images = []
    for i in range(algebra.dim(1)):
        combined = {}
        for k in range(n):
            for j, c in algebra.times_variable(k, {i: f.one}, 1).items():
                combined[k * width + j] = c
        images.append(combined)
    return [algebra.linear_form(v) for v in kernel(f, images)]


@dataclass
class TrivialFiberReduction:
    """R' = R / (socle forms), with R = R' plus s free socle variables."""

    original: GradedAlgebra
    reduced: GradedAlgebra
    socle_forms: List[LinearForm]
    kept_variables: List[int]

    @property
    def s(self) -> int:
        return len(self.socle_forms)


def _reduced_rows(algebra: GradedAlgebra, forms: List[LinearForm]) -> List[Tuple[int, dict]]:
    """Fully reduced echelon rows (pivot, row) spanning the forms."""
    f = algebra.field
    basis = EchelonBasis(f)
    for form in forms:
        basis.add(form.vector(f))
    pivots = basis.pivots()
    rows = {p: dict(basis.rows[p]) for p in pivots}
    for p in reversed(pivots):
        row = rows[p]
        for q in pivots:
            if q > p and q in row:
                f.axpy(row, rows[q], f.neg(row[q]))
    return [(p, rows[p]) for p in pivots]


def quotient_by_linear_forms(
    algebra: GradedAlgebra, forms: List[LinearForm]
) -> Tuple[QuadraticPresentation, List[int]]:
    """Presentation of R/(forms) on the non-pivot variables."""
    f = algebra.field
    n = algebra.nvars
    rows = _reduced_rows(algebra, forms)
    pivots = {p for p, _ in rows}
    kept = [k for k in range(n) if k not in pivots]
    position = {k: i for i, k in enumerate(kept)}
    m = len(kept)
    images = [Polynomial.zero(f, m) for _ in range(n)]
    for k in kept:
        images[k] = Polynomial.variable(f, m, position[k])
    for p, row in rows:
        # x_p = -(sum of the non-pivot entries) modulo the forms
        coeffs = [f.zero] * m
        for k, c in row.items():
            if k != p:
                coeffs[position[k]] = f.neg(c)
        images[p] = Polynomial.linear(f, coeffs) if m else Polynomial.zero(f, 0)

    pres = algebra.presentation
    relations = []
    seen = EchelonBasis(f)
    substituted = [rel.substitute(images) for rel in pres.relations]
    _, vectors = quadric_space(substituted, m)
    for rel, vec in zip(substituted, vectors):
        if rel and seen.add(vec):
            relations.append(rel)
    names = tuple(pres.names[k] for k in kept)
    return QuadraticPresentation(f, names, tuple(relations), pres.truncation), kept


def trivial_fiber_reduce(algebra: GradedAlgebra) -> TrivialFiberReduction:
    """Strip the degree-one socle: H_R(t) = H_R'(t) + s*t."""
    forms = socle_degree1(algebra)
    if not forms:
        return TrivialFiberReduction(algebra, algebra, [], list(range(algebra.nvars)))
    pres, kept = quotient_by_linear_forms(algebra, forms)
    reduced = build_algebra(pres, algebra.truncation)
    logger.info(f"Trivial fiber reduction removed s={len(forms)} socle form(s); e'={len(kept)}")
    return TrivialFiberReduction(algebra, reduced, forms, kept)
