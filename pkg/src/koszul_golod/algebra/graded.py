"""Quadratic presentations and their truncated graded quotient algebras.

An element of R_d is a sparse vector over the standard monomials of degree
d (grevlex, largest first). Multiplication by each variable is tabulated
degree by degree, and every product is computed through these tables.
"""

import logging
from dataclasses import dataclass, field as dc_field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..core.field import Field
from ..core.groebner import GroebnerBasis, buchberger, standard_monomials
from ..core.polynomial import (
    Monomial,
    MonomialOrder,
    Polynomial,
    monomial_mul,
    quadric_space,
    unit_monomial,
)
from ..utils.errors import PresentationError, TruncationError
from ..utils.linalg import EchelonBasis, Vector
from .hilbert import HilbertSeries, hilbert_series

logger = logging.getLogger(__name__)


# ============================================================================
# Presentations
# ============================================================================


@dataclass(frozen=True)
class QuadraticPresentation:
    """R = k[names] / (relations) with homogeneous quadratic relations."""

    field: Field
    names: Tuple[str, ...]
    relations: Tuple[Polynomial, ...]
    truncation: Optional[int] = None

    @property
    def nvars(self) -> int:
        return len(self.names)

    def relation_texts(self) -> List[str]:
        return [r.format(self.names) for r in self.relations]

    def to_text(self) -> str:
        """Presentation file body that parses back to this presentation."""
        lines = [f"field: {self.field.name}", f"vars: {','.join(self.names)}"]
        lines.extend(f"rel: {t}" for t in self.relation_texts())
        if self.truncation is not None:
            lines.append(f"truncation: {self.truncation}")
        return "\n".join(lines) + "\n"

    def with_relations(self, relations: Sequence[Polynomial]) -> "QuadraticPresentation":
        return QuadraticPresentation(self.field, self.names, tuple(relations), self.truncation)

    def check(self) -> None:
        """Reject non-quadratic or linearly dependent relations."""
        f = self.field
        for i, rel in enumerate(self.relations):
            if rel.nvars != self.nvars:
                raise PresentationError(f"Relation {i + 1} lives in the wrong ring")
            if rel.is_zero():
                raise PresentationError(f"Relation {i + 1} is zero", dependency={i: f.format(f.one)})
            if not rel.is_homogeneous() or rel.degree != 2:
                raise PresentationError(
                    f"Relation {i + 1} ({rel.format(self.names)}) is not a homogeneous quadric"
                )
        _, vectors = quadric_space(self.relations, self.nvars)
        basis = EchelonBasis(f, tracked=True)
        for i, vec in enumerate(vectors):
            dep = basis.insert(vec, {i: f.one})
            if dep is not None:
                raise PresentationError(
                    f"Relations are linearly dependent (relation {i + 1} is redundant)",
                    dependency={j: f.format(c) for j, c in sorted(dep.items())},
                )


# ============================================================================
# Linear forms
# ============================================================================


@dataclass(frozen=True)
class LinearForm:
    """Element of R_1 as a coefficient tuple over the variables."""

    coeffs: Tuple[Any, ...]

    @classmethod
    def variable(cls, field: Field, nvars: int, i: int) -> "LinearForm":
        return cls(tuple(field.one if k == i else field.zero for k in range(nvars)))

    @classmethod
    def from_vector(cls, field: Field, vec: Vector, nvars: int) -> "LinearForm":
        return cls(tuple(vec.get(k, field.zero) for k in range(nvars)))

    def vector(self, field: Field) -> Vector:
        return {k: c for k, c in enumerate(self.coeffs) if not field.is_zero(c)}

    def is_zero(self, field: Field) -> bool:
        return all(field.is_zero(c) for c in self.coeffs)

    def scale(self, field: Field, c: Any) -> "LinearForm":
        return LinearForm(tuple(field.mul(c, x) for x in self.coeffs))

    def add(self, field: Field, other: "LinearForm") -> "LinearForm":
        return LinearForm(tuple(field.add(a, b) for a, b in zip(self.coeffs, other.coeffs)))

    def to_polynomial(self, field: Field) -> Polynomial:
        return Polynomial.linear(field, self.coeffs)

    def format(self, field: Field, names: Sequence[str]) -> str:
        return self.to_polynomial(field).format(names)


# ============================================================================
# Graded algebra
# ============================================================================


@dataclass
class GradedAlgebra:
    """Standard-monomial bases and multiplication tables of R up to degree ``truncation``."""

    presentation: QuadraticPresentation
    gb: GroebnerBasis
    truncation: int
    bases: List[List[Monomial]]
    mult: List[List[List[Vector]]]
    hilbert: HilbertSeries
    _index: List[Dict[Monomial, int]] = dc_field(default_factory=list, repr=False)
    _nf_cache: Dict[Monomial, Vector] = dc_field(default_factory=dict, repr=False)

    def __post_init__(self) -> None:
        if not self._index:
            self._index = [{m: i for i, m in enumerate(b)} for b in self.bases]

    # -- basic data ---------------------------------------------------------

    @property
    def field(self) -> Field:
        return self.presentation.field

    @property
    def nvars(self) -> int:
        return self.presentation.nvars

    @property
    def names(self) -> Tuple[str, ...]:
        return self.presentation.names

    @property
    def h(self) -> List[int]:
        return [len(b) for b in self.bases]

    def dim(self, d: int) -> int:
        if d < 0:
            return 0
        self._check_degree(d)
        return len(self.bases[d])

    def basis(self, d: int) -> List[Monomial]:
        self._check_degree(d)
        return self.bases[d]

    def index(self, d: int) -> Dict[Monomial, int]:
        self._check_degree(d)
        return self._index[d]

    def _check_degree(self, d: int) -> None:
        if d > self.truncation:
            raise TruncationError(f"Degree {d} exceeds the truncation J={self.truncation}")

    def is_artinian(self) -> bool:
        return self.hilbert.is_polynomial

    def unit(self) -> Vector:
        return {0: self.field.one}

    # -- multiplication -----------------------------------------------------

    def times_variable(self, k: int, vec: Vector, d: int) -> Vector:
        """x_k * vec for vec in R_d."""
        if d + 1 > self.truncation:
            raise TruncationError(f"Product lands in degree {d + 1} > J={self.truncation}")
        table = self.mult[d][k]
        out: Vector = {}
        f = self.field
        for i, c in vec.items():
            f.axpy(out, table[i], c)
        return out

    def times_linear(self, form: LinearForm, vec: Vector, d: int) -> Vector:
        out: Vector = {}
        f = self.field
        for k, c in enumerate(form.coeffs):
            if not f.is_zero(c):
                f.axpy(out, self.times_variable(k, vec, d), c)
        return out

    def times_monomial(self, mono: Monomial, vec: Vector, d: int) -> Vector:
        current = vec
        deg = d
        for k, exp in enumerate(mono):
            for _ in range(exp):
                if not current:
                    return {}
                current = self.times_variable(k, current, deg)
                deg += 1
        return current

    def nf_monomial(self, mono: Monomial) -> Vector:
        """Coordinates of the class of a monomial in R_{|mono|}."""
        cached = self._nf_cache.get(mono)
        if cached is not None:
            return cached
        d = sum(mono)
        if d == 0:
            result = self.unit()
        else:
            k = next(i for i, e in enumerate(mono) if e > 0)
            rest = tuple(e - 1 if i == k else e for i, e in enumerate(mono))
            result = self.times_variable(k, self.nf_monomial(rest), d - 1)
        self._nf_cache[mono] = result
        return result

    def multiply(self, a: Vector, da: int, b: Vector, db: int) -> Vector:
        """Product of a in R_da and b in R_db."""
        out: Vector = {}
        f = self.field
        basis = self.basis(da)
        for i, c in a.items():
            f.axpy(out, self.times_monomial(basis[i], b, db), c)
        return out

    def element(self, p: Polynomial) -> Tuple[Vector, int]:
        """Class of a homogeneous polynomial and its degree."""
        if p.is_zero():
            return {}, 0
        if not p.is_homogeneous():
            raise ValueError("element() expects a homogeneous polynomial")
        d = int(p.degree)
        out: Vector = {}
        f = self.field
        for m, c in p.terms.items():
            f.axpy(out, self.nf_monomial(m), c)
        return out, d

    def linear_element(self, form: LinearForm) -> Vector:
        out: Vector = {}
        f = self.field
        for k, c in enumerate(form.coeffs):
            if not f.is_zero(c):
                f.axpy(out, self.nf_monomial(unit_monomial(self.nvars, k)), c)
        return out

    def linear_form(self, vec: Vector) -> LinearForm:
        """LinearForm of an element of R_1 given in basis coordinates."""
        f = self.field
        coeffs = [f.zero] * self.nvars
        basis = self.basis(1)
        for i, c in vec.items():
            coeffs[basis[i].index(1)] = c
        return LinearForm(tuple(coeffs))

    def to_polynomial(self, vec: Vector, d: int) -> Polynomial:
        basis = self.basis(d)
        return Polynomial(self.field, self.nvars, {basis[i]: c for i, c in vec.items()})

    def format_element(self, vec: Vector, d: int) -> str:
        return self.to_polynomial(vec, d).format(self.names)

    def linear_matrix(self, form: LinearForm, d: int) -> List[Vector]:
        return [self.times_linear(form, {i: self.field.one}, d) for i in range(self.dim(d))]

    def describe(self) -> str:
        return (
            f"R = {self.field.name}[{','.join(self.names)}]/"
            f"({', '.join(self.presentation.relation_texts())})"
        )


def build_algebra(
    presentation: QuadraticPresentation,
    truncation: int,
    order: Optional[MonomialOrder] = None,
) -> GradedAlgebra:
    """Build R = Q/I up to internal degree ``truncation``.

    Raises:
        PresentationError: non-quadratic or linearly dependent relations
        TruncationError: truncation below 2
    """
    if truncation < 2:
        raise TruncationError(f"Truncation J={truncation} is below 2")
    presentation.check()
    n = presentation.nvars
    order = order or MonomialOrder.grevlex(n)
    gb = buchberger(list(presentation.relations), order)
    bases = [standard_monomials(gb, d, n) for d in range(truncation + 1)]
    index = [{m: i for i, m in enumerate(b)} for b in bases]

    mult: List[List[List[Vector]]] = []
    f = presentation.field
    for d in range(truncation):
        per_var: List[List[Vector]] = []
        target = index[d + 1]
        for k in range(n):
            x_k = unit_monomial(n, k)
            columns = []
            for b in bases[d]:
                m = monomial_mul(b, x_k)
                if m in target:
                    columns.append({target[m]: f.one})
                else:
                    nf = gb.normal_form(Polynomial.monomial(f, m))
                    columns.append({target[mm]: c for mm, c in nf.terms.items()})
            per_var.append(columns)
        mult.append(per_var)

    series = hilbert_series(gb.leading, n)
    algebra = GradedAlgebra(
        presentation=presentation,
        gb=gb,
        truncation=truncation,
        bases=bases,
        mult=mult,
        hilbert=series,
        _index=index,
    )
    logger.info(
        f"Built algebra with e={n}, {len(presentation.relations)} relations over "
        f"{f.name}: h={algebra.h}"
    )
    return algebra
