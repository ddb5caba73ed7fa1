"""Linear forms of R_1: ranks, null squares, changes of variables and the V/W subspaces."""

import itertools
import logging
import random
from dataclasses import dataclass, field as dc_field
from typing import Any, Iterator, List, Optional, Sequence

from ..core.field import Field, make_field
from ..utils.errors import SingularMatrixError
from ..utils.linalg import EchelonBasis, Vector, intersection, inverse, is_invertible, kernel, rank
from .graded import GradedAlgebra, LinearForm, QuadraticPresentation, build_algebra

logger = logging.getLogger(__name__)


def square(algebra: GradedAlgebra, form: LinearForm) -> Vector:
    return algebra.times_linear(form, algebra.linear_element(form), 1)


def product(algebra: GradedAlgebra, a: LinearForm, b: LinearForm) -> Vector:
    return algebra.times_linear(a, algebra.linear_element(b), 1)


def rank_of(algebra: GradedAlgebra, form: LinearForm) -> int:
    """dim x R_1."""
    return rank(algebra.field, algebra.linear_matrix(form, 1))


# ============================================================================
# Candidate enumeration
# ============================================================================


def projective_points(field: Field, n: int) -> Iterator[tuple]:
    """Vectors of F_q^n with first nonzero entry 1, in a fixed order."""
    elements = list(field.elements())
    for lead in range(n):
        for tail in itertools.product(elements, repeat=n - lead - 1):
            yield (field.zero,) * lead + (field.one,) + tuple(tail)


def small_rational_points(field: Field, n: int) -> Iterator[tuple]:
    """Projective points with coordinates in {-1, 0, 1}."""
    values = [field.zero, field.one, field.neg(field.one)]
    for lead in range(n):
        for tail in itertools.product(values, repeat=n - lead - 1):
            yield (field.zero,) * lead + (field.one,) + tuple(tail)


def candidate_points(field: Field, n: int, enum_limit: int) -> Iterator[tuple]:
    if field.is_finite and (field.order or 0) ** n <= enum_limit:
        return projective_points(field, n)
    return small_rational_points(field, n)


def points_in_span(field: Field, spanning: Sequence[tuple], enum_limit: int) -> Iterator[tuple]:
    """Projective points of the span of ``spanning`` (given as coefficient tuples)."""
    k = len(spanning)
    if k == 0:
        return iter(())
    n = len(spanning[0])

    def combine(coeffs: tuple) -> tuple:
        out = [field.zero] * n
        for c, vec in zip(coeffs, spanning):
            if not field.is_zero(c):
                out = [field.add(a, field.mul(c, b)) for a, b in zip(out, vec)]
        return tuple(out)

    return (combine(c) for c in candidate_points(field, k, enum_limit))


# ============================================================================
# Null-square search
# ============================================================================


@dataclass
class NullSquareResult:
    """Outcome of the null-square search, including the strategy ladder."""

    form: Optional[LinearForm]
    field_name: str
    ladder: List[str] = dc_field(default_factory=list)
    extension_form_text: Optional[str] = None

    @property
    def found(self) -> bool:
        return self.form is not None or self.extension_form_text is not None


def _square_checker(algebra: GradedAlgebra):
    """Fast x^2 = 0 test from the products x_i x_j."""
    f = algebra.field
    n = algebra.nvars
    prods = {}
    for i in range(n):
        vi = algebra.linear_element(LinearForm.variable(f, n, i))
        for j in range(i, n):
            prods[(i, j)] = algebra.times_variable(j, vi, 1)

    def is_null(coeffs: Sequence[Any]) -> bool:
        acc: Vector = {}
        for (i, j), vec in prods.items():
            ci, cj = coeffs[i], coeffs[j]
            if f.is_zero(ci) or f.is_zero(cj):
                continue
            c = f.mul(ci, cj)
            if i != j:
                c = f.add(c, c)
            f.axpy(acc, vec, c)
        return not acc

    return is_null


def null_square_forms(
    algebra: GradedAlgebra, enum_limit: int, within: Optional[Sequence[LinearForm]] = None
) -> Iterator[LinearForm]:
    """All nonzero null-square forms among the candidate points (optionally inside a span)."""
    f = algebra.field
    is_null = _square_checker(algebra)
    if within is None:
        points = candidate_points(f, algebra.nvars, enum_limit)
    else:
        points = points_in_span(f, [x.coeffs for x in within], enum_limit)
    for p in points:
        if any(not f.is_zero(c) for c in p) and is_null(p):
            yield LinearForm(tuple(p))


def null_square_search(
    algebra: GradedAlgebra,
    enum_limit: int = 1_000_000,
    random_trials: int = 100_000,
    seed: int = 0,
    extension_retry: bool = False,
) -> NullSquareResult:
    """Find x != 0 in R_1 with x^2 = 0, walking the strategy ladder."""
    f = algebra.field
    n = algebra.nvars
    result = NullSquareResult(form=None, field_name=f.name)
    if n == 0:
        result.ladder.append("no variables")
        return result

    is_null = _square_checker(algebra)
    exhaustive = f.is_finite and (f.order or 0) ** n <= enum_limit
    checked = 0
    for p in candidate_points(f, n, enum_limit):
        checked += 1
        if is_null(p):
            result.form = LinearForm(tuple(p))
            result.ladder.append(
                f"{'enumeration' if exhaustive else 'small-coefficient enumeration'}: found after {checked} points"
            )
            return result
    result.ladder.append(
        f"{'enumeration' if exhaustive else 'small-coefficient enumeration'}: none among {checked} points"
    )
    if exhaustive:
        result.ladder.append("enumeration was exhaustive: no null-square form over " + f.name)
    else:
        rng = random.Random(seed)
        for trial in range(random_trials):
            p = tuple(f.random_element(rng) for _ in range(n))
            if any(not f.is_zero(c) for c in p) and is_null(p):
                result.form = LinearForm(p)
                result.ladder.append(f"random sampling: found at trial {trial + 1}")
                return result
        result.ladder.append(f"random sampling: none in {random_trials} trials")

    if extension_retry and f.is_finite and f.degree == 1:
        ext = make_field(f.characteristic, 2)
        pres = algebra.presentation
        lifted = QuadraticPresentation(
            ext, pres.names, tuple(r.map_coefficients(lambda c: c, ext) for r in pres.relations), pres.truncation
        )
        ext_alg = build_algebra(lifted, min(algebra.truncation, 3))
        sub = null_square_search(ext_alg, enum_limit, random_trials, seed, extension_retry=False)
        if sub.form is not None:
            result.extension_form_text = sub.form.format(ext, pres.names)
            result.ladder.append(f"extension retry over {ext.name}: found {result.extension_form_text}")
        else:
            result.ladder.append(f"extension retry over {ext.name}: none")
    logger.info(f"null_square_search over {f.name}: {'; '.join(result.ladder)}")
    return result


# ============================================================================
# Changes of variables
# ============================================================================


def apply_change(presentation: QuadraticPresentation, matrix: Sequence[Sequence[Any]]) -> QuadraticPresentation:
    """Substitute x_i -> sum_j matrix[i][j] x_j in every relation.

    Raises:
        SingularMatrixError: matrix not invertible over the field
    """
    f = presentation.field
    n = presentation.nvars
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise SingularMatrixError(f"Change of variables must be a {n}x{n} matrix")
    if not is_invertible(f, matrix):
        raise SingularMatrixError("Change of variables is singular")
    relations = tuple(rel.linear_change(matrix) for rel in presentation.relations)
    return presentation.with_relations(relations)


def coordinates_change(
    presentation: QuadraticPresentation, forms: Sequence[LinearForm]
) -> QuadraticPresentation:
    """Presentation in which the given basis of R_1 becomes the variables x_1, ..., x_e."""
    f = presentation.field
    rows = [list(x.coeffs) for x in forms]
    inv = inverse(f, rows)
    # old x_j = sum_i inv[j][i] * new y_i
    return apply_change(presentation, inv)


def complete_to_basis(field: Field, forms: Sequence[LinearForm], n: int) -> List[LinearForm]:
    """Extend independent forms by unit vectors to a basis of k^n."""
    basis = EchelonBasis(field)
    out = []
    for x in forms:
        if basis.add(x.vector(field)):
            out.append(x)
    for k in range(n):
        unit = LinearForm.variable(field, n, k)
        if len(out) == n:
            break
        if basis.add(unit.vector(field)):
            out.append(unit)
    return out


def forms_independent(field: Field, forms: Sequence[LinearForm]) -> bool:
    return rank(field, [x.vector(field) for x in forms]) == len(forms)


# ============================================================================
# Subspaces of R_1 attached to a form
# ============================================================================


def annihilator_forms(algebra: GradedAlgebra, form: LinearForm) -> List[LinearForm]:
    """V = ann(x) ∩ R_1."""
    f = algebra.field
    images = [
        algebra.times_linear(form, {i: f.one}, 1) for i in range(algebra.dim(1))
    ]
    return [algebra.linear_form(v) for v in kernel(f, images)]


def multiplier_forms(algebra: GradedAlgebra, form: LinearForm) -> List[LinearForm]:
    """W = {r in R_1 : r m ⊆ x m}."""
    f = algebra.field
    n = algebra.nvars
    target = EchelonBasis(f)
    for col in algebra.linear_matrix(form, 1):
        target.add(col)
    width = algebra.dim(2)
    images = []
    for i in range(algebra.dim(1)):
        combined: Vector = {}
        for k in range(n):
            reduced = target.reduce(algebra.times_variable(k, {i: f.one}, 1))
            for j, c in reduced.items():
                combined[k * width + j] = c
        images.append(combined)
    return [algebra.linear_form(v) for v in kernel(f, images)]


@dataclass
class FormSubspaces:
    """V, W and W' = V ∩ W for a linear form x."""

    rank: int
    V: List[LinearForm]
    W: List[LinearForm]
    W_prime: List[LinearForm]


def form_subspaces(algebra: GradedAlgebra, form: LinearForm) -> FormSubspaces:
    f = algebra.field
    V = annihilator_forms(algebra, form)
    W = multiplier_forms(algebra, form)
    inter = intersection(f, [x.vector(f) for x in V], [x.vector(f) for x in W])
    n = algebra.nvars
    return FormSubspaces(
        rank=rank_of(algebra, form),
        V=V,
        W=W,
        W_prime=[LinearForm.from_vector(f, v, n) for v in inter],
    )
