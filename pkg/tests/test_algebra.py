"""
Tests for graded algebras: Hilbert functions, ideal slices, the degree-one
socle reduction and null-square forms.
"""

import sys
from pathlib import Path

import pytest
import sympy

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.algebra.graded import LinearForm, build_algebra  # noqa: E402
from src.koszul_golod.algebra.hilbert import (  # noqa: E402
    complete_intersection_series,
    hilbert_series_from_numerator,
)
from src.koszul_golod.algebra.ideals import (  # noqa: E402
    GradedIdealSlice,
    annihilator_of_form,
    colon,
    contains,
    equals,
    ideal_product,
    ideal_sum,
)
from src.koszul_golod.algebra.socle import socle_degree1, trivial_fiber_reduce  # noqa: E402
from src.koszul_golod.algebra.structure import (  # noqa: E402
    annihilator_forms,
    apply_change,
    form_subspaces,
    null_square_search,
    rank_of,
    square,
)
from src.koszul_golod.core.parsing import parse_presentation  # noqa: E402
from src.koszul_golod.utils.errors import (  # noqa: E402
    PresentationError,
    SingularMatrixError,
    TruncationError,
)

CASE1 = ("x^2", "y^2", "z^2", "y*z")


class TestHilbertFunction:
    """Standard-monomial bases give the Hilbert function of R."""

    def test_artinian_ring(self, algebra_of):
        """k[x,y,z]/(x^2,y^2,z^2,yz) has h = 1,3,2,0."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=5)
        assert alg.h == [1, 3, 2, 0, 0, 0]
        assert alg.is_artinian()
        assert alg.hilbert.is_polynomial

    def test_complete_intersection(self, algebra_of):
        """Three squares give (1+t)^3."""
        alg = algebra_of("QQ", "x,y,z", "x^2", "y^2", "z^2", truncation=4)
        assert alg.h[:5] == [1, 3, 3, 1, 0]
        assert alg.hilbert.matches(*_ci_terms(3, 3))

    def test_hypersurface(self, algebra_of):
        """k[x,y]/(xy) has h_n = 2 for n >= 1 and series (1+t)/(1-t)."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=6)
        assert alg.h == [1, 2, 2, 2, 2, 2, 2]
        assert not alg.is_artinian()
        assert alg.hilbert.matches([1, 1], 1)

    def test_non_artinian_embedding_dimension_four(self, algebra_of):
        """Only x2^n survives past degree 2 in this e=4 ring."""
        alg = algebra_of(
            "QQ", "x1,x2,x3,x4",
            "x1^2", "x1*x2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2",
            truncation=5,
        )
        assert alg.h == [1, 4, 3, 1, 1, 1]

    def test_series_coefficients(self):
        """(1+2t-2t^3)/(1-t) expands to 1,3,3,1,1,..."""
        series = hilbert_series_from_numerator([1, 2, 0, -2], 1)
        assert series.coefficients(6) == [1, 3, 3, 1, 1, 1, 1]
        assert complete_intersection_series(2, 2).coefficients(3) == [1, 2, 1, 0]

    def test_series_as_sympy_expression(self, algebra_of):
        """The rational series simplifies to (1+t)/(1-t) for k[x,y]/(xy)."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        t = sympy.Symbol("t")
        assert sympy.simplify(alg.hilbert.as_expr() - (1 + t) / (1 - t)) == 0

    def test_describe(self, algebra_of):
        """describe() names the field, the variables and the relations."""
        alg = algebra_of("GF(2)", "x,y", "x^2", "y^2", truncation=3)
        assert alg.describe() == "R = GF(2)[x,y]/(x^2, y^2)"


def _ci_terms(e, d):
    series = complete_intersection_series(e, d)
    return series.numerator, series.dimension


class TestPresentationChecks:
    """Relations must be independent homogeneous quadrics."""

    def test_dependent_relations(self):
        """A redundant relation is reported with its dependency."""
        pres = parse_presentation("field: QQ\nvars: x,y\nrel: x^2\nrel: 2*x^2\n")
        with pytest.raises(PresentationError) as info:
            build_algebra(pres, 4)
        assert info.value.dependency

    def test_cubic_relation(self):
        """Cubic relations are rejected."""
        pres = parse_presentation("field: QQ\nvars: x,y\nrel: x^3\n")
        with pytest.raises(PresentationError, match="homogeneous quadric"):
            build_algebra(pres, 4)

    def test_truncation_below_two(self):
        """J must be at least 2."""
        pres = parse_presentation("field: QQ\nvars: x\nrel: x^2\n")
        with pytest.raises(TruncationError):
            build_algebra(pres, 1)


class TestIdealSlices:
    """Degree pieces of ideals in R."""

    def test_powers_of_maximal_ideal(self, algebra_of):
        """dim (m^2)_d = h_d for d >= 2 and 0 below."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        m2 = GradedIdealSlice.power(alg, 2)
        assert m2.dims() == [0, 0, 2, 2, 2]

    def test_slices_are_ideals(self, algebra_of):
        """R_1 * (m^2)_d lies in (m^2)_{d+1}."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=4)
        assert GradedIdealSlice.power(alg, 2).is_closed()

    def test_product_of_powers(self, algebra_of):
        """m * m = m^2."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=4)
        m = GradedIdealSlice.power(alg, 1)
        assert equals(ideal_product(m, m), GradedIdealSlice.power(alg, 2), depth=3)

    def test_sum_and_containment(self, algebra_of):
        """m + m^2 = m, and m contains m^2 but not conversely."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        m = GradedIdealSlice.power(alg, 1)
        m2 = GradedIdealSlice.power(alg, 2)
        assert equals(ideal_sum(m, m2), m, depth=3)
        assert contains(m, m2)
        assert not contains(m2, m)

    def test_annihilator_of_form(self, algebra_of):
        """ann(x) in k[x,y]/(xy) is (y)."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=5)
        x = LinearForm.variable(alg.field, 2, 0)
        ann = annihilator_of_form(alg, x)
        y_ideal = GradedIdealSlice.principal(alg, LinearForm.variable(alg.field, 2, 1))
        assert equals(ann, y_ideal, depth=3)

    def test_colon_by_maximal_ideal(self, algebra_of):
        """(0 : m) of an Artinian ring is its socle."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=4)
        socle = colon(GradedIdealSlice.zero(alg), GradedIdealSlice.power(alg, 1))
        assert socle.dim(1) == 0
        assert socle.dim(2) == 2

    def test_degree_beyond_top(self, algebra_of):
        """Degrees above the slice raise TruncationError."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=3)
        with pytest.raises(TruncationError):
            GradedIdealSlice.power(alg, 1).dim(4)


class TestTrivialFiberReduction:
    """Stripping degree-one socle forms."""

    def test_no_socle(self, algebra_of):
        """A ring without degree-one socle is left alone."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=5)
        assert socle_degree1(alg) == []
        red = trivial_fiber_reduce(alg)
        assert red.s == 0
        assert red.reduced is alg

    def test_free_socle_variable(self, algebra_of):
        """w with w*m = 0 is removed and h drops by one in degree 1 only."""
        alg = algebra_of(
            "QQ", "x,y,z,w", *CASE1, "w*x", "w*y", "w*z", "w^2", truncation=5
        )
        red = trivial_fiber_reduce(alg)
        assert red.s == 1
        assert red.reduced.names == ("x", "y", "z")
        assert red.reduced.h == [1, 3, 2, 0, 0, 0]
        assert alg.h[1] == red.reduced.h[1] + 1

    def test_socle_form_in_other_coordinates(self, algebra_of):
        """The socle form x - y of k[x,y]/((x-y)x, (x-y)y) is found."""
        alg = algebra_of("QQ", "x,y", "x^2 - x*y", "x*y - y^2", truncation=4)
        forms = socle_degree1(alg)
        assert len(forms) == 1
        red = trivial_fiber_reduce(alg)
        assert red.reduced.nvars == 1
        assert red.reduced.h[:4] == [1, 1, 1, 1]


class TestNullSquareForms:
    """Forms x in R_1 with x^2 = 0."""

    def test_variable_of_square_zero(self, algebra_of):
        """x itself is found first in k[x,y,z]/(x^2,y^2,z^2,yz)."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=4)
        result = null_square_search(alg, enum_limit=1000, random_trials=10)
        assert result.found
        assert result.form == LinearForm.variable(alg.field, 3, 0)
        assert square(alg, result.form) == {}
        assert rank_of(alg, result.form) == 2

    def test_none_over_gf3(self, algebra_of):
        """x^2 = y^2 with xy = 0 has no null-square form over GF(3)."""
        alg = algebra_of("GF(3)", "x,y", "x*y", "x^2 - y^2", truncation=4)
        result = null_square_search(alg, enum_limit=1000)
        assert result.form is None
        assert any("exhaustive" in step for step in result.ladder)

    def test_extension_retry(self, algebra_of):
        """Over GF(9) some x + c*y squares to zero."""
        alg = algebra_of("GF(3)", "x,y", "x*y", "x^2 - y^2", truncation=4)
        result = null_square_search(alg, enum_limit=1000, extension_retry=True)
        assert result.form is None
        assert result.extension_form_text is not None
        assert result.found

    def test_subspaces_of_a_form(self, algebra_of):
        """For x in k[x,y,z]/(x^2,xy,yz,z^2): V = ann(x) ∩ R_1 = <x,y>."""
        alg = algebra_of("QQ", "x,y,z", "x^2", "x*y", "y*z", "z^2", truncation=4)
        x = LinearForm.variable(alg.field, 3, 0)
        assert len(annihilator_forms(alg, x)) == 2
        sub = form_subspaces(alg, x)
        assert sub.rank == 1
        assert len(sub.V) == 2


class TestChangeOfVariables:
    """Relations rewritten under an invertible substitution."""

    def test_swap(self):
        """x <-> y sends (x^2) to (y^2)."""
        pres = parse_presentation("field: QQ\nvars: x,y\nrel: x^2\n")
        f = pres.field
        swapped = apply_change(pres, [[f.zero, f.one], [f.one, f.zero]])
        assert swapped.relation_texts() == ["y^2"]

    def test_hilbert_function_preserved(self):
        """z -> z + x keeps h."""
        pres = parse_presentation("field: QQ\nvars: x,y,z\nrel: x^2\nrel: y^2\nrel: z^2\nrel: y*z\n")
        f = pres.field
        matrix = [[f.one, f.zero, f.zero], [f.zero, f.one, f.zero], [f.one, f.zero, f.one]]
        assert build_algebra(apply_change(pres, matrix), 4).h == build_algebra(pres, 4).h

    def test_singular_matrix(self):
        """Non-invertible substitutions are rejected."""
        pres = parse_presentation("field: QQ\nvars: x,y\nrel: x*y\n")
        f = pres.field
        with pytest.raises(SingularMatrixError):
            apply_change(pres, [[f.one, f.one], [f.one, f.one]])
