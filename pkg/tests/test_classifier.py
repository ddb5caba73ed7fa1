"""
Tests for the classification pipeline: branches, exceptional rings and
structural case matching.
"""

import sys
from pathlib import Path

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.algebra.socle import trivial_fiber_reduce  # noqa: E402
from src.koszul_golod.classifier.exceptional import (  # noqa: E402
    detect_exceptional,
    exceptional_prefix,
    normal_form_match,
    normal_form_matches,
)
from src.koszul_golod.classifier.pipeline import (  # noqa: E402
    artinian_bounds_hold,
    classify,
    hilbert_trichotomy_holds,
    select_branch,
)
from src.koszul_golod.classifier.structure_match import match_structure  # noqa: E402
from src.koszul_golod.core.parsing import parse_presentation  # noqa: E402
from src.koszul_golod.models.enums import Branch  # noqa: E402

CASE1 = ("x^2", "y^2", "z^2", "y*z")
EXCEPTIONAL = ("y^2", "x*y + z^2", "x*z")


def presentation(field, names, *relations):
    lines = [f"field: {field}", f"vars: {names}"] + [f"rel: {r}" for r in relations]
    return parse_presentation("\n".join(lines) + "\n")


class TestBranchSelection:
    """Branches follow the shape of R'."""

    def test_artinian(self, algebra_of):
        """h eventually zero."""
        assert select_branch(algebra_of("QQ", "x,y,z", *CASE1, truncation=4)) == Branch.ARTINIAN

    def test_dim_two(self, algebra_of):
        """k[x,y]/(xy) has dim R_2 = 2."""
        assert select_branch(algebra_of("QQ", "x,y", "x*y", truncation=4)) == Branch.DIM2

    def test_three_variables(self, algebra_of):
        """The exceptional rings live on the e = 3 branch."""
        assert select_branch(algebra_of("QQ", "x,y,z", *EXCEPTIONAL, truncation=4)) == Branch.E3

    def test_four_variables(self, algebra_of):
        """dim R_2 = 3, e = 4 and not Artinian."""
        alg = algebra_of(
            "QQ", "x1,x2,x3,x4",
            "x1^2", "x1*x2", "x2*x3", "x2*x4", "x3^2", "x3*x4", "x4^2",
            truncation=4,
        )
        assert select_branch(alg) == Branch.DIM3_NONARTINIAN

    def test_out_of_scope_and_polynomial(self, algebra_of):
        """dim R_2 > 3 is out of scope; no relations is a polynomial ring."""
        assert select_branch(algebra_of("QQ", "x,y,z", "x*y", truncation=4)) == Branch.OUT_OF_SCOPE
        assert select_branch(algebra_of("QQ", "x,y", truncation=4)) == Branch.POLYNOMIAL

    def test_socle_reduction_to_the_field(self, algebra_of):
        """(x,y)^2 reduces to R' = k, which is Artinian."""
        red = trivial_fiber_reduce(algebra_of("QQ", "x,y", "x^2", "x*y", "y^2", truncation=4))
        assert red.reduced.nvars == 0
        assert select_branch(red.reduced) == Branch.ARTINIAN


class TestTheoremChecks:
    """Hilbert-function consequences of the classification."""

    def test_artinian_bounds(self, algebra_of):
        """h_4 = 0 and h_3 <= 1."""
        assert artinian_bounds_hold(algebra_of("QQ", "x,y,z", *CASE1, truncation=4))

    def test_hilbert_trichotomy(self, algebra_of):
        """e = 2 and h_2 = 2 forces h_n = 2 for n >= 3."""
        assert hilbert_trichotomy_holds(algebra_of("QQ", "x,y", "x*y", truncation=5), 0)


class TestExceptionalRings:
    """The series (1+2t-2t^3)/(1-t)."""

    def test_prefix(self):
        """1, 3, 3, 1, 1, ..."""
        assert exceptional_prefix(5) == [1, 3, 3, 1, 1, 1]
        assert exceptional_prefix(1) == [1, 3]

    def test_detect_normal_form(self, algebra_of):
        """(y^2, xy + z^2, xz) is exceptional and is its own normal form."""
        alg = algebra_of("QQ", "x,y,z", *EXCEPTIONAL, truncation=7)
        report = detect_exceptional(alg)
        assert report.exceptional
        assert report.h_prefix_matches
        assert report.normal_form == "(ii)"

    def test_not_exceptional(self, algebra_of):
        """An Artinian ring never is."""
        report = detect_exceptional(algebra_of("QQ", "x,y,z", *CASE1, truncation=5))
        assert not report.exceptional
        assert report.normal_form is None

    def test_families_over_gf2(self):
        """Over GF(2) the presentation is compared with each family up to GL_3."""
        pres = presentation("GF(2)", "x,y,z", "x*y", "x^2 - y*z", "z^2")
        assert normal_form_match(pres) == "NK2(g=0)"

    def test_overlapping_families(self, algebra_of):
        """NK2(g=0) is also an NK3 member; every match is reported, first listed first."""
        pres = presentation("GF(2)", "x,y,z", "x*y", "x^2 - y*z", "z^2")
        matches = normal_form_matches(pres)
        assert matches[0] == "NK2(g=0)"
        assert "NK3(a=1,b=0,g=0)" in matches
        report = detect_exceptional(algebra_of("GF(2)", "x,y,z", "x*y", "x^2 - y*z", "z^2", truncation=6))
        assert report.normal_form == "NK2(g=0)"
        assert report.normal_form_matches == matches
        assert "not disjoint" in report.evidence

    def test_only_three_variables(self):
        """Other embedding dimensions have no normal form."""
        assert normal_form_match(presentation("QQ", "x,y", "x*y")) is None


class TestStructureMatch:
    """Coordinates realising a structural case."""

    def test_case_one(self, algebra_of):
        """The null-square form x gives case (1)."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=5)
        match = match_structure(alg, enum_limit=2000, bounds=(4, 5))
        assert match.case_id == "1"
        assert match.report.null_square_form == "x"
        assert len(match.coords) == 3
        assert len(match.report.relations) == 4

    def test_case_eight(self, algebra_of):
        """No null-square form over GF(3), yet case (8) holds."""
        alg = algebra_of("GF(3)", "x,y", "x*y", "x^2 - y^2", truncation=5)
        match = match_structure(alg, enum_limit=2000, bounds=(4, 5))
        assert match.case_id == "8"
        assert match.report.null_square_form is None

    def test_characteristic_two_without_case_one(self, algebra_of):
        """Over GF(2) only x1 squares to zero and x1m != m^2; x3, x1 + x3 give case (8)."""
        alg = algebra_of(
            "GF(2)", "x1,x2,x3", "x1^2", "x1*x2", "x3^2 - x1*x3", "x2^2 - x2*x3", truncation=5
        )
        match = match_structure(alg, enum_limit=2000, bounds=(4, 5))
        assert match.case_id == "8"

    def test_restricted_cases(self, algebra_of):
        """Only the listed cases are tried."""
        alg = algebra_of("QQ", "x,y,z", *CASE1, truncation=5)
        match = match_structure(alg, cases=["ci3"], bounds=(4, 5))
        assert match.case_id is None
        assert match.report.ladder


class TestClassify:
    """The full pipeline."""

    def test_default_routes(self):
        """Every Koszul route runs, the Gröbner check included."""
        report = classify(presentation("GF(2)", "x,y", "x^2", "x*y"), hom_bound=4, internal_bound=5, seed=0)
        names = [route.name for route in report.koszul.routes]
        assert "g-quadratic" in names
        assert report.koszul.g_quadratic_order is not None
        assert report.koszul.is_koszul
        assert report.witness is not None

    def test_square_of_maximal_ideal(self):
        """Both variables are socle forms; the branch is artinian."""
        report = classify(presentation("QQ", "x,y", "x^2", "x*y", "y^2"), hom_bound=3, internal_bound=4, seed=0)
        assert report.socle.s == 2
        assert report.branch == Branch.ARTINIAN

    def test_artinian_case_one(self):
        """k[x,y,z]/(x^2,y^2,z^2,yz) is absolutely Koszul through case (1)."""
        report = classify(presentation("QQ", "x,y,z", *CASE1), hom_bound=4, internal_bound=6, seed=0)
        assert report.branch == Branch.ARTINIAN
        assert report.socle.s == 0
        assert report.structure.case_id == "1"
        assert report.koszul.is_koszul
        assert report.witness.certificate is not None
        assert report.absolutely_koszul
        assert report.checks.artinian_bounds
        assert report.consistent

    def test_trivial_fiber_variant(self):
        """A socle variable is stripped before the structural search."""
        pres = presentation("QQ", "x,y,z,w", *CASE1, "w*x", "w*y", "w*z", "w^2")
        report = classify(pres, hom_bound=4, internal_bound=6, seed=0)
        assert report.socle.s == 1
        assert report.socle.reduced.variables == ["x", "y", "z"]
        assert report.structure.case_id == "1"
        assert any("s=1" in note for note in report.notes)

    def test_out_of_scope(self):
        """dim R_2 > 3 gives a report with only the Koszul test."""
        report = classify(presentation("QQ", "x,y,z", "x*y"), hom_bound=3, internal_bound=4)
        assert report.branch == Branch.OUT_OF_SCOPE
        assert report.witness is None
        assert report.koszul is not None
        assert report.notes

    def test_minimum_truncation(self):
        """J is raised to 4."""
        report = classify(presentation("QQ", "x,y", "x*y"), hom_bound=2, internal_bound=2)
        assert report.bounds.internal == 4
