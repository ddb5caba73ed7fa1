"""
Tests for the arithmetic core: fields, polynomial parsing and Gröbner bases.
"""

import sys
from fractions import Fraction
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.core.field import make_field  # noqa: E402
from src.koszul_golod.core.groebner import (  # noqa: E402
    buchberger,
    is_g_quadratic,
    standard_monomials,
)
from src.koszul_golod.core.parsing import (  # noqa: E402
    parse_field_text,
    parse_polynomial,
    parse_presentation,
)
from src.koszul_golod.core.polynomial import MonomialOrder, Polynomial  # noqa: E402
from src.koszul_golod.utils.errors import FieldError, ParseError  # noqa: E402

QQ = make_field(0)
XYZ = ["x", "y", "z"]


def poly(text, names=XYZ, field=QQ):
    return parse_polynomial(text, names, field)


class TestFields:
    """Field construction and arithmetic."""

    def test_field_names(self):
        """Each field kind reports its canonical name."""
        assert make_field(0).name == "QQ"
        assert make_field(5).name == "GF(5)"
        assert make_field(3, 2).name == "GF(3)^2"

    def test_parse_field_text_variants(self):
        """QQ, GF(p), GF(p)^k and GF(p^k) are all accepted."""
        assert parse_field_text("QQ") == (0, 1)
        assert parse_field_text("GF(7)") == (7, 1)
        assert parse_field_text("GF(2)^3") == (2, 3)
        assert parse_field_text("GF(3^2)") == (3, 2)

    def test_unreadable_field_text(self):
        """Garbage field text raises FieldError."""
        with pytest.raises(FieldError):
            parse_field_text("reals")

    def test_unsupported_fields(self):
        """Composite characteristic, extensions of QQ and large degrees are rejected."""
        with pytest.raises(FieldError):
            make_field(4)
        with pytest.raises(FieldError):
            make_field(0, 2)
        with pytest.raises(FieldError):
            make_field(2, 5)

    def test_extension_field_inverses(self):
        """Every nonzero element of GF(9) has a multiplicative inverse."""
        f = make_field(3, 2)
        elements = list(f.elements())
        assert len(elements) == 9
        for a in elements:
            if not f.is_zero(a):
                assert f.mul(a, f.inv(a)) == f.one

    def test_prime_field_reduction(self):
        """Fractions are mapped into F_p through the inverse of the denominator."""
        f = make_field(5)
        assert f.from_fraction(Fraction(1, 2)) == 3
        assert f.from_int(-1) == 4


class TestPolynomialParsing:
    """Polynomial text through sympy."""

    def test_rational_coefficients(self):
        """a/b coefficients and ^ powers are read over QQ."""
        p = poly("x^2 - 3/2*y*z")
        assert p.coefficient((2, 0, 0)) == Fraction(1)
        assert p.coefficient((0, 1, 1)) == Fraction(-3, 2)
        assert p.is_homogeneous() and p.degree == 2

    def test_coefficients_reduced_mod_p(self):
        """Integer coefficients are reduced in GF(5)."""
        p = poly("x^2 + 6*x*y", field=make_field(5))
        assert p.coefficient((1, 1, 0)) == 1

    def test_generator_symbol_over_extension(self):
        """Over GF(4) the symbol a is the field generator."""
        f = make_field(2, 2)
        p = parse_polynomial("a*x^2 + y^2", ["x", "y"], f)
        assert p.coefficient((2, 0)) == f.generator
        assert p.coefficient((0, 2)) == f.one

    def test_declared_a_is_a_variable(self):
        """A declared variable named a shadows the generator."""
        f = make_field(2, 2)
        p = parse_polynomial("a*x", ["a", "x"], f)
        assert p.coefficient((1, 1)) == f.one

    def test_unknown_variable(self):
        """Undeclared symbols raise ParseError."""
        with pytest.raises(ParseError, match="Unknown variable"):
            poly("x*w")

    def test_code_is_never_evaluated(self, tmp_path):
        """Text that would run code is rejected before sympy sees it."""
        marker = tmp_path / "created"
        text = f"x + __import__('os').system('touch {marker}')"
        with pytest.raises(ParseError, match="Malformed polynomial"):
            poly(text)
        assert not marker.exists()

    def test_attribute_access_rejected(self):
        """Attribute access on a variable raises ParseError."""
        with pytest.raises(ParseError):
            poly("x.foo")

    def test_builtin_names_rejected(self):
        """Bare builtin names are unknown variables."""
        with pytest.raises(ParseError, match="Unknown variable"):
            poly("x*exec")

    def test_malformed_text(self):
        """Dangling operators and empty text raise ParseError."""
        with pytest.raises(ParseError):
            poly("x^2 +")
        with pytest.raises(ParseError):
            poly("   ")

    def test_not_a_polynomial(self):
        """Negative powers are not polynomials."""
        with pytest.raises(ParseError):
            poly("1/x")


class TestPresentationParsing:
    """The field:/vars:/rel: file format."""

    def test_full_file(self):
        """Comments, blank lines and a truncation line are accepted."""
        text = """
# a complete intersection
field: GF(3)
vars: x, y
rel: x^2 + 4*y^2   # reduced mod 3
rel: x*y
truncation: 7
"""
        pres = parse_presentation(text)
        assert pres.field.name == "GF(3)"
        assert pres.names == ("x", "y")
        assert len(pres.relations) == 2
        assert pres.relations[0].coefficient((0, 2)) == 1
        assert pres.truncation == 7

    def test_field_override(self):
        """The override replaces the field line."""
        pres = parse_presentation("field: QQ\nvars: x\nrel: x^2\n", field_override="GF(5)")
        assert pres.field.name == "GF(5)"

    def test_to_text_parses_back(self):
        """to_text produces a file body with the same relations."""
        pres = parse_presentation("field: QQ\nvars: x,y,z\nrel: x^2 - 1/2*y*z\nrel: z^2\n")
        again = parse_presentation(pres.to_text())
        assert again.relations == pres.relations

    def test_missing_lines(self):
        """A file needs vars: and field: lines."""
        with pytest.raises(ParseError, match="vars"):
            parse_presentation("field: QQ\nrel: x^2\n")
        with pytest.raises(ParseError, match="field"):
            parse_presentation("vars: x\nrel: x^2\n")

    def test_unknown_key(self):
        """Unknown keys name the offending line."""
        with pytest.raises(ParseError, match=":2:"):
            parse_presentation("field: QQ\nring: x\nvars: x\n")

    def test_duplicate_variable(self):
        """Variables may be declared once."""
        with pytest.raises(ParseError, match="twice"):
            parse_presentation("field: QQ\nvars: x,x\n")


class TestGroebner:
    """Buchberger's algorithm and standard monomials."""

    def test_normal_form_uses_grevlex_leading_term(self):
        """Under grevlex x>y>z the leading monomial of y^2 - xz is y^2."""
        gb = buchberger([poly("y^2 - x*z")], MonomialOrder.grevlex(3))
        assert gb.normal_form(poly("y^2")) == poly("x*z")

    def test_cubic_element_appears(self):
        """(xy, x^2 - y^2) needs y^3 in its grevlex basis."""
        gens = [poly("x*y", ["x", "y"]), poly("x^2 - y^2", ["x", "y"])]
        gb = buchberger(gens, MonomialOrder.grevlex(2))
        assert not gb.is_quadratic
        assert not is_g_quadratic(gens, MonomialOrder.grevlex(2))

    def test_monomial_ideal_is_g_quadratic(self):
        """Quadratic monomial ideals are their own Gröbner basis."""
        gens = [poly("x^2"), poly("x*y"), poly("y*z")]
        assert is_g_quadratic(gens, MonomialOrder.grevlex(3))

    def test_standard_monomials_independent_of_order(self):
        """Counts of standard monomials are the Hilbert function for every order."""
        gens = [poly("x^2"), poly("x*y"), poly("y^2 - x*z"), poly("z^2 - y*z")]
        gb_grevlex = buchberger(gens, MonomialOrder.grevlex(3))
        gb_lex = buchberger(gens, MonomialOrder.lex(3))
        counts = [len(standard_monomials(gb_grevlex, d, 3)) for d in range(5)]
        assert counts == [1, 3, 2, 0, 0]
        assert counts == [len(standard_monomials(gb_lex, d, 3)) for d in range(5)]

    def test_inhomogeneous_input_rejected(self):
        """Gröbner bases are only computed for homogeneous generators."""
        with pytest.raises(ValueError):
            buchberger([poly("x^2 - y")], MonomialOrder.grevlex(3))

    def test_linear_change(self):
        """x_i -> sum_j m[i][j] x_j is applied to every variable."""
        p = poly("x*y", ["x", "y"])
        changed = p.linear_change([[QQ.one, QQ.one], [QQ.zero, QQ.one]])
        assert changed == poly("x*y + y^2", ["x", "y"])

    def test_unknown_term_order(self):
        """Only grevlex, lex and weighted-lex exist."""
        with pytest.raises(ValueError):
            MonomialOrder("deglex", (0, 1))
        assert Polynomial.zero(QQ, 2).is_zero()
