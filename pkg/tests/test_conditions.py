"""
Tests for the structural condition sets, evaluated in the presentation variables.
"""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.algebra.conditions import CONDITION_SETS, condition_check  # noqa: E402
from src.koszul_golod.algebra.graded import LinearForm  # noqa: E402
from src.koszul_golod.classifier.prescriptions import prescribed_quadrics  # noqa: E402
from src.koszul_golod.models.enums import CertificateStatus  # noqa: E402
from src.koszul_golod.utils.errors import UnknownCaseError  # noqa: E402
from src.koszul_golod.witness.certificate import verify_witness  # noqa: E402

# (case id, field, variables, relations) with the case holding in the given variables
CASE_RINGS = [
    ("1", "QQ", "x,y,z", ("x^2", "y^2", "z^2", "y*z")),
    ("2", "QQ", "x,y,z", ("x^2", "x*z", "y^2", "z^2 - x*y")),
    ("3", "QQ", "x,y,z", ("x^2", "x*y", "y^2 - x*z", "z^2 - y*z")),
    ("4", "QQ", "x,y,z", ("x^2", "x*z", "y^2 - x*y", "z^2 - y*z")),
    (
        "5",
        "QQ",
        "x1,x2,x3,x4",
        ("x1^2", "x1*x4", "x2^2 - x1*x2", "x2*x4 - x1*x3", "x4^2 - x2*x3", "x3^2", "x3*x4"),
    ),
    (
        "6",
        "QQ",
        "x1,x2,x3,x4",
        ("x1^2", "x1*x3", "x2*x3", "x3*x4", "x1*x2 - x3^2", "x2^2 - x1*x4", "x4^2 - x2*x4"),
    ),
    ("7", "QQ", "x,y,z", ("x^2", "x*y", "y^2 - x*z", "z^2")),
    ("8", "GF(3)", "x,y", ("x*y", "x^2 - y^2")),
    ("4.2(a)", "QQ", "x,y,z", ("x^2", "x*y", "y*z", "z^2")),
    ("4.2(b)", "QQ", "x,y", ("x*y",)),
    ("4.2(c)", "QQ", "x,y,z", ("x^2", "x*y", "y^2 - x*z", "y*z")),
    ("ci3", "QQ", "x,y,z", ("x^2", "y^2", "z^2")),
]


class TestConditionSets:
    """Each case ring satisfies its own condition set."""

    @pytest.mark.parametrize("case_id,field,names,relations", CASE_RINGS)
    def test_case_holds_in_given_variables(self, algebra_of, case_id, field, names, relations):
        """condition_check succeeds with the identity assignment."""
        alg = algebra_of(field, names, *relations, truncation=5)
        result = condition_check(alg, case_id)
        assert result.holds, result.failing_clause
        assert result.failing_clause is None

    def test_every_listed_case_is_known(self):
        """The rings above only name existing condition sets."""
        for case_id, *_ in CASE_RINGS:
            assert case_id in CONDITION_SETS


class TestConditionFailures:
    """Failing clauses are reported by name."""

    def test_wrong_case(self, algebra_of):
        """m^2 is not x*m in the case (3) ring."""
        alg = algebra_of("QQ", "x,y,z", "x^2", "x*y", "y^2 - x*z", "z^2 - y*z", truncation=5)
        result = condition_check(alg, "1")
        assert not result.holds
        assert result.failing_clause

    def test_index_parameter_recorded(self, algebra_of):
        """Case (2) records j = 2 when x1*x2 != 0."""
        alg = algebra_of("QQ", "x,y,z", "x^2", "x*z", "y^2", "z^2 - x*y", truncation=5)
        result = condition_check(alg, "2")
        assert result.params["j"] == 2

    def test_assignment_swaps_coordinates(self, algebra_of):
        """Case (1) fails once x1 is a form whose square is nonzero."""
        alg = algebra_of("QQ", "x,y,z", "x^2", "y^2", "z^2", "y*z", truncation=5)
        f = alg.field
        swapped = {
            "x1": LinearForm.variable(f, 3, 1),
            "x2": LinearForm.variable(f, 3, 0),
        }
        assert not condition_check(alg, "1", swapped).holds

    def test_dependent_coordinates(self, algebra_of):
        """x1..xe must be a basis of R_1."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        f = alg.field
        result = condition_check(alg, "4.2(b)", {"x2": LinearForm.variable(f, 2, 0)})
        assert not result.holds
        assert "basis" in result.failing_clause

    def test_special_shape_needs_three_variables(self, algebra_of):
        """Case 4.2(c) requires e = 3."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        assert not condition_check(alg, "4.2(c)").holds

    def test_unknown_case(self, algebra_of):
        """Unknown case ids raise UnknownCaseError."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        with pytest.raises(UnknownCaseError):
            condition_check(alg, "9")

    def test_assignment_out_of_range(self, algebra_of):
        """Assignments may only name x1..xe."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        with pytest.raises(UnknownCaseError):
            condition_check(alg, "8", {"x3": LinearForm.variable(alg.field, 2, 0)})


class TestPrescriptions:
    """Prescribed Tate quadrics of each case give accepted witnesses."""

    @staticmethod
    def identity(alg):
        return [LinearForm.variable(alg.field, alg.nvars, k) for k in range(alg.nvars)]

    @pytest.mark.parametrize("case_id,field,names,relations", CASE_RINGS)
    def test_prescription_is_a_witness(self, algebra_of, case_id, field, names, relations):
        """The first prescription verifies as golod-and-koszul."""
        alg = algebra_of(field, names, *relations, truncation=5)
        result = condition_check(alg, case_id)
        prescriptions = prescribed_quadrics(alg, case_id, self.identity(alg), result.params)
        assert prescriptions
        label, quadrics = prescriptions[0]
        assert label.startswith(f"case {case_id}")
        cert = verify_witness(alg, quadrics, 3, 5)
        assert cert.accepted, cert.status
        assert cert.status == CertificateStatus.GOLOD_AND_KOSZUL

    def test_non_artinian_use(self, algebra_of):
        """k[x,y]/(x^2, xy) with t = 1, s = 2: killing x^2 is a Golod map."""
        alg = algebra_of("QQ", "x,y", "x^2", "x*y", truncation=5)
        result = condition_check(alg, "nonA-use", params={"s": 2, "t": 1})
        assert result.holds, result.failing_clause
        prescriptions = prescribed_quadrics(alg, "nonA-use", self.identity(alg), result.params)
        assert prescriptions[0][0] == "case nonA-use: (x1^2)"
        assert len(prescriptions[0][1]) == 1
        cert = verify_witness(alg, prescriptions[0][1], 3, 5)
        assert cert.accepted
        assert cert.codimension == 1

    def test_unknown_case_has_no_prescription(self, algebra_of):
        """Cases without prescribed quadrics give an empty list."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        assert prescribed_quadrics(alg, "mix", self.identity(alg)) == []
