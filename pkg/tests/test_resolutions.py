"""
Tests for minimal resolutions, the Koszul test, the Golod-ring test and
the bivariate series behind them.
"""

import sys
from pathlib import Path

import pytest

project_root = Path(__file__).parent.parent
sys.path.insert(0, str(project_root))

from src.koszul_golod.algebra.hilbert import hilbert_series_from_numerator  # noqa: E402
from src.koszul_golod.models.enums import KoszulVerdict  # noqa: E402
from src.koszul_golod.resolutions.golod import golod_ring_test  # noqa: E402
from src.koszul_golod.resolutions.koszul_test import (  # noqa: E402
    g_quadratic_order,
    koszul_test,
    nu_power_check,
)
from src.koszul_golod.resolutions.resolution import (  # noqa: E402
    minimal_resolution_of_k,
    tor_over_polynomial_ring,
)
from src.koszul_golod.resolutions.series import (  # noqa: E402
    TruncatedSeries,
    complete_intersection_poincare,
    first_negative,
    power_series_inverse,
    reciprocal_hilbert,
    serre_bound,
)


class TestMinimalResolution:
    """Betti numbers of k over R."""

    def test_complete_intersection_betti(self, algebra_of):
        """Over k[x,y]/(x^2,y^2), β_i = β_{i,i} = i + 1."""
        alg = algebra_of("GF(2)", "x,y", "x^2", "y^2", truncation=4)
        table = minimal_resolution_of_k(alg, 3, 4).betti()
        assert [table.get(i, i) for i in range(4)] == [1, 2, 3, 4]
        assert table.first_off_diagonal() is None
        assert table.complete

    def test_hypersurface_betti(self, algebra_of):
        """Over k[x,y]/(xy), β_i = 2 for i >= 1."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=5)
        table = minimal_resolution_of_k(alg, 4, 5).betti()
        assert [table.total(i) for i in range(5)] == [1, 2, 2, 2, 2]

    @pytest.mark.parametrize("seed", [1, 2, 3, 4, 5])
    def test_shuffled_resolution_has_same_betti_numbers(self, algebra_of, seed):
        """Other basis choices give the same table."""
        alg = algebra_of("QQ", "x,y,z", "x^2", "x*y", "y*z", "z^2", truncation=5)
        plain = minimal_resolution_of_k(alg, 3, 5).betti()
        shuffled = minimal_resolution_of_k(alg, 3, 5, shuffle_seed=seed).betti()
        assert plain.rows == shuffled.rows

    def test_tor_over_polynomial_ring(self, algebra_of):
        """Tor^Q(R,k) of (x,y)^2 is 1, 3 in degree 2, 2 in degree 3."""
        alg = algebra_of("QQ", "x,y", "x^2", "x*y", "y^2", truncation=4)
        table = tor_over_polynomial_ring(alg, 3, 4)
        assert table.entries() == {(0, 0): 1, (1, 2): 3, (2, 3): 2}

    @pytest.mark.parametrize("field", ["GF(2)", "QQ"])
    def test_golod_ring_poincare_series(self, algebra_of, field):
        """Over (x,y)^2 the Poincaré series is sum 2^i z^i t^i through (z^8, t^10)."""
        alg = algebra_of(field, "x,y", "x^2", "x*y", "y^2", truncation=10)
        table = minimal_resolution_of_k(alg, 8, 10).betti()
        assert table.entries() == {(i, i): 2**i for i in range(9)}


class TestKoszulTest:
    """Koszul verdicts and their routes."""

    def test_complete_intersection_is_koszul(self, algebra_of):
        """Every route agrees on a CI of quadrics."""
        alg = algebra_of("GF(2)", "x,y", "x^2", "y^2", truncation=4)
        report = koszul_test(alg, 3, 4)
        assert report.verdict == KoszulVerdict.KOSZUL_TO_BOUND
        assert report.is_koszul
        assert report.witness is None
        assert report.routes_agree
        assert report.obstruction_index is None
        assert report.g_quadratic_order is not None
        assert "koszul up to (3,4)" in report.summary
        assert {r.name for r in report.routes} == {
            "diagonal-betti",
            "series-identity",
            "nu-map",
            "hilbert-sign",
            "g-quadratic",
        }

    def test_exceptional_ring_has_off_diagonal_betti_number(self, algebra_of):
        """NK2(g=0) over GF(2) is not Koszul: a Betti number leaves the diagonal before i = 8."""
        alg = algebra_of("GF(2)", "x,y,z", "x*y", "x^2 - y*z", "z^2", truncation=6)
        report = koszul_test(alg, 5, 6)
        assert report.verdict == KoszulVerdict.NON_KOSZUL
        off = report.betti.first_off_diagonal()
        assert off is not None and off[0] <= 7
        assert report.betti.get(3, 4) == 1
        assert report.witness.startswith("β_")

    def test_optional_routes(self, algebra_of):
        """The ν and Gröbner routes can be skipped."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        report = koszul_test(alg, 3, 4, nu_route=False, g_quadratic=False)
        assert {r.name for r in report.routes} == {"diagonal-betti", "series-identity", "hilbert-sign"}
        assert report.is_koszul

    def test_koszul_without_quadratic_groebner_basis(self, algebra_of):
        """(xy, x^2 - y^2) has no quadratic Gröbner basis, yet it is a Koszul CI."""
        alg = algebra_of("QQ", "x,y", "x*y", "x^2 - y^2", truncation=4)
        assert g_quadratic_order(alg.presentation) is None
        report = koszul_test(alg, 3, 4)
        assert report.is_koszul
        route = next(r for r in report.routes if r.name == "g-quadratic")
        assert route.verdict is None


class TestNuPowers:
    """ν^R(m^n) for several n."""

    def test_rejects_zero_exponent(self, algebra_of):
        """n must be at least 1."""
        alg = algebra_of("QQ", "x,y", "x*y", truncation=4)
        with pytest.raises(ValueError):
            nu_power_check(alg, [0], 2, 4)

    def test_square_of_maximal_ideal(self, algebra_of):
        """All ν^R(m^n) vanish when m^2 = 0."""
        alg = algebra_of("QQ", "x,y", "x^2", "x*y", "y^2", truncation=4)
        report = nu_power_check(alg, [2, 1], 3, 4)
        assert [e.n for e in report.entries] == [1, 2]
        assert all(e.vanishes for e in report.entries)
        assert report.regularity == 1


class TestGolodRingTest:
    """ν(mK) = 0 and the Serre equality."""

    def test_square_of_maximal_ideal_is_golod(self, algebra_of):
        """(x,y)^2 is a Koszul Golod ring."""
        alg = algebra_of("QQ", "x,y", "x^2", "x*y", "y^2", truncation=5)
        report = golod_ring_test(alg, 3, 5)
        assert report.koszul_golod
        assert report.golod
        assert report.consistent
        assert report.serre_inequality_holds
        assert report.tor_matches_koszul_homology

    def test_complete_intersection_is_not_golod(self, algebra_of):
        """A CI of two quadrics fails both routes but respects the Serre bound."""
        alg = algebra_of("GF(2)", "x,y", "x^2", "y^2", truncation=5)
        report = golod_ring_test(alg, 3, 5)
        assert not report.koszul_golod
        assert not report.golod
        assert report.consistent
        assert report.serre_inequality_holds

    def test_complete_intersection_nu_witness(self, algebra_of):
        """The class x*y*X[x,y] in bidegree (2,4) survives in H(mK)."""
        alg = algebra_of("GF(2)", "x,y", "x^2", "y^2", truncation=5)
        route = golod_ring_test(alg, 3, 5).nu_route
        assert route.verdict is False
        assert "(x*y)*X[x,y]" in route.detail
        assert "(2, 4)" in route.detail


class TestSeries:
    """Truncated series in z and t."""

    def test_inverse(self):
        """1/(1 - zt) = sum (zt)^i."""
        one = TruncatedSeries.one(4, 4)
        inv = (one - one.shift(1, 1)).inverse()
        assert [inv.coefficient(i, i) for i in range(5)] == [1, 1, 1, 1, 1]
        assert inv.coefficient(1, 2) == 0

    def test_non_unit_constant_term(self):
        """Only series with constant term ±1 are inverted."""
        with pytest.raises(ValueError):
            (TruncatedSeries.one(2, 2) + TruncatedSeries.one(2, 2)).inverse()

    def test_complete_intersection_poincare(self):
        """(1+zt)^2/(1-z^2t^2)^2 = 1/(1-zt)^2."""
        series = complete_intersection_poincare(2, 2, 4, 4)
        assert [series.coefficient(i, i) for i in range(5)] == [1, 2, 3, 4, 5]
        assert series.coefficient(2, 3) == 0

    def test_serre_bound_of_golod_ring(self):
        """For Q = k[x,y] and R = Q/(x,y)^2 the bound is 1/(1-2zt)."""
        p_k = complete_intersection_poincare(2, 0, 4, 4)
        p_r = TruncatedSeries.from_dict({(0, 0): 1, (1, 2): 3, (2, 3): 2}, 4, 4)
        bound = serre_bound(p_k, p_r)
        assert [bound.coefficient(i, i) for i in range(5)] == [1, 2, 4, 8, 16]
        assert bound.coefficient(1, 2) == 0

    def test_reciprocal_hilbert_of_exceptional_series(self):
        """1/H(-z) for (1+2t-2t^3)/(1-t) first turns negative at z^7."""
        series = hilbert_series_from_numerator([1, 2, 0, -2], 1)
        coeffs = reciprocal_hilbert(series, 8)
        assert coeffs[:8] == [1, 3, 6, 10, 14, 16, 12, -4]
        assert first_negative(coeffs) == 7

    def test_power_series_inverse(self):
        """1/(1-z)^2 has coefficients n + 1."""
        assert power_series_inverse([1, -2, 1], 4) == [1, 2, 3, 4, 5]
        with pytest.raises(ValueError):
            power_series_inverse([2, 1], 3)
