import random
from fractions import Fraction

import pytest

from anosov.corpus import m_rho3
from anosov.hyper import (
    FOUND,
    NONE_CERTIFIED,
    NONE_NUMERIC,
    is_c_hyperbolic_matrix,
    is_c_hyperbolic_poly,
    is_integer_like,
    unit_circle_root_test,
)
from anosov.intpoly import IntPoly, cyclotomic
from anosov.ratmat import RatMatrix
from anosov.witness import companion_matrix

from conftest import random_unimodular

FIB = RatMatrix.from_rows([[2, 1], [1, 1]])
PLASTIC = IntPoly((-1, -1, 0, 1))  # X^3 - X - 1
SILVER = IntPoly((-1, -2, 1))  # minimal polynomial of 1 + sqrt(2)


class TestIntegerLike:
    def test_fibonacci_like(self):
        assert is_integer_like(FIB)

    def test_rational_diagonal_rejected(self):
        assert not is_integer_like(RatMatrix.from_rows([["1/2", 0], [0, 2]]))

    def test_plastic_companion(self):
        assert is_integer_like(companion_matrix(PLASTIC))

    def test_det_two_rejected(self):
        assert not is_integer_like(RatMatrix.from_rows([[2, 0], [0, 1]]))


class TestUnitCircleRootTest:
    def test_golden_certified(self):
        assert unit_circle_root_test(IntPoly((-1, -1, 1))).status == NONE_CERTIFIED

    def test_salem_like_numeric(self):
        assert unit_circle_root_test(IntPoly((1, -3, 1))).status == NONE_NUMERIC

    def test_gaussian_found(self):
        result = unit_circle_root_test(IntPoly((1, 0, 1)))
        assert result.status == FOUND
        assert abs(abs(complex(result.root)) - 1) < 1e-20

    def test_rejects_zero_root(self):
        with pytest.raises(ValueError):
            unit_circle_root_test(IntPoly((0, 1)))

    def test_tolerance_band_is_undecided(self):
        # reciprocal quadratic with real roots 1 ± ~2^-50: closer to the
        # circle than the 2^-40 tolerance but farther than the 2^-64 error
        # bound, so the test must refuse to guess
        from anosov.hyper import PrecisionError

        f = IntPoly((2**100, -(2**101 + 1), 2**100))
        with pytest.raises(PrecisionError):
            unit_circle_root_test(f)

    def test_band_clears_with_tighter_tolerance(self):
        # the same roots are decidably off-circle once the tolerance is
        # pulled below their true distance (~2^-50)
        f = IntPoly((2**100, -(2**101 + 1), 2**100))
        result = unit_circle_root_test(f, precision_bits=256, tol_bits=60)
        assert result.status == NONE_NUMERIC


class TestMatrixHyperbolicity:
    def test_fibonacci_boundary(self):
        assert is_c_hyperbolic_matrix(FIB, 1).verdict
        report = is_c_hyperbolic_matrix(FIB, 2)
        assert not report.verdict
        assert report.offending_product["k"] == 2
        assert abs(report.offending_product["abs_product"] - 1) < 1e-9

    def test_plastic_boundary(self):
        comp = companion_matrix(PLASTIC)
        assert is_c_hyperbolic_matrix(comp, 2).verdict
        report = is_c_hyperbolic_matrix(comp, 3)
        assert not report.verdict and report.offending_product["k"] == 3

    def test_identity_fails_immediately(self):
        assert not is_c_hyperbolic_matrix(RatMatrix.identity(3), 1).verdict

    def test_monotone_in_c(self):
        comp = companion_matrix(PLASTIC)
        assert is_c_hyperbolic_matrix(comp, 2).verdict
        assert is_c_hyperbolic_matrix(comp, 1).verdict


class TestPolyHyperbolicity:
    def test_silver_unit(self):
        assert is_c_hyperbolic_poly(SILVER, 1).verdict
        assert not is_c_hyperbolic_poly(SILVER, 2).verdict  # norm is -1

    def test_roots_of_unity(self):
        assert not is_c_hyperbolic_poly(cyclotomic(5), 1).verdict

    def test_closed_form_agreement_quadratics(self):
        # X^2 - 3X + 1: roots (3 ± sqrt 5)/2 are off the circle, product is 1
        f = IntPoly((1, -3, 1))
        assert is_c_hyperbolic_poly(f, 1).verdict
        assert not is_c_hyperbolic_poly(f, 2).verdict

    def test_closed_form_agreement_biquadratic(self):
        # X^4 - 3X^2 + 1: roots ±phi, ±1/phi; all off the circle but paired
        # products hit 1 exactly
        f = IntPoly((1, 0, -3, 0, 1))
        assert is_c_hyperbolic_poly(f, 1).verdict
        assert not is_c_hyperbolic_poly(f, 2).verdict


def test_full_product_blocks_n_hyperbolicity():
    # |det| = 1 forces the n-fold eigenvalue product onto the unit circle
    for mat, n in [
        (FIB, 2),
        (companion_matrix(PLASTIC), 3),
        (companion_matrix(IntPoly((-1, 0, 0, -1, 1))), 4),
    ]:
        assert abs(mat.det()) == 1
        assert not is_c_hyperbolic_matrix(mat, n).verdict


def test_precision_doubling_stability():
    cases = [SILVER, PLASTIC, IntPoly((1, -3, 1)), cyclotomic(5), cyclotomic(12)]
    for f in cases:
        for c in (1, 2):
            assert (
                is_c_hyperbolic_poly(f, c, 128).verdict
                == is_c_hyperbolic_poly(f, c, 256).verdict
            )


def test_commutant_elements_never_km_hyperbolic():
    # any |det| = 1 matrix commuting with 2·rho3 fails 2-hyperbolicity
    # (the real-component dimension forces the determinant relation)
    rng = random.Random(9)
    rep = m_rho3(2)
    for _ in range(5):
        u = random_unimodular(rng, 2)
        cand = u.kron_identity(2)
        assert all(cand @ img == img @ cand for img in rep.images)
        assert abs(cand.det()) == 1
        assert not is_c_hyperbolic_matrix(cand, 2).verdict


def test_report_records_precision():
    report = is_c_hyperbolic_matrix(FIB, 1, precision_bits=192)
    assert report.precision_bits == 192 and report.c_tested == 1
