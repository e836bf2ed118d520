"""Tests for winding numbers, the annulus logarithm and the unimodular factorization."""

import math

import numpy as np
import pytest

from models.errors import (DomainError, NearZeroOnContour, NonIntegerWinding, NotUnimodular, WindingMismatch)
from models.laurent import LaurentSeries
from utils.factorization import (annulus_log, check_nonvanishing, factor_unimodular, laurent_split, reflect,
                                 synthesize_unimodular, unimodularity_defect, winding_number)
from utils.laurent import blaschke_factor, evaluate, exp_series, exp_z_minus_inv_z, random_polynomial


class TestWinding:

    def test_blaschke(self):
        assert winding_number(blaschke_factor(0.5, 64), 1.0) == 1

    def test_negative_power(self):
        assert winding_number(LaurentSeries.monomial(-3, 2.0), 0.7) == -3

    def test_zero_outside(self):
        f = LaurentSeries.from_mapping({0: -1.5, 1: 1})
        assert winding_number(f, 1.0) == 0
        assert winding_number(f, 1.8) == 1

    def test_zero_on_contour(self):
        with pytest.raises(NearZeroOnContour):
            winding_number(LaurentSeries.from_mapping({0: -1, 1: 1}), 1.0)

    def test_under_resolved_zero(self):
        # the trapezoidal sum gives 1 / (1 - 0.999^64), about 16.1
        with pytest.raises(NonIntegerWinding):
            winding_number(LaurentSeries.from_mapping({0: -0.999, 1: 1}), 1.0, M=64)

    def test_mismatch_across_annulus(self):
        with pytest.raises(WindingMismatch):
            check_nonvanishing(LaurentSeries.from_mapping({0: -1.5, 1: 1}), 2.0)

    def test_nonvanishing_outside_validity(self):
        with pytest.raises(DomainError):
            check_nonvanishing(blaschke_factor(0.5, 64), 1.9)

    def test_additive_under_products(self):
        f = LaurentSeries.from_mapping({0: -0.5, 1: 1})
        g = LaurentSeries.from_mapping({-2: 1, -1: 0.3})
        assert winding_number(f, 1.0) == 1
        assert winding_number(g, 1.0) == -2
        assert winding_number(f * g, 1.0) == -1


class TestAnnulusLog:

    def test_exp_z_minus_inv_z(self):
        n, h = annulus_log(exp_z_minus_inv_z(32), 2.0)
        assert n == 0
        assert h.coeff(1) == pytest.approx(1, abs=1e-10)
        assert h.coeff(-1) == pytest.approx(-1, abs=1e-10)
        assert abs(h.coeff(0)) < 1e-10

    def test_s_must_exceed_one(self):
        with pytest.raises(DomainError):
            annulus_log(exp_z_minus_inv_z(16), 1.0)

    def test_split_and_reflect(self):
        h = LaurentSeries.from_mapping({-1: 1, 0: 2, 1: 3j})
        plus, minus = laurent_split(h)
        assert plus.support() == [0, 1]
        assert minus.support() == [-1]
        reflected = reflect(plus)
        assert reflected.coeff(-1) == pytest.approx(-3j)
        assert reflected.coeff(0) == pytest.approx(2)

    def test_reflect_is_involution(self, rng):
        f = random_polynomial(rng, 5)
        np.testing.assert_array_equal(reflect(reflect(f)).coeffs, f.coeffs)

    @pytest.mark.parametrize('g, n, expected', [
        (LaurentSeries.monomial(3), 3, {}),
        (exp_series(LaurentSeries.monomial(1, N=20)), 0, {1: 1}),
        (exp_series(LaurentSeries.from_mapping({-1: 1, 1: 1}), 32).shifted(1), 1, {-1: 1, 1: 1}),
    ])
    def test_recovers_exponent(self, g, n, expected):
        winding, h = annulus_log(g, 2.0)
        assert winding == n
        for k in range(-h.N, h.N + 1):
            assert abs(h.coeff(k) - expected.get(k, 0)) < 1e-9, k


class TestFactorization:

    def test_blaschke(self):
        result = factor_unimodular(blaschke_factor(0.5, 64))
        assert result.winding == 1
        for k in range(12):
            assert result.g0.coeff(k) == pytest.approx(0.5 ** k, abs=1e-8)
        assert result.unit_circle_residual < 1e-8
        assert result.outer['outer']

    def test_exp_z_minus_inv_z(self):
        result = factor_unimodular(exp_z_minus_inv_z(32))
        assert result.winding == 0
        for k in range(12):
            assert result.g0.coeff(k) == pytest.approx(1 / math.factorial(k), abs=1e-8)
        assert result.outer['outer']

    def test_not_unimodular(self):
        with pytest.raises(NotUnimodular):
            factor_unimodular(LaurentSeries.from_mapping({0: 2, 1: 1}))

    def test_synthesized_round_trip(self, rng):
        for _ in range(5):
            h_plus = random_polynomial(rng, 2, one_sided=True) * 0.3
            n = int(rng.integers(-5, 6))
            f = synthesize_unimodular(h_plus, n, N=64)
            assert unimodularity_defect(f) < 1e-10
            result = factor_unimodular(f)
            assert result.winding == n
            assert result.unit_circle_residual < 1e-8

    @pytest.mark.slow
    def test_synthesized_round_trip_full(self, rng):
        for _ in range(200):
            h_plus = random_polynomial(rng, int(rng.integers(1, 9)), one_sided=True) * 0.3
            n = int(rng.integers(-5, 6))
            result = factor_unimodular(synthesize_unimodular(h_plus, n))
            assert result.winding == n
            assert result.unit_circle_residual < 1e-8

    def test_factor_reproduces_samples(self):
        f = blaschke_factor(0.5, 64)
        result = factor_unimodular(f)
        z = np.exp(1j * np.linspace(0, 2 * np.pi, 7))
        rebuilt = z * result.g0(z) / np.conj(result.g0(1 / np.conj(z)))
        np.testing.assert_allclose(rebuilt, f(z), atol=1e-8)

    def test_outer_factor_normalization(self, rng):
        h_plus = random_polynomial(rng, 3, one_sided=True) * 0.3
        result = factor_unimodular(synthesize_unimodular(h_plus, 2, N=64))
        z = np.exp(1j * np.linspace(0, 2 * np.pi, 9))
        ratio = evaluate(result.g0, z) / np.exp(evaluate(h_plus, z) - h_plus.coeff(0).real)
        np.testing.assert_allclose(ratio, ratio[0], atol=1e-8)
        assert ratio[0] ** 2 == pytest.approx(1, abs=1e-8)
