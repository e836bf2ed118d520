"""Tests for circle profiles, the three-circle residual and the rotation test."""

import csv
import math

import numpy as np
import pytest

from models.errors import DomainError, UndefinedError
from models.laurent import LaurentSeries
from models.results import MaxSetVerdict
from utils.analysis import (circle_profile, hadamard_residual, max_modulus_set, profile_series,
                            three_circle_rotation_test, write_profile_csv)
from utils.laurent import random_polynomial

RADII = (0.8, 1.0, 1.25)


def angular_distance(theta, targets):
    return min(abs((theta - t + math.pi) % (2 * math.pi) - math.pi) for t in targets)


class TestCircleProfile:

    def test_monomial_full_circle(self):
        profile = circle_profile(LaurentSeries.monomial(3, 2.0), 1.1)
        assert profile.sup == pytest.approx(2 * 1.1 ** 3, rel=1e-12)
        assert profile.to_dict()['argmax_points'] == 'full_circle'

    def test_csv_export(self, tmp_path, one_plus_z):
        path = tmp_path / 'profile.csv'
        write_profile_csv(profile_series(one_plus_z, RADII), str(path))
        with open(path, newline='') as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ['radius', 'sup_modulus', 'log_radius', 'log_sup']
        assert len(rows) == 4
        assert float(rows[2][1]) == pytest.approx(2.0)

    def test_symmetric_argmax(self):
        profile = circle_profile(LaurentSeries.from_mapping({-1: 1.0, 1: 1.0}), 1.0)
        assert profile.argmax_points
        for theta in profile.argmax_points:
            assert angular_distance(theta, (0.0, math.pi)) < 1e-6


class TestHadamard:

    def test_monomial_equality(self):
        check = hadamard_residual(LaurentSeries.monomial(-2, 3.0), *RADII)
        assert abs(check.residual) < 1e-9
        assert check.equality_flag

    def test_one_plus_z_strict(self, one_plus_z):
        check = hadamard_residual(one_plus_z, *RADII)
        expected = (math.log(1.25) * math.log(1.8) + math.log(1.25) * math.log(2.25)
                    - math.log(1.5625) * math.log(2.0))
        assert check.residual == pytest.approx(expected, rel=1e-8)
        assert not check.equality_flag
        assert not check.is_monomial

    def test_convexity_random(self, rng):
        for _ in range(20):
            f = random_polynomial(rng, int(rng.integers(1, 6)))
            assert hadamard_residual(f, *RADII).residual >= -1e-9

    def test_zero_series(self):
        with pytest.raises(UndefinedError):
            hadamard_residual(LaurentSeries.zero(1), *RADII)

    def test_unordered_radii(self, one_plus_z):
        with pytest.raises(DomainError):
            hadamard_residual(one_plus_z, 1.0, 0.8, 1.25)

    def test_sup_errors_reported(self, one_plus_z):
        errors = hadamard_residual(one_plus_z, *RADII).to_dict()['sup_errors']
        assert len(errors) == 3
        assert all(e >= 0 for e in errors)

    @pytest.mark.slow
    def test_equality_exactly_for_monomials(self, rng):
        for i in range(1000):
            if i % 3 == 0:
                f = LaurentSeries.monomial(int(rng.integers(-6, 7)), complex(*rng.uniform(0.5, 2, 2)))
            else:
                f = random_polynomial(rng, int(rng.integers(1, 7)))
            radii = np.sort(rng.uniform(0.5, 2.0, 3))
            if min(np.diff(radii)) < 0.01:
                continue
            check = hadamard_residual(f, *radii)
            assert check.residual >= -1e-9
            assert check.equality_flag == check.is_monomial
            assert check.is_monomial == (i % 3 == 0)


class TestMaxModulusSet:

    def test_monomial_full_circle(self):
        verdict = max_modulus_set(LaurentSeries.monomial(4), 1.0)
        assert verdict.kind == MaxSetVerdict.FULL_CIRCLE

    def test_single_peak(self, one_plus_z):
        verdict = max_modulus_set(one_plus_z, 1.0)
        assert verdict.kind == MaxSetVerdict.FINITE
        assert len(verdict.points) == 1
        theta = verdict.points[0]
        assert min(theta, 2 * math.pi - theta) < 1e-6

    def test_flat_peak_is_indeterminate(self):
        f = LaurentSeries.from_mapping({0: 1.0, 1: 1e-5})
        verdict = max_modulus_set(f, 1.0)
        assert verdict.kind == MaxSetVerdict.INDETERMINATE
        assert verdict.reason

    def test_zero_series(self):
        with pytest.raises(UndefinedError):
            max_modulus_set(LaurentSeries.zero(2), 1.0)

    def test_two_peaks(self):
        verdict = max_modulus_set(LaurentSeries.from_mapping({0: 1.0, 2: 0.5}), 1.0)
        assert verdict.kind == MaxSetVerdict.FINITE
        assert len(verdict.points) == 2
        for theta in verdict.points:
            assert angular_distance(theta, (0.0, math.pi)) < 1e-6

    def test_non_monomials_are_not_full_circle(self, rng):
        for _ in range(20):
            verdict = max_modulus_set(random_polynomial(rng, int(rng.integers(1, 6))), 1.0)
            assert verdict.kind != MaxSetVerdict.FULL_CIRCLE
        for k in (-3, 0, 2):
            assert max_modulus_set(LaurentSeries.monomial(k, 0.7j), 1.3).kind == MaxSetVerdict.FULL_CIRCLE


class TestRotation:

    def test_rotation(self):
        verdict = three_circle_rotation_test(LaurentSeries.monomial(1, 1j), *RADII)
        assert verdict.is_rotation
        assert verdict.constant == pytest.approx(1j)

    def test_scaling_is_not_rotation(self):
        verdict = three_circle_rotation_test(LaurentSeries.monomial(1, 2.0), *RADII)
        assert not verdict.is_rotation
        assert verdict.witness['circle'] == 1

    def test_shift_is_not_rotation(self, one_plus_z):
        verdict = three_circle_rotation_test(one_plus_z, *RADII)
        assert verdict.to_dict()['verdict'] == 'No'
