"""Tests for spectra, resolvent solves, the gap profile and the Liouville certificates."""

import cmath
import csv
from fractions import Fraction

import numpy as np
import pytest

from models.errors import DomainError, InconsistentPeriodClaim, MalformedInputError, SmallDivisor, ZeroFunction
from models.laurent import LaurentSeries
from models.log_integer import EXACT, TOWER
from models.operator import WeightedComposition
from models.results import SpectrumDescription
from utils.spectral import (detect_period, diophantine_gap_profile, eigenvector_check, liouville_growth,
                            liouville_sequence, parse_rational, parse_real_expression, resolvent_solve, spectrum,
                            write_gap_csv)

ALPHA = cmath.exp(0.7j)


def root_of_unity(n):
    return cmath.exp(2j * cmath.pi / n)


class TestPeriod:

    @pytest.mark.parametrize('n', [1, 2, 3, 6, 12, 97])
    def test_roots_of_unity(self, n):
        assert detect_period(root_of_unity(n)) == n

    def test_irrational_angle(self):
        assert detect_period(cmath.exp(2j * cmath.pi * 2 ** 0.5)) is None


class TestSpectrum:

    def test_inversion_pair(self):
        description = spectrum(WeightedComposition.inversion(ALPHA, 1j))
        assert description.kind == SpectrumDescription.INVERSION_PAIR
        assert description.points == pytest.approx([ALPHA, -ALPHA])
        assert description.eigenspace_dimension == 'infinite'

    def test_root_of_unity_cycle(self):
        description = spectrum(WeightedComposition.rotation(ALPHA, root_of_unity(6)))
        assert description.kind == SpectrumDescription.ROOT_OF_UNITY_CYCLE
        assert description.order == 6
        assert len(description.points) == 6

    def test_aperiodic(self):
        description = spectrum(WeightedComposition.rotation(ALPHA, cmath.exp(2j * cmath.pi * 2 ** 0.5)),
                               aperiodic=True)
        assert description.kind == SpectrumDescription.APERIODIC_ORBIT
        assert description.eigenspace_dimension == 1
        assert description.to_dict()['period_cutoff'] == 10 ** 6

    def test_claimed_period(self):
        description = spectrum(WeightedComposition.rotation(ALPHA, root_of_unity(6)), n_root=6)
        assert description.order == 6

    def test_wrong_claimed_period(self):
        with pytest.raises(InconsistentPeriodClaim):
            spectrum(WeightedComposition.rotation(ALPHA, root_of_unity(6)), n_root=3)

    def test_claimed_period_not_minimal(self):
        with pytest.raises(InconsistentPeriodClaim):
            spectrum(WeightedComposition.rotation(ALPHA, root_of_unity(6)), n_root=12)

    def test_aperiodic_claim_on_root_of_unity(self):
        with pytest.raises(InconsistentPeriodClaim):
            spectrum(WeightedComposition.rotation(ALPHA, root_of_unity(4)), aperiodic=True)

    @pytest.mark.parametrize('op', [
        WeightedComposition.inversion(ALPHA, 1j),
        WeightedComposition.rotation(ALPHA, root_of_unity(5)),
        WeightedComposition.rotation(ALPHA, cmath.exp(2j * cmath.pi * 3 ** 0.5)),
    ])
    def test_witnesses_are_eigenvectors(self, domain, op):
        for witness in spectrum(op).witnesses:
            assert eigenvector_check(op, witness.eigenvalue, witness.vector, domain) < 1e-10

    def test_zero_candidate(self, domain):
        with pytest.raises(ZeroFunction):
            eigenvector_check(WeightedComposition.rotation(1, 1j), 1, LaurentSeries.zero(2), domain)

    def test_minus_alpha_is_not_eigenvalue_of_e0(self, domain):
        op = WeightedComposition.inversion(ALPHA, 1j)
        assert eigenvector_check(op, -ALPHA, LaurentSeries.monomial(0), domain) == pytest.approx(2.0)


class TestResolvent:

    def test_small_divisor_at_zero(self):
        with pytest.raises(SmallDivisor) as info:
            resolvent_solve(WeightedComposition.rotation(1, 1j), 1, LaurentSeries.monomial(0))
        assert info.value.k == 0

    def test_small_divisor_prefers_smallest_index(self):
        g = LaurentSeries.from_mapping({-4: 1, 4: 1, 1: 1})
        with pytest.raises(SmallDivisor) as info:
            resolvent_solve(WeightedComposition.rotation(1, 1j), 1, g)
        assert info.value.k == 0

    def test_solution_verifies(self):
        op = WeightedComposition.rotation(1, 1j)
        g = LaurentSeries.from_mapping({-2: 1, 0: 1, 1: 2})
        solution = resolvent_solve(op, 0.5, g)
        assert solution.verification_residual < 1e-10
        assert solution.bounds_hold
        assert solution.f.coeff(0) == pytest.approx(2.0)

    def test_coefficient_bounds_random(self, rng):
        for _ in range(20):
            alpha, beta = (cmath.exp(2j * cmath.pi * rng.random()) for _ in range(2))
            op = WeightedComposition.rotation(alpha, beta)
            modulus = rng.uniform(0.3, 0.8) if rng.random() < 0.5 else rng.uniform(1.2, 2.0)
            lam = modulus * cmath.exp(2j * cmath.pi * rng.random())
            g = LaurentSeries(rng.standard_normal(13) + 1j * rng.standard_normal(13))
            solution = resolvent_solve(op, lam, g)
            assert solution.bounds_hold
            b = np.abs(g.coeffs)
            a = np.abs(solution.f.coeffs)
            nonzero = b > 0
            assert np.all(b[nonzero] / (1 + modulus) <= a[nonzero] * (1 + 1e-12))
            assert np.all(a[nonzero] <= b[nonzero] / abs(1 - modulus) * (1 + 1e-12))

    def test_unimodular_lambda_has_no_bounds(self):
        solution = resolvent_solve(WeightedComposition.rotation(1, 1j), cmath.exp(0.1j), LaurentSeries.monomial(1))
        assert solution.bounds_hold is None
        assert solution.min_divisor_index in (-1, 0, 1)

    def test_inversion_rejected(self):
        with pytest.raises(DomainError):
            resolvent_solve(WeightedComposition.inversion(1, 1j), 2, LaurentSeries.monomial(0))


class TestParsing:

    def test_expression(self):
        assert float(parse_real_expression('sqrt(2) - 1')) == pytest.approx(2 ** 0.5 - 1)
        assert float(parse_real_expression('-pi / 4')) == pytest.approx(-np.pi / 4)

    def test_expression_rejects_names(self):
        with pytest.raises(MalformedInputError):
            parse_real_expression('__import__("os")')

    def test_rational(self):
        assert parse_rational('1/3') == Fraction(1, 3)
        with pytest.raises(MalformedInputError):
            parse_rational('one third')


class TestGapProfile:

    def test_structure(self):
        profile = diophantine_gap_profile('sqrt(2) - 1', '1/3', 2000, bits=256)
        assert np.all(np.isfinite(profile.gap_values))
        assert np.all(np.diff(profile.envelope) <= 0)
        lower, upper = profile.limit_bracket
        assert lower <= 1 <= upper
        assert profile.diophantine_bound is None

    def test_bound_holds(self):
        profile = diophantine_gap_profile('sqrt(2) - 1', '1/3', 1000, bits=256, gamma=0.25, tau=2)
        assert profile.diophantine_bound['holds']
        assert profile.to_dict()['parameters']['c'] == pytest.approx(9.0)

    @pytest.mark.slow
    def test_full_profile(self):
        profile = diophantine_gap_profile('sqrt(2) - 1', '1/3', 10 ** 5, bits=256)
        lower, upper = profile.limit_bracket
        assert lower <= 1 <= upper
        assert np.isfinite(profile.envelope[-1])

    def test_integer_r(self):
        with pytest.raises(DomainError):
            diophantine_gap_profile('sqrt(2) - 1', '2', 100)

    def test_short_profile(self):
        with pytest.raises(DomainError):
            diophantine_gap_profile('sqrt(2) - 1', '1/3', 5)

    def test_csv(self, tmp_path):
        profile = diophantine_gap_profile('sqrt(2) - 1', '1/3', 20, gamma=0.25, tau=2)
        path = tmp_path / 'gaps.csv'
        write_gap_csv(profile, str(path))
        with open(path, newline='') as handle:
            rows = list(csv.reader(handle))
        assert rows[0] == ['k', 'gap', 'envelope', 'bound']
        assert len(rows) == 21
        assert rows[1][3] != ''


class TestLiouville:

    def test_first_terms(self):
        terms = liouville_sequence(5)
        assert [t.p.exact for t in terms[:3]] == [1, 2, 16]
        assert terms[3].q.exact == 43046721

    def test_towers(self):
        terms = liouville_sequence(5)
        p4, q5, p5 = terms[3].p, terms[4].q, terms[4].p
        assert p4.kind == TOWER and p4.depth == 1
        assert p4.exponent.kind == EXACT and p4.exponent.exact == 43046721
        assert q5.depth == 2
        assert q5.exponent.exponent.exact == 43046722
        assert p5.depth == 3

    def test_checks_hold(self):
        for term in liouville_sequence(5):
            assert all(term.checks.values()), term.n

    def test_n_out_of_range(self):
        with pytest.raises(DomainError):
            liouville_sequence(1)
        with pytest.raises(DomainError):
            liouville_sequence(9)

    def test_divisor_at_two(self):
        growth = liouville_growth(2)
        assert float(growth.divisor.a) == pytest.approx(0.390181, abs=1e-6)
        assert float(growth.divisor.b) == pytest.approx(0.390181, abs=1e-6)

    def test_growth_at_three(self):
        growth = liouville_growth(3)
        lower = float(growth.lower.interval.a)
        assert lower == pytest.approx(1.8649e6, rel=1e-3)

    def test_growth_increasing(self):
        growth = [liouville_growth(n) for n in range(2, 6)]
        for a, b in zip(growth, growth[1:]):
            assert b.lower.compare(a.lower) == 1
        for g in growth[1:]:
            assert g.lower.at_least(10 ** g.n)
