"""Tests for the annulus, its exhaustion seminorms and the Frechet distances."""

import pytest

from models.domain import AnnulusDomain
from models.errors import DomainError
from models.laurent import LaurentSeries
from utils.domain import circle_sup, exhaustion_radius, frechet_distance, seminorm, seminorm_with_error
from utils.laurent import blaschke_factor, random_polynomial


class TestAnnulusDomain:

    def test_radius_must_exceed_one(self):
        with pytest.raises(DomainError):
            AnnulusDomain(1.0)

    def test_levels(self, domain):
        assert exhaustion_radius(domain, 1) == pytest.approx(1.0)
        assert exhaustion_radius(domain, 2) == pytest.approx(2 ** 0.5)
        assert domain.level(1).radii == (1.0,)

    def test_level_zero(self, domain):
        with pytest.raises(DomainError):
            domain.level(0)

    def test_contains(self, domain):
        assert domain.contains(1.5)
        assert not domain.contains(0.4)


class TestSeminorm:

    @pytest.mark.parametrize('k', range(-8, 9))
    def test_monomial_closed_form(self, domain, k):
        f = LaurentSeries.monomial(k)
        for n in range(1, 7):
            R_n = 2.0 ** (1 - 1 / n)
            assert seminorm(f, domain, n) == pytest.approx(R_n ** abs(k), rel=1e-9)

    def test_increasing_in_level(self, domain, rng):
        f = random_polynomial(rng, 4)
        values = [seminorm(f, domain, n) for n in range(1, 6)]
        assert values == sorted(values)

    def test_leaves_validity(self, domain):
        with pytest.raises(DomainError):
            seminorm(blaschke_factor(0.5, 64), domain, 2)

    def test_circle_sup_one_plus_z(self, one_plus_z):
        sup, theta, error = circle_sup(one_plus_z, 1.0)
        assert sup == pytest.approx(2.0, rel=1e-12)
        assert min(theta, 6.283185307179586 - theta) < 1e-6
        assert error >= 0

    def test_error_estimate_reported(self, domain, rng):
        f = random_polynomial(rng, 5)
        for n in range(1, 5):
            value, error = seminorm_with_error(f, domain, n)
            assert value == seminorm(f, domain, n)
            assert error >= 0

    def test_absolute_homogeneity(self, domain, rng):
        for _ in range(5):
            f = random_polynomial(rng, int(rng.integers(1, 6)))
            c = complex(rng.standard_normal(), rng.standard_normal())
            for n in range(1, 5):
                assert seminorm(f * c, domain, n) == pytest.approx(abs(c) * seminorm(f, domain, n), rel=1e-10)


class TestFrechetDistance:

    def test_zero_for_equal(self, domain, one_plus_z):
        distance, tail = frechet_distance(one_plus_z, one_plus_z, domain, k_max=5)
        assert distance == 0
        assert tail == pytest.approx(2 ** -5)

    def test_bounded_variant(self, domain, one_plus_z):
        distance, _ = frechet_distance(one_plus_z, one_plus_z + 10, domain, k_max=5)
        assert distance == pytest.approx(sum(2.0 ** -k for k in range(1, 6)))

    def test_ratio_variant(self, domain, one_plus_z):
        distance, _ = frechet_distance(one_plus_z, one_plus_z + 10, domain, 'ratio', k_max=5)
        assert distance == pytest.approx(10 / 11 * sum(2.0 ** -k for k in range(1, 6)))

    def test_unknown_variant(self, domain, one_plus_z):
        with pytest.raises(DomainError):
            frechet_distance(one_plus_z, one_plus_z, domain, 'supremum')

    @pytest.mark.parametrize('variant', ['bounded', 'ratio'])
    def test_symmetric(self, domain, rng, variant):
        for _ in range(3):
            f, g = random_polynomial(rng, 3), random_polynomial(rng, 4)
            forward, _ = frechet_distance(f, g, domain, variant, k_max=8)
            backward, _ = frechet_distance(g, f, domain, variant, k_max=8)
            assert abs(forward - backward) < 1e-12

    @pytest.mark.parametrize('variant', ['bounded', 'ratio'])
    def test_triangle_inequality(self, domain, rng, variant):
        for _ in range(3):
            f, g, h = (random_polynomial(rng, int(rng.integers(1, 5))) * 0.5 for _ in range(3))
            d_fh, _ = frechet_distance(f, h, domain, variant, k_max=8)
            d_fg, _ = frechet_distance(f, g, domain, variant, k_max=8)
            d_gh, _ = frechet_distance(g, h, domain, variant, k_max=8)
            assert d_fh <= d_fg + d_gh + 1e-12
