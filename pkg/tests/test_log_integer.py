"""Tests for LogSpaceInteger."""

import pytest
from mpmath import iv

from models.errors import DomainError, PrecisionExhausted
from models.log_integer import EXACT, INTERVAL, TOWER, LogSpaceInteger


class TestForms:

    def test_exactly_one_form(self):
        with pytest.raises(ValueError):
            LogSpaceInteger(exact=1, exponent=LogSpaceInteger(exact=2))

    def test_small_power_stays_exact(self):
        value = LogSpaceInteger.pow2(10)
        assert value.kind == EXACT
        assert value.exact == 1024

    def test_large_power_is_tower(self):
        value = LogSpaceInteger.pow2(5000)
        assert value.kind == TOWER
        assert value.depth == 1
        assert value.to_dict() == {'repr': 'tower', 'log2': {'repr': 'exact', 'value': 5000}}

    def test_negative_exponent_is_interval(self):
        value = LogSpaceInteger.pow2(-1)
        assert value.kind == INTERVAL
        assert float(value.interval.a) <= 0.5 <= float(value.interval.b)

    def test_int_power(self):
        assert LogSpaceInteger.int_power(3, 16).exact == 43046721
        assert LogSpaceInteger.int_power(1, LogSpaceInteger.pow2(5000)).exact == 1

    def test_int_power_of_tower(self):
        value = LogSpaceInteger.int_power(4, LogSpaceInteger.pow2(5000))
        assert value.depth == 2
        assert value.exponent.exponent.exact == 5001


class TestArithmetic:

    def test_exact_sum(self):
        assert (LogSpaceInteger.of(3) + 4).exact == 7

    def test_log2(self):
        assert LogSpaceInteger.of(1024).log2().exact == 10
        assert LogSpaceInteger.pow2(5000).log2().exact == 5000
        assert float(LogSpaceInteger.of(3).log2().interval.a) == pytest.approx(1.5849625, rel=1e-7)

    def test_log2_of_zero(self):
        with pytest.raises(DomainError):
            LogSpaceInteger.of(0).log2()

    def test_tower_plus_small(self):
        value = LogSpaceInteger.pow2(5000) + 1
        assert value.kind == TOWER
        assert value.compare(LogSpaceInteger.pow2(4999)) == 1

    def test_two_towers(self):
        with pytest.raises(DomainError):
            LogSpaceInteger.pow2(5000) + LogSpaceInteger.pow2(6000)

    def test_tower_product(self):
        value = LogSpaceInteger.pow2(5000) * LogSpaceInteger.pow2(6000)
        assert value.exponent.exact == 11000


class TestCompare:

    def test_exact(self):
        assert LogSpaceInteger.of(3).compare(5) == -1
        assert LogSpaceInteger.of(5).compare(5) == 0

    def test_tower_against_exact(self):
        assert LogSpaceInteger.pow2(5000).compare(10 ** 100) == 1
        assert LogSpaceInteger.of(10 ** 100).compare(LogSpaceInteger.pow2(5000)) == -1

    def test_overlap_is_undecided(self):
        wide = LogSpaceInteger(interval=iv.mpf([1, 3]))
        assert wide.compare(2) is None
        assert not wide.at_least(2)
        with pytest.raises(PrecisionExhausted):
            wide.require_at_least(2, 'overlap')

    def test_nested_towers(self):
        small = LogSpaceInteger.pow2(LogSpaceInteger.pow2(5000))
        large = LogSpaceInteger.pow2(LogSpaceInteger.pow2(5001))
        assert large.compare(small) == 1
