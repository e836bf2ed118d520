#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Model class for integers too large to write down

A LogSpaceInteger is one of
    exact     a Python int
    interval  an mpmath interval enclosing a real value
    tower     2^e for another LogSpaceInteger e
so p_5 = 2^(2^(2^43046722)) is a tower of depth three over an exact integer.
Interval arithmetic runs at the precision given by the bits attribute.
"""

import logging
import math
from contextlib import contextmanager

from mpmath import iv

import config
from models.errors import DomainError, PrecisionExhausted

logger = logging.getLogger(__name__)

EXACT = 'exact'
INTERVAL = 'interval'
TOWER = 'tower'

# |log2(1 + t)| <= LOG2_SLOPE |t| for |t| <= 1/2
LOG2_SLOPE = 2.886


@contextmanager
def interval_precision(bits):
    """Temporarily set the working precision of mpmath's interval context"""
    saved = iv.prec
    iv.prec = bits
    try:
        yield
    finally:
        iv.prec = saved


def _json_number(x):
    value = float(x)
    if math.isfinite(value) and (value != 0 or x == 0):
        return value
    return iv.nstr(x, 17)


def _is_power_of_two(n):
    return n > 0 and n & (n - 1) == 0


class LogSpaceInteger:
    """
    Exact, interval or tower representation of a nonnegative quantity
    """

    def __init__(self, exact=None, interval=None, exponent=None, bits=None):
        """
        Exactly one of exact, interval and exponent is given

        Args:
            exact (int, optional): Exact value
            interval (mpmath.iv.mpf, optional): Enclosure of a real value
            exponent (LogSpaceInteger, optional): e for the value 2^e
            bits (int, optional): Interval precision
        """
        if sum(v is not None for v in (exact, interval, exponent)) != 1:
            raise ValueError("exactly one of exact, interval and exponent must be given")
        self.bits = bits or config.DEFAULT_PRECISION_BITS
        self.exact = exact
        self.interval = interval
        self.exponent = exponent

    @property
    def kind(self):
        if self.exact is not None:
            return EXACT
        if self.interval is not None:
            return INTERVAL
        return TOWER

    @property
    def depth(self):
        """Number of 2^ levels above the innermost exact or interval value"""
        return 0 if self.exponent is None else 1 + self.exponent.depth

    @classmethod
    def of(cls, value, bits=None):
        """Coerce an int, float, interval or LogSpaceInteger"""
        if isinstance(value, LogSpaceInteger):
            return value
        if isinstance(value, int):
            return cls(exact=value, bits=bits)
        with interval_precision(bits or config.DEFAULT_PRECISION_BITS):
            return cls(interval=iv.mpf(value), bits=bits)

    def _interval(self):
        if self.kind == EXACT:
            return iv.mpf(self.exact)
        if self.kind == INTERVAL:
            return self.interval
        raise DomainError("a tower has no interval enclosure at this precision")

    def _lower_log2(self):
        """Lower bound of log2 of a tower, None when the exponent is itself a tower"""
        if self.exponent.kind == TOWER:
            return None
        return self.exponent._interval().a

    @classmethod
    def pow2(cls, x, bits=None):
        """
        2^x

        The result stays exact while it has at most config.MAX_EXACT_BITS
        bits and becomes a tower once its exponent exceeds that.
        """
        x = cls.of(x, bits)
        bits = bits or x.bits
        if x.kind == EXACT and 0 <= x.exact <= config.MAX_EXACT_BITS:
            return cls(exact=1 << x.exact, bits=bits)
        if x.kind != TOWER:
            with interval_precision(bits):
                e = x._interval()
                if e.b <= config.MAX_EXACT_BITS and e.a >= -config.MAX_EXACT_BITS:
                    return cls(interval=iv.exp(e * iv.ln2), bits=bits)
        logger.debug(f"2^({x!r}) kept as a tower")
        return cls(exponent=x, bits=bits)

    @classmethod
    def int_power(cls, base, e, bits=None):
        """
        base^e for a positive int base

        Args:
            base (int): Base
            e (LogSpaceInteger or int): Exponent

        Returns:
            LogSpaceInteger: Exact when the result fits config.MAX_EXACT_BITS
        """
        e = cls.of(e, bits)
        bits = bits or e.bits
        if base <= 0:
            raise DomainError(f"base must be positive, got {base}")
        if base == 1:
            return cls(exact=1, bits=bits)
        if e.kind == EXACT and e.exact >= 0 and e.exact * base.bit_length() <= config.MAX_EXACT_BITS:
            return cls(exact=base ** e.exact, bits=bits)
        return cls.pow2(e * cls.of(base, bits).log2(), bits)

    def log2(self):
        """log2(value); exact for exact powers of two"""
        if self.kind == TOWER:
            return self.exponent
        if self.kind == EXACT:
            if self.exact <= 0:
                raise DomainError(f"log2 of {self.exact}")
            if _is_power_of_two(self.exact):
                return LogSpaceInteger(exact=self.exact.bit_length() - 1, bits=self.bits)
        with interval_precision(self.bits):
            x = self._interval()
            if not x.a > 0:
                raise DomainError(f"log2 of an interval reaching {iv.nstr(x.a, 6)}")
            return LogSpaceInteger(interval=iv.ln(x) / iv.ln2, bits=self.bits)

    def __add__(self, other):
        """
        Add a quantity of depth zero

        For a tower V = 2^E, log2(V + u) = E + log2(1 + u/V) and the
        correction is pushed into the exponent as a small interval.
        """
        other = LogSpaceInteger.of(other, self.bits)
        if other.kind == TOWER:
            if self.kind == TOWER:
                raise DomainError("sum of two towers is not supported")
            return other + self
        if self.kind == EXACT and other.kind == EXACT:
            return LogSpaceInteger(exact=self.exact + other.exact, bits=self.bits)
        with interval_precision(self.bits):
            u = other._interval()
            if self.kind != TOWER:
                return LogSpaceInteger(interval=self._interval() + u, bits=self.bits)
            if u.a == 0 and u.b == 0:
                return self
            size = abs(u).b
            lower = self._lower_log2()
            if lower is None or lower > 10 * self.bits:
                ratio = size * iv.ldexp(iv.mpf(1), -10 * self.bits)
            else:
                ratio = size * iv.exp(-lower * iv.ln2)
            if not ratio.b <= 0.5:
                # V is small enough to write out
                base = self.exponent._interval()
                return LogSpaceInteger(interval=iv.exp(base * iv.ln2) + u, bits=self.bits)
            slack = LOG2_SLOPE * ratio.b
            if u.a >= 0:
                delta = iv.mpf([0, slack])
            elif u.b <= 0:
                delta = iv.mpf([-slack, 0])
            else:
                delta = iv.mpf([-slack, slack])
        return LogSpaceInteger(exponent=self.exponent + LogSpaceInteger(interval=delta, bits=self.bits), bits=self.bits)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, int):
            return self + (-other)
        other = LogSpaceInteger.of(other, self.bits)
        if other.kind == EXACT:
            return self + (-other.exact)
        with interval_precision(self.bits):
            return self + LogSpaceInteger(interval=-other._interval(), bits=self.bits)

    def __mul__(self, other):
        """Multiply by a positive quantity; towers go through log2"""
        other = LogSpaceInteger.of(other, self.bits)
        if self.kind == EXACT and other.kind == EXACT:
            return LogSpaceInteger(exact=self.exact * other.exact, bits=self.bits)
        if self.kind == TOWER or other.kind == TOWER:
            return LogSpaceInteger.pow2(self.log2() + other.log2(), self.bits)
        with interval_precision(self.bits):
            return LogSpaceInteger(interval=self._interval() * other._interval(), bits=self.bits)

    __rmul__ = __mul__

    def compare(self, other):
        """
        Certified three-way comparison

        Returns:
            int or None: -1, 0 or 1, None when the enclosures overlap
        """
        a, b = self, LogSpaceInteger.of(other, self.bits)
        with interval_precision(self.bits):
            while True:
                if a.kind == EXACT and b.kind == EXACT:
                    return (a.exact > b.exact) - (a.exact < b.exact)
                if a.kind != TOWER and b.kind != TOWER:
                    x, y = a._interval(), b._interval()
                    if x.b < y.a:
                        return -1
                    if x.a > y.b:
                        return 1
                    if x.a == x.b == y.a == y.b:
                        return 0
                    return None
                # towers are positive
                if a.kind != TOWER and a._interval().b <= 0:
                    return -1
                if b.kind != TOWER and b._interval().b <= 0:
                    return 1
                if a.kind != TOWER and not a._interval().a > 0:
                    return None
                if b.kind != TOWER and not b._interval().a > 0:
                    return None
                a, b = a.log2(), b.log2()

    def at_least(self, other):
        """True only when value >= other is certified"""
        return self.compare(other) in (0, 1)

    def require_at_least(self, other, what):
        verdict = self.compare(other)
        if verdict is None:
            raise PrecisionExhausted(f"{what}: enclosures overlap at {self.bits} bits")
        return verdict >= 0

    @property
    def value(self):
        """The exact int; None for interval and tower forms"""
        return self.exact

    def to_dict(self):
        if self.kind == EXACT:
            return {'repr': EXACT, 'value': self.exact}
        if self.kind == INTERVAL:
            return {
                'repr': INTERVAL,
                'lower': _json_number(self.interval.a),
                'upper': _json_number(self.interval.b),
            }
        return {'repr': TOWER, 'log2': self.exponent.to_dict()}

    def __repr__(self):
        if self.kind == EXACT:
            return str(self.exact) if self.exact.bit_length() <= 64 else f"<{self.exact.bit_length()}-bit integer>"
        if self.kind == INTERVAL:
            return iv.nstr(self.interval, 10)
        return f"2^({self.exponent!r})"

