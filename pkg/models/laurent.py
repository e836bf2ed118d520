#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Model classes for truncated Laurent series and circle samples
"""

import math

import numpy as np

from models.errors import DomainError, MalformedInputError


def _radius_to_json(value):
    """Encode an unbounded radius as None"""
    if value is None or math.isinf(value):
        return None
    return float(value)


def _radius_from_json(value, default):
    if value is None:
        return default
    return float(value)


class LaurentSeries:
    """
    Truncated two-sided series sum a_k z^k for k = -N..N

    The coefficient vector is stored densely with index k at position k + N.
    Instances are immutable: every operation returns a new series.
    """

    def __init__(self, coeffs, inner=0.0, outer=math.inf):
        """
        Initialize a series

        Args:
            coeffs (array-like): 2N+1 complex coefficients ordered k = -N..N
            inner (float): Inner radius of the validity annulus
            outer (float): Outer radius of the validity annulus
        """
        coeffs = np.array(coeffs, dtype=complex).reshape(-1)
        if coeffs.size % 2 == 0:
            raise MalformedInputError(f"coefficient vector must have odd length, got {coeffs.size}")
        if not np.all(np.isfinite(coeffs)):
            raise MalformedInputError("coefficients must be finite")
        inner = float(inner)
        outer = float(outer)
        if not (0.0 <= inner < 1.0 < outer):
            raise DomainError(f"validity annulus ({inner}, {outer}) must satisfy 0 <= inner < 1 < outer")
        coeffs.setflags(write=False)
        self.coeffs = coeffs
        self.inner = inner
        self.outer = outer

    @property
    def N(self):
        """Degree bound of the series"""
        return (self.coeffs.size - 1) // 2

    @property
    def indices(self):
        """Integer indices k = -N..N aligned with coeffs"""
        return np.arange(-self.N, self.N + 1)

    def coeff(self, k):
        """Coefficient a_k, zero outside the stored range"""
        if abs(k) > self.N:
            return 0j
        return complex(self.coeffs[k + self.N])

    # Constructors

    @classmethod
    def zero(cls, N=0, inner=0.0, outer=math.inf):
        """The zero series of degree bound N"""
        return cls(np.zeros(2 * N + 1, dtype=complex), inner, outer)

    @classmethod
    def monomial(cls, k, c=1.0, N=None):
        """
        The series c z^k

        Args:
            k (int): Exponent
            c (complex): Coefficient
            N (int, optional): Degree bound, at least |k|

        Returns:
            LaurentSeries: c e_k, valid on the punctured plane
        """
        N = abs(k) if N is None else N
        if N < abs(k):
            raise DomainError(f"degree bound {N} is smaller than |{k}|")
        coeffs = np.zeros(2 * N + 1, dtype=complex)
        coeffs[k + N] = c
        return cls(coeffs)

    @classmethod
    def from_mapping(cls, terms, N=None, inner=0.0, outer=math.inf):
        """Build a series from a {k: a_k} mapping"""
        if not terms:
            return cls.zero(N or 0, inner, outer)
        top = max(abs(int(k)) for k in terms)
        N = top if N is None else N
        if N < top:
            raise DomainError(f"degree bound {N} is smaller than the largest index {top}")
        coeffs = np.zeros(2 * N + 1, dtype=complex)
        for k, value in terms.items():
            coeffs[int(k) + N] += value
        return cls(coeffs, inner, outer)

    # Validity helpers

    def contains_radius(self, r):
        """True when the circle |z| = r lies inside the open validity annulus"""
        return self.inner < r < self.outer

    def with_validity(self, inner, outer):
        return LaurentSeries(self.coeffs, inner, outer)

    def intersect_validity(self, other):
        """Validity annulus shared by two series"""
        inner = max(self.inner, other.inner)
        outer = min(self.outer, other.outer)
        if inner >= outer:
            raise DomainError(f"validity annuli do not intersect: ({inner}, {outer})")
        return inner, outer

    # Reshaping

    def padded(self, N):
        """Same series stored with degree bound N >= self.N"""
        if N < self.N:
            raise DomainError(f"cannot pad degree {self.N} down to {N}")
        out = np.zeros(2 * N + 1, dtype=complex)
        out[N - self.N:N + self.N + 1] = self.coeffs
        return LaurentSeries(out, self.inner, self.outer)

    def truncated(self, N):
        """Drop the coefficients with |k| > N"""
        if N >= self.N:
            return self.padded(N)
        return LaurentSeries(self.coeffs[self.N - N:self.N + N + 1], self.inner, self.outer)

    def trimmed(self, tol=0.0):
        """Smallest symmetric degree bound keeping every coefficient above tol"""
        support = self.support(tol)
        top = max((abs(k) for k in support), default=0)
        return self.truncated(top)

    def snapped(self, tol):
        """Coefficients below tol in absolute value set to zero"""
        out = np.array(self.coeffs)
        out[np.abs(out) < tol] = 0
        return LaurentSeries(out, self.inner, self.outer)

    def shifted(self, n):
        """The series z^n f(z)"""
        N = self.N + abs(n)
        out = np.zeros(2 * N + 1, dtype=complex)
        start = N - self.N + n
        out[start:start + self.coeffs.size] = self.coeffs
        return LaurentSeries(out, self.inner, self.outer)

    def support(self, tol=0.0):
        """Indices whose coefficient exceeds tol in absolute value"""
        return [int(k) for k in self.indices[np.abs(self.coeffs) > tol]]

    def is_zero(self, tol=0.0):
        return not self.support(tol)

    def max_abs(self):
        if self.coeffs.size == 0:
            return 0.0
        return float(np.max(np.abs(self.coeffs)))

    # Arithmetic

    def _aligned(self, other):
        N = max(self.N, other.N)
        return self.padded(N).coeffs, other.padded(N).coeffs, N

    def __add__(self, other):
        if isinstance(other, LaurentSeries):
            a, b, _ = self._aligned(other)
            return LaurentSeries(a + b, *self.intersect_validity(other))
        out = np.array(self.coeffs)
        out[self.N] += other
        return LaurentSeries(out, self.inner, self.outer)

    __radd__ = __add__

    def __neg__(self):
        return LaurentSeries(-self.coeffs, self.inner, self.outer)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, LaurentSeries):
            coeffs = np.convolve(self.coeffs, other.coeffs)
            return LaurentSeries(coeffs, *self.intersect_validity(other))
        return LaurentSeries(self.coeffs * complex(other), self.inner, self.outer)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return LaurentSeries(self.coeffs / complex(scalar), self.inner, self.outer)

    def __call__(self, z):
        from utils.laurent import evaluate
        return evaluate(self, z)

    def __repr__(self):
        terms = ", ".join(f"{k}: {self.coeff(k):.6g}" for k in self.support(1e-14)[:6])
        return f"LaurentSeries(N={self.N}, {{{terms}}}, validity=({self.inner}, {self.outer}))"

    # Serialization

    def to_dict(self):
        """Convert series to dictionary for serialization"""
        return {
            'N': self.N,
            'inner': self.inner,
            'outer': _radius_to_json(self.outer),
            'coeffs': [[float(c.real), float(c.imag)] for c in self.coeffs],
        }

    @classmethod
    def from_dict(cls, data):
        """Create series from dictionary data"""
        try:
            N = int(data['N'])
            coeffs = [complex(float(re), float(im)) for re, im in data['coeffs']]
            inner = _radius_from_json(data.get('inner'), 0.0)
            outer = _radius_from_json(data.get('outer'), math.inf)
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"invalid series data: {e}") from e
        if len(coeffs) != 2 * N + 1:
            raise MalformedInputError(f"series with N={N} needs {2 * N + 1} coefficients, got {len(coeffs)}")
        return cls(coeffs, inner, outer)


class CircleSamples:
    """
    Uniform samples f(r e^{2 pi i j / M}) for j = 0..M-1
    """

    def __init__(self, radius, values):
        values = np.asarray(values, dtype=complex)
        if radius <= 0:
            raise DomainError(f"sampling radius must be positive, got {radius}")
        self.radius = float(radius)
        self.values = values

    @property
    def M(self):
        return self.values.size

    @property
    def angles(self):
        return 2 * np.pi * np.arange(self.M) / self.M

    @property
    def points(self):
        return self.radius * np.exp(1j * self.angles)
