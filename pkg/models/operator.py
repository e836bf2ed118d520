#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Model classes for weighted composition operators and operator matrices
"""

import math
from enum import Enum

import numpy as np

import config
from models.errors import DomainError, MalformedInputError, TruncationError
from models.laurent import LaurentSeries


def _complex_pair(value):
    return [float(complex(value).real), float(complex(value).imag)]


def _parse_complex(value):
    if isinstance(value, (list, tuple)) and len(value) == 2:
        return complex(float(value[0]), float(value[1]))
    return complex(value)


class Kind(Enum):
    """Symbol of a weighted composition: z -> beta z or z -> beta / z"""

    ROTATION = 'Rotation'
    INVERSION = 'Inversion'


class WeightedComposition:
    """
    T(f)(z) = alpha f(beta z) or S(f)(z) = alpha f(beta / z) with |alpha| = |beta| = 1
    """

    def __init__(self, kind, alpha, beta, tol=None):
        """
        Initialize the operator

        Args:
            kind (Kind): Rotation or Inversion
            alpha (complex): Unimodular weight
            beta (complex): Unimodular symbol parameter
            tol (float, optional): Unimodularity tolerance
        """
        tol = config.tolerance('unimodular', tol)
        alpha = complex(alpha)
        beta = complex(beta)
        for name, value in (('alpha', alpha), ('beta', beta)):
            if abs(abs(value) - 1) >= tol:
                raise DomainError(f"{name} = {value} is not unimodular (||{name}| - 1| = {abs(abs(value) - 1):.3e})")
        self.kind = Kind(kind)
        self.alpha = alpha
        self.beta = beta

    @classmethod
    def rotation(cls, alpha, beta):
        return cls(Kind.ROTATION, alpha, beta)

    @classmethod
    def inversion(cls, alpha, beta):
        return cls(Kind.INVERSION, alpha, beta)

    def compose(self, other):
        """
        The operator self o other

        T_{a,b} T_{a',b'} = T_{aa', bb'}, T_{a,b} S_{a',b'} = S_{aa', b'/b},
        S_{a,b} T_{a',b'} = S_{aa', bb'}, S_{a,b} S_{a',b'} = T_{aa', b'/b}
        """
        alpha = self.alpha * other.alpha
        if self.kind is Kind.ROTATION and other.kind is Kind.ROTATION:
            return WeightedComposition(Kind.ROTATION, alpha, self.beta * other.beta)
        if self.kind is Kind.ROTATION:
            return WeightedComposition(Kind.INVERSION, alpha, other.beta / self.beta)
        if other.kind is Kind.ROTATION:
            return WeightedComposition(Kind.INVERSION, alpha, self.beta * other.beta)
        return WeightedComposition(Kind.ROTATION, alpha, other.beta / self.beta)

    def __repr__(self):
        letter = 'T' if self.kind is Kind.ROTATION else 'S'
        return f"{letter}(alpha={self.alpha:.6g}, beta={self.beta:.6g})"

    def to_dict(self):
        return {
            'kind': self.kind.value,
            'alpha': _complex_pair(self.alpha),
            'beta': _complex_pair(self.beta),
        }

    @classmethod
    def from_dict(cls, data):
        try:
            return cls(data['kind'], _parse_complex(data['alpha']), _parse_complex(data['beta']))
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"invalid operator data: {e}") from e


class OperatorMatrix:
    """
    Matrix of a linear operator on coefficient vectors indexed -N..N

    Column k + N holds the coefficients of the image of e_k. The matrix is
    trusted only on inputs of degree at most n_trust.
    """

    def __init__(self, entries, n_trust=None):
        """
        Args:
            entries (array-like): (2N+1) x (2N+1) complex matrix
            n_trust (int, optional): Trusted input degree, N // 2 by default
        """
        entries = np.array(entries, dtype=complex)
        if entries.ndim != 2 or entries.shape[0] != entries.shape[1] or entries.shape[0] % 2 == 0:
            raise MalformedInputError(f"operator matrix must be square of odd size, got shape {entries.shape}")
        if not np.all(np.isfinite(entries)):
            raise MalformedInputError("operator matrix entries must be finite")
        entries.setflags(write=False)
        self.entries = entries
        self.n_trust = self.N // 2 if n_trust is None else int(n_trust)
        if not 0 <= self.n_trust <= self.N:
            raise MalformedInputError(f"trusted degree {self.n_trust} outside [0, {self.N}]")

    @property
    def N(self):
        return (self.entries.shape[0] - 1) // 2

    def column(self, k):
        """Image of the basis vector e_k"""
        if abs(k) > self.N:
            raise TruncationError(f"basis index {k} outside the matrix range |k| <= {self.N}")
        return LaurentSeries(self.entries[:, k + self.N])

    def apply(self, f):
        """
        Apply the matrix to a series of degree at most N

        The image gets the symmetric part of f's validity annulus.
        """
        if any(abs(k) > self.N for k in f.support()):
            raise TruncationError(f"input degree {f.N} exceeds matrix size {self.N}")
        f = f.truncated(self.N)
        coeffs = self.entries @ f.padded(self.N).coeffs
        rho = min(f.outer, 1.0 / f.inner if f.inner > 0 else math.inf)
        return LaurentSeries(coeffs, 1.0 / rho, rho)

    def __matmul__(self, other):
        if self.N != other.N:
            raise DomainError(f"cannot compose matrices of sizes {self.N} and {other.N}")
        return OperatorMatrix(self.entries @ other.entries, min(self.n_trust, other.n_trust))

    def to_dict(self):
        return {
            'N': self.N,
            'n_trust': self.n_trust,
            'entries': [[_complex_pair(v) for v in row] for row in self.entries],
        }

    @classmethod
    def from_dict(cls, data):
        try:
            N = int(data['N'])
            rows = [[_parse_complex(v) for v in row] for row in data['entries']]
        except (KeyError, TypeError, ValueError) as e:
            raise MalformedInputError(f"invalid operator matrix: {e}") from e
        if len(rows) != 2 * N + 1 or any(len(row) != 2 * N + 1 for row in rows):
            raise MalformedInputError(f"matrix with N={N} must be {2 * N + 1} x {2 * N + 1}")
        return cls(rows, data.get('n_trust'))


class CompositionVerdict:
    """Yes(symbol) when M e_n = (M e_1)^n on the tested range, otherwise No(first failing n)"""

    def __init__(self, is_composition, symbol=None, failing_n=None, deviation=0.0, tested=None):
        self.is_composition = is_composition
        self.symbol = symbol
        self.failing_n = failing_n
        self.deviation = deviation
        self.tested = tested or []

    def to_dict(self):
        return {
            'verdict': 'Yes' if self.is_composition else 'No',
            'symbol': self.symbol.to_dict() if self.symbol is not None else None,
            'first_failing_n': self.failing_n,
            'deviation': self.deviation,
            'tested': list(self.tested),
        }


class ClassificationResult:
    """
    Verdict of the isometry classifier: Rotation(alpha, beta),
    Inversion(alpha, beta) or NotIsometry(witness)
    """

    NOT_ISOMETRY = 'NotIsometry'

    def __init__(self, verdict, alpha=None, beta=None, witness=None, checks=None):
        self.verdict = verdict
        self.alpha = alpha
        self.beta = beta
        self.witness = witness
        self.checks = checks or {}

    @property
    def is_isometry(self):
        return self.verdict != self.NOT_ISOMETRY

    @property
    def kind(self):
        return Kind(self.verdict) if self.is_isometry else None

    def to_dict(self):
        return {
            'verdict': self.verdict,
            'alpha': _complex_pair(self.alpha) if self.alpha is not None else None,
            'beta': _complex_pair(self.beta) if self.beta is not None else None,
            'witness': self.witness,
            'checks': self.checks,
        }
