#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Model classes for the annulus 1/R < |z| < R and its exhaustion
"""

from models.errors import DomainError


class ExhaustionLevel:
    """
    Closed annulus K_n = {1/R_n <= |z| <= R_n} with R_n = R^(1 - 1/n)
    """

    def __init__(self, n, R_n):
        self.n = n
        self.R_n = R_n

    @property
    def radii(self):
        """Boundary radii of K_n; K_1 is the unit circle"""
        if self.n == 1:
            return (1.0,)
        return (1.0 / self.R_n, self.R_n)

    def to_dict(self):
        return {'n': self.n, 'R_n': self.R_n}


class AnnulusDomain:
    """
    Class to represent the symmetric annulus 1/R < |z| < R
    """

    def __init__(self, R):
        """
        Initialize the annulus

        Args:
            R (float): Outer radius, strictly greater than 1
        """
        R = float(R)
        if not R > 1.0:
            raise DomainError(f"outer radius must exceed 1, got {R}")
        self.R = R

    @property
    def inner(self):
        return 1.0 / self.R

    def level(self, n):
        """
        Exhaustion level K_n

        Args:
            n (int): Level index, at least 1

        Returns:
            ExhaustionLevel: K_n with R_n = R^(1 - 1/n)
        """
        if n < 1:
            raise DomainError(f"exhaustion level must be at least 1, got {n}")
        return ExhaustionLevel(n, self.R ** (1.0 - 1.0 / n))

    def contains(self, z):
        return self.inner < abs(z) < self.R

    def to_dict(self):
        return {'R': self.R}
