#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Exception classes shared by the toolkit

Each class carries the exit code the command line reports for it:
1 for malformed input, 2 for domain errors and 3 for numerical
certificates that could not be established.
"""


class AnnulusError(Exception):
    """Base class for every error raised by the toolkit"""

    exit_code = 2


class MalformedInputError(AnnulusError):
    """Input file or inline parameter does not parse against its schema"""

    exit_code = 1


class DomainError(AnnulusError):
    """Point, radius or parameter outside the region where it is defined"""


class UndefinedError(AnnulusError):
    """Quantity undefined for the given input (e.g. log of a zero maximum)"""


class TruncationError(AnnulusError):
    """Truncation too small for the requested operation"""


class SymbolNotInvertible(AnnulusError):
    """Composition symbol vanishes on the annulus"""


class NotUnimodular(AnnulusError):
    """Function is not unimodular on the unit circle"""


class VanishingInAnnulus(AnnulusError):
    """Function has a zero in the requested annulus"""


class WindingMismatch(AnnulusError):
    """Winding number changes between circles of the annulus"""


class NoNonvanishingAnnulus(AnnulusError):
    """No annulus of the search grid is free of zeros"""


class InconsistentPeriodClaim(AnnulusError):
    """Claimed order of beta does not match the computed one"""


class ZeroFunction(AnnulusError):
    """Operation requires a function that is not identically zero"""


class CertificateError(AnnulusError):
    """Numerical certificate could not be established"""

    exit_code = 3


class IllConditioned(CertificateError):
    """Circle recovery would amplify rounding beyond the dynamic-range bound"""


class NearZeroOnContour(CertificateError):
    """Function comes too close to zero on a winding contour"""


class NonIntegerWinding(CertificateError):
    """Winding integral is not close enough to an integer"""


class SmallDivisor(CertificateError):
    """Resolvent divisor below the accepted threshold"""

    def __init__(self, k, divisor):
        super().__init__(f"divisor |alpha beta^{k} - lambda| = {divisor:.3e} at index {k}")
        self.k = k
        self.divisor = divisor


class PrecisionExhausted(CertificateError):
    """Working precision cannot resolve the requested quantity"""


class IndeterminateVerdict(CertificateError):
    """Sampling resolution too coarse to decide"""


class ResolventVerificationError(CertificateError):
    """(T - lambda) f = g does not hold within tolerance"""
