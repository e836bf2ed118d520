#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Evaluation, arithmetic and circle sampling of truncated Laurent series
"""

import logging
import math

import numpy as np

import config
from models.errors import DomainError, IllConditioned, VanishingInAnnulus, ZeroFunction
from models.laurent import CircleSamples, LaurentSeries

logger = logging.getLogger(__name__)


def default_samples(N):
    """
    Number of samples per circle for a series of degree bound N

    Returns:
        int: 4(2N+1) rounded up to a power of two, at least config.MIN_SAMPLES
    """
    target = 4 * (2 * N + 1)
    return max(config.MIN_SAMPLES, 1 << (target - 1).bit_length())


def _check_radius(f, r):
    if not f.contains_radius(r):
        raise DomainError(f"radius {r} outside validity annulus ({f.inner}, {f.outer})")


def evaluate(f, z):
    """
    Two-sided Horner evaluation of f at z

    The nonnegative part is evaluated at z and the negative part at 1/z.

    Args:
        f (LaurentSeries): Series to evaluate
        z (complex or array): Points strictly inside the validity annulus

    Returns:
        complex or ndarray: f(z)
    """
    z = np.asarray(z, dtype=complex)
    modulus = np.abs(z)
    if np.any(modulus <= f.inner) or np.any(modulus >= f.outer):
        raise DomainError(f"evaluation point outside validity annulus ({f.inner}, {f.outer})")
    N = f.N
    # np.polyval wants the leading coefficient first
    value = np.polyval(f.coeffs[N:][::-1], z)
    if N > 0:
        w = 1.0 / z
        value = value + w * np.polyval(f.coeffs[:N], w)
    if value.ndim == 0:
        return complex(value)
    return value


def multiply(f, g):
    """Coefficient convolution; degree bounds add and validity annuli intersect"""
    return f * g


def differentiate(f):
    """
    Termwise derivative

    Coefficient k a_k moves to index k - 1, so the degree bound grows by one.
    """
    N = f.N
    out = np.zeros(2 * N + 3, dtype=complex)
    out[:2 * N + 1] = f.indices * f.coeffs
    return LaurentSeries(out, f.inner, f.outer)


def power(f, n):
    """
    Integer power of a series

    Negative powers go through reciprocal(), which needs f free of zeros
    near the unit circle.
    """
    if n < 0:
        return power(reciprocal(f), -n)
    result = LaurentSeries.monomial(0).with_validity(f.inner, f.outer)
    base = f
    while n:
        if n & 1:
            result = result * base
        n >>= 1
        if n:
            base = base * base
    return result


def sample_circle(f, r, M=None):
    """
    Sample f at M equispaced points of the circle |z| = r

    Args:
        f (LaurentSeries): Series to sample
        r (float): Circle radius inside the validity annulus
        M (int, optional): Number of samples, default_samples(f.N) when omitted

    Returns:
        CircleSamples: values f(r e^{2 pi i j/M})
    """
    _check_radius(f, r)
    M = M or default_samples(f.N)
    spectrum = np.zeros(M, dtype=complex)
    ks = f.indices
    np.add.at(spectrum, ks % M, f.coeffs * np.power(float(r), ks.astype(float)))
    return CircleSamples(r, M * np.fft.ifft(spectrum))


def from_circle_samples(samples, N, inner=0.0, outer=math.inf, snap=None, dynamic_range=None):
    """
    Recover a_k for |k| <= N from samples on one circle

    The k-th DFT coefficient of the samples is a_k r^k plus aliased tail terms.

    Args:
        samples (CircleSamples): Samples on |z| = r
        N (int): Degree bound to recover
        inner (float): Inner radius assigned to the result
        outer (float): Outer radius assigned to the result
        snap (float, optional): Zero-snap threshold
        dynamic_range (float, optional): Largest accepted r^N or r^-N

    Returns:
        LaurentSeries: Recovered coefficients
    """
    M = samples.M
    r = samples.radius
    if M < 2 * (2 * N + 1):
        raise DomainError(f"{M} samples cannot recover degree {N}; need at least {2 * (2 * N + 1)}")
    dynamic_range = config.tolerance('dynamic_range', dynamic_range)
    amplification = max(r ** N, r ** -N)
    if amplification > dynamic_range:
        raise IllConditioned(f"recovery on radius {r} amplifies by {amplification:.3e} (bound {dynamic_range:.1e})")

    fourier = np.fft.fft(samples.values) / M
    ks = np.arange(-N, N + 1)
    coeffs = fourier[ks % M] / np.power(r, ks.astype(float))
    snap = config.tolerance('zero_snap', snap)
    small = np.abs(coeffs) < snap
    if np.any(small & (coeffs != 0)):
        logger.debug(f"Snapped {int(np.sum(small & (coeffs != 0)))} coefficients below {snap:g} to zero")
    coeffs[small] = 0
    return LaurentSeries(coeffs, inner, outer)


def second_radius(N, inner=0.0, outer=math.inf):
    """
    A radius above 1 inside (inner, outer) whose N-th power stays below 10^4
    """
    radius = min(1.25, 10.0 ** (4.0 / max(N, 1)))
    if not math.isinf(outer):
        radius = min(radius, 1.0 + (outer - 1.0) / 2)
    return radius


def from_function(func, N, radii=None, M=None, inner=0.0, outer=math.inf):
    """
    Laurent coefficients of a callable holomorphic near the unit circle

    The function is sampled on two circles. The first radius supplies the
    coefficients; the disagreement between the two recoveries estimates the
    truncation error.

    Args:
        func (callable): Vectorized function of z
        N (int): Degree bound to recover
        radii (tuple, optional): Two sampling radii, (1, second_radius(N)) by default
        M (int, optional): Samples per circle
        inner (float): Inner radius assigned to the result
        outer (float): Outer radius assigned to the result

    Returns:
        tuple: (LaurentSeries, truncation_estimate)
    """
    M = M or default_samples(N)
    radii = radii or (1.0, second_radius(N, inner, outer))
    recoveries = []
    for r in radii:
        points = r * np.exp(2j * np.pi * np.arange(M) / M)
        values = np.asarray(func(points), dtype=complex)
        recoveries.append(from_circle_samples(CircleSamples(r, values), N, inner, outer))
    estimate = float(np.max(np.abs(recoveries[0].coeffs - recoveries[-1].coeffs)))
    logger.debug(f"Recovered degree {N} from radii {radii}; truncation estimate {estimate:.3e}")
    return recoveries[0], estimate


def reciprocal(f, N_out=None, M=None, vanish_tol=None):
    """
    Laurent expansion of 1/f on the zero-free annulus around the unit circle

    Args:
        f (LaurentSeries): Series without zeros on the unit circle
        N_out (int, optional): Degree bound of the result, f.N by default
        M (int, optional): Samples on the unit circle

    Returns:
        LaurentSeries: 1/f with f's validity annulus
    """
    vanish_tol = config.tolerance('vanish', vanish_tol)
    if f.is_zero():
        raise ZeroFunction("reciprocal of the zero series")
    N_out = f.N if N_out is None else N_out
    M = M or default_samples(max(N_out, f.N))
    samples = sample_circle(f, 1.0, M)
    if np.min(np.abs(samples.values)) <= vanish_tol:
        raise VanishingInAnnulus("series vanishes on the unit circle; no reciprocal")
    return from_circle_samples(CircleSamples(1.0, 1.0 / samples.values), N_out, f.inner, f.outer)


def exp_series(h, N_out=None):
    """
    Coefficients of exp(h)

    One-sided input (no negative indices) uses the recurrence from
    y' = h' y: m y_m = sum_{j=1}^{m} j h_j y_{m-j}, y_0 = exp(h_0).
    Two-sided input is sampled and recovered.

    Args:
        h (LaurentSeries): Exponent
        N_out (int, optional): Degree bound of the result, h.N by default

    Returns:
        LaurentSeries: exp(h)
    """
    N_out = h.N if N_out is None else N_out
    if any(k < 0 for k in h.support()):
        result, _ = from_function(lambda z: np.exp(evaluate(h, z)), N_out, inner=h.inner, outer=h.outer)
        return result

    hk = np.array([h.coeff(k) for k in range(N_out + 1)])
    jh = np.arange(N_out + 1) * hk
    y = np.zeros(N_out + 1, dtype=complex)
    y[0] = np.exp(hk[0])
    for m in range(1, N_out + 1):
        y[m] = np.dot(jh[1:m + 1], y[m - 1::-1]) / m
    coeffs = np.concatenate([np.zeros(N_out, dtype=complex), y])
    return LaurentSeries(coeffs, h.inner, h.outer)


def inverted_validity(f):
    """Validity annulus of f(1/z): (1/outer, 1/inner)"""
    inner = 0.0 if math.isinf(f.outer) else 1.0 / f.outer
    outer = math.inf if f.inner == 0 else 1.0 / f.inner
    return inner, outer


def random_polynomial(rng, degree, N=None, one_sided=False):
    """
    Laurent polynomial with coefficients uniform in the unit disc

    Args:
        rng (numpy.random.Generator): Source of randomness
        degree (int): Largest |k| carrying a coefficient
        N (int, optional): Degree bound of the result
        one_sided (bool): Keep only k >= 0

    Returns:
        LaurentSeries: The polynomial
    """
    N = degree if N is None else N
    size = 2 * degree + 1
    coeffs = np.sqrt(rng.random(size)) * np.exp(2j * np.pi * rng.random(size))
    if one_sided:
        coeffs[:degree] = 0
    return LaurentSeries(coeffs).padded(N)


def blaschke_factor(a, N):
    """
    Taylor truncation of (z - a)/(1 - conj(a) z)

    The validity radius is where the dropped tail falls below the zero-snap
    threshold.

    Args:
        a (complex): Zero inside the unit disc
        N (int): Degree bound

    Returns:
        LaurentSeries: One-sided series with outer radius about 10^(-14/N)/|a|
    """
    a = complex(a)
    if abs(a) >= 1:
        raise DomainError(f"Blaschke zero {a} must lie in the unit disc")
    coeffs = np.zeros(2 * N + 1, dtype=complex)
    coeffs[N] = -a
    ac = a.conjugate()
    for m in range(1, N + 1):
        coeffs[N + m] = ac ** (m - 1) * (1 - abs(a) ** 2)
    if abs(a) == 0:
        return LaurentSeries(coeffs)
    outer = config.TOLERANCES['zero_snap'] ** (1.0 / N) / abs(a)
    if outer <= 1.0:
        raise DomainError(f"degree {N} too small to represent the Blaschke factor past the unit circle")
    return LaurentSeries(coeffs, 0.0, outer)


def exp_z_minus_inv_z(N):
    """
    exp(z - 1/z) recovered from circle samples

    Its coefficients are the Bessel values J_k(2).
    """
    series, estimate = from_function(lambda z: np.exp(z - 1.0 / z), N)
    logger.debug(f"exp(z - 1/z) truncation estimate {estimate:.3e}")
    return series
