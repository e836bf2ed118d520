#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Circle suprema, exhaustion seminorms and the Frechet distances on Hol(A)
"""

import logging

import numpy as np
from scipy.optimize import minimize_scalar

import config
from models.errors import DomainError
from utils.laurent import default_samples, differentiate, evaluate, sample_circle

logger = logging.getLogger(__name__)

METRIC_VARIANTS = ('bounded', 'ratio')


def exhaustion_radius(domain, n):
    """R_n = R^(1 - 1/n)"""
    return domain.level(n).R_n


def local_maxima(values):
    """Indices of cyclic local maxima of a sampled sequence"""
    left = np.roll(values, 1)
    right = np.roll(values, -1)
    return np.nonzero((values >= left) & (values >= right))[0]


def refine_peak(f, r, theta, step):
    """
    Golden-section refinement of |f(r e^{it})| around a sampled maximum

    Args:
        f (LaurentSeries): Series
        r (float): Circle radius
        theta (float): Sampled argmax angle
        step (float): Sample spacing used as the bracket half-width

    Returns:
        tuple: (angle, value); the sampled point when the bracket is flat
    """
    def objective(t):
        return -abs(evaluate(f, r * np.exp(1j * t)))

    try:
        result = minimize_scalar(objective, bracket=(theta - step, theta, theta + step), method='golden',
                                 options={'xtol': 1e-12, 'maxiter': config.GOLDEN_ITERATIONS})
    except ValueError:
        # Flat or not a strict local maximum
        return theta, -objective(theta)
    return float(np.mod(result.x, 2 * np.pi)), float(-result.fun)


def circle_sup(f, r, M=None, peaks=None):
    """
    Sup of |f| on the circle |z| = r

    The circle is sampled, then the largest sampled local maxima are refined
    by golden-section search.

    Args:
        f (LaurentSeries): Series
        r (float): Radius inside the validity annulus
        M (int, optional): Number of samples
        peaks (int, optional): Number of sampled maxima refined

    Returns:
        tuple: (sup, argmax angle, refinement error estimate (2 pi r/M)^2 sup|f'|)
    """
    M = M or default_samples(f.N)
    peaks = peaks or config.REFINED_PEAKS
    samples = sample_circle(f, r, M)
    modulus = np.abs(samples.values)
    step = 2 * np.pi / M

    best_theta = float(samples.angles[np.argmax(modulus)])
    best = float(np.max(modulus))
    candidates = local_maxima(modulus)
    candidates = candidates[modulus[candidates] >= config.PEAK_BAND * best]
    candidates = candidates[np.argsort(modulus[candidates])[::-1][:peaks]]
    for j in candidates:
        theta, value = refine_peak(f, r, float(samples.angles[j]), step)
        if value > best:
            best, best_theta = value, theta

    derivative = np.abs(sample_circle(differentiate(f), r, M).values)
    error = (step * r) ** 2 * float(np.max(derivative))
    return best, best_theta, error


def seminorm_with_error(f, domain, n, M=None):
    """
    ||f||_{inf,n} with the refinement error of the circle sups

    By the maximum principle the sup is taken on the two boundary circles.

    Args:
        f (LaurentSeries): Series
        domain (AnnulusDomain): Annulus
        n (int): Exhaustion level
        M (int, optional): Samples per circle

    Returns:
        tuple: (seminorm, largest refinement error over the boundary circles)
    """
    level = domain.level(n)
    inner, outer = min(level.radii), max(level.radii)
    if not (f.inner < inner and outer < f.outer):
        raise DomainError(f"K_{n} = [{inner:.6g}, {outer:.6g}] leaves validity annulus ({f.inner}, {f.outer})")
    sups = [circle_sup(f, r, M) for r in level.radii]
    return max(s[0] for s in sups), max(s[2] for s in sups)


def seminorm(f, domain, n, M=None):
    """||f||_{inf,n}: sup of |f| over K_n"""
    return seminorm_with_error(f, domain, n, M)[0]


def frechet_distance(f, g, domain, variant='bounded', k_max=None):
    """
    Frechet distance between f and g

    bounded: sum_k 2^-k min(1, ||f - g||_k)
    ratio:   sum_k 2^-k ||f - g||_k / (1 + ||f - g||_k)

    Args:
        f (LaurentSeries): First series
        g (LaurentSeries): Second series
        domain (AnnulusDomain): Annulus
        variant (str): 'bounded' or 'ratio'
        k_max (int, optional): Number of terms kept

    Returns:
        tuple: (partial sum, tail bound 2^-k_max)
    """
    if variant not in METRIC_VARIANTS:
        raise DomainError(f"unknown metric variant '{variant}'")
    k_max = k_max or config.DEFAULT_K_MAX
    if k_max < 1:
        raise DomainError(f"k_max must be at least 1, got {k_max}")
    diff = f - g
    total = 0.0
    for k in range(1, k_max + 1):
        s = seminorm(diff, domain, k)
        term = min(1.0, s) if variant == 'bounded' else s / (1.0 + s)
        total += term / 2 ** k
    return total, 2.0 ** -k_max
