#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Winding numbers, the annulus logarithm g = z^n exp(h) and the factorization
f = z^n g0(z) / conj(g0(1/conj z)) of functions unimodular on the unit circle
"""

import cmath
import logging

import numpy as np

import config
from models.errors import (DomainError, IllConditioned, NearZeroOnContour, NoNonvanishingAnnulus,
                           NonIntegerWinding, NotUnimodular, VanishingInAnnulus, WindingMismatch)
from models.laurent import CircleSamples, LaurentSeries
from models.results import FactorizationResult
from utils.laurent import (default_samples, differentiate, evaluate, exp_series, from_circle_samples,
                           inverted_validity, sample_circle)

logger = logging.getLogger(__name__)

RADIUS_GRID = 9  # circles s^t, t in [-1, 1], checked for zeros


def winding_number(f, r, M=None, vanish_tol=None, round_tol=None):
    """
    (1 / 2 pi i) times the integral of f'/f over |z| = r

    The trapezoidal rule on the circle gives the mean of z f'(z) / f(z).

    Args:
        f (LaurentSeries): Series
        r (float): Radius inside the validity annulus
        M (int, optional): Number of samples
        vanish_tol (float, optional): Smallest accepted |f| on the contour
        round_tol (float, optional): Largest accepted distance to an integer

    Returns:
        int: The winding number
    """
    vanish_tol = config.tolerance('vanish', vanish_tol)
    round_tol = config.tolerance('round', round_tol)
    M = M or default_samples(f.N + 1)
    samples = sample_circle(f, r, M)
    smallest = float(np.min(np.abs(samples.values)))
    if smallest <= vanish_tol:
        raise NearZeroOnContour(f"|f| = {smallest:.3e} on |z| = {r}")
    derivative = sample_circle(differentiate(f), r, M)
    integral = complex(np.mean(derivative.values * samples.points / samples.values))
    n = int(round(integral.real))
    distance = abs(integral - n)
    if distance > round_tol:
        raise NonIntegerWinding(f"winding integral {integral:.6g} on |z| = {r} is {distance:.3e} from {n}")
    return n


def check_nonvanishing(f, s, M=None):
    """
    Check that f has no zeros on 1/s <= |z| <= s

    Every circle s^t of a grid over t in [-1, 1] must keep |f| above the
    vanishing tolerance and carry the same winding number.

    Returns:
        int: The common winding number
    """
    windings = []
    for r in s ** np.linspace(-1.0, 1.0, RADIUS_GRID):
        if not f.contains_radius(r):
            raise DomainError(f"circle |z| = {r:.6g} leaves validity annulus ({f.inner}, {f.outer})")
        try:
            windings.append(winding_number(f, float(r), M))
        except NearZeroOnContour as e:
            raise VanishingInAnnulus(f"zero near |z| = {r:.6g}: {e}") from e
    if len(set(windings)) > 1:
        raise WindingMismatch(f"winding numbers {windings} across 1/{s:.6g} <= |z| <= {s:.6g}")
    return windings[0]


def residual_radii(s):
    """Radii 1, sqrt(s) and 1/sqrt(s)"""
    return (1.0, s ** 0.5, s ** -0.5)


def _circle_points(r, M):
    return r * np.exp(2j * np.pi * np.arange(M) / M)


def log_residual(g, n, h, s, M=None):
    """Largest relative error of z^n exp(h) against g over the test circles"""
    M = M or default_samples(max(g.N, h.N))
    worst = 0.0
    for r in residual_radii(s):
        z = _circle_points(r, M)
        target = evaluate(g, z)
        rebuilt = z ** n * np.exp(evaluate(h, z))
        worst = max(worst, float(np.max(np.abs(target - rebuilt)) / np.max(np.abs(target))))
    return worst


def annulus_log(g, s, N_out=None, M=None, tol=None):
    """
    Write g = z^n exp(h) on 1/s < |z| < s

    h' = (g/z^n)' / (g/z^n) is recovered on the unit circle and integrated
    termwise; the z^-1 term vanishes because g/z^n has winding 0. The
    constant is fixed by h(1) = Log g(1).

    Args:
        g (LaurentSeries): Series without zeros on the closed annulus
        s (float): Annulus parameter, s > 1
        N_out (int, optional): Degree bound of h, g.N by default
        M (int, optional): Samples on the unit circle
        tol (float, optional): Accepted relative reconstruction residual

    Returns:
        tuple: (n, h)
    """
    if s <= 1:
        raise DomainError(f"annulus parameter s must exceed 1, got {s}")
    tol = config.tolerance('log_residual', tol)
    n = check_nonvanishing(g, s)
    G = g.shifted(-n)
    N_out = g.N if N_out is None else N_out
    M = M or default_samples(max(G.N, N_out) + 1)

    values = sample_circle(G, 1.0, M).values
    slopes = sample_circle(differentiate(G), 1.0, M).values
    q = from_circle_samples(CircleSamples(1.0, slopes / values), N_out + 1)
    if abs(q.coeff(-1)) > tol:
        logger.warning(f"Logarithmic derivative keeps a z^-1 term {q.coeff(-1):.3e}")

    coeffs = np.zeros(2 * N_out + 1, dtype=complex)
    for k in range(-N_out, N_out + 1):
        if k != 0:
            coeffs[k + N_out] = q.coeff(k - 1) / k
    inner = max(g.inner, 1.0 / s)
    outer = min(g.outer, s)
    h = LaurentSeries(coeffs, inner, outer)
    h = h + (cmath.log(evaluate(g, 1.0)) - evaluate(h, 1.0))

    residual = log_residual(g, n, h, s, M)
    logger.debug(f"annulus_log: n = {n}, s = {s:.6g}, residual {residual:.3e}")
    if residual > tol:
        raise IllConditioned(f"z^{n} exp(h) misses g by {residual:.3e} (tolerance {tol:g}) on 1/{s:.6g} < |z| < {s:.6g}")
    return n, h


def laurent_split(h):
    """
    h = h_plus + h_minus

    h_plus keeps k >= 0 (constant included), h_minus keeps k < 0.
    """
    N = h.N
    plus = np.array(h.coeffs)
    minus = np.array(h.coeffs)
    plus[:N] = 0
    minus[N:] = 0
    return LaurentSeries(plus, h.inner, h.outer), LaurentSeries(minus, h.inner, h.outer)


def reflect(g):
    """conj(g(1/conj z)): a_k -> conj(a_k) at index -k"""
    return LaurentSeries(np.conj(g.coeffs[::-1]), *inverted_validity(g))


def unimodularity_defect(f, M=None):
    """sup over the unit circle of ||f| - 1|"""
    samples = sample_circle(f, 1.0, M or default_samples(f.N))
    return float(np.max(np.abs(np.abs(samples.values) - 1.0)))


def outer_certificate(g0, M=None, vanish_tol=None, rings=10):
    """
    Certify that a one-sided g0 has no zeros in the closed unit disc

    Winding 0 on the unit circle rules out zeros inside; the modulus is also
    checked on a grid of inner circles and at the origin.

    Returns:
        dict: winding, min_modulus and the outer flag
    """
    vanish_tol = config.tolerance('vanish', vanish_tol)
    M = M or default_samples(g0.N)
    winding = winding_number(g0, 1.0, M)
    smallest = abs(g0.coeff(0))
    for r in np.linspace(1.0, 0.0, rings, endpoint=False):
        if g0.contains_radius(r):
            smallest = min(smallest, float(np.min(np.abs(sample_circle(g0, float(r), M).values))))
    outer = winding == 0 and smallest > vanish_tol
    if not outer:
        logger.warning(f"Outer factor certificate failed: winding {winding}, min modulus {smallest:.3e}")
    return {'winding': winding, 'min_modulus': smallest, 'outer': bool(outer)}


def search_radii(f, R=None, s_hint=None):
    """Candidate s values: the hint, or R^(1 - j/16) for j = 0..14, inside f's validity"""
    if s_hint is not None:
        candidates = [float(s_hint)]
    else:
        R = R or config.DEFAULT_R
        candidates = [R ** (1.0 - j / config.S_GRID_STEPS) for j in range(config.S_GRID_LAST + 1)]
    return [s for s in candidates if s > 1 and f.contains_radius(s) and f.contains_radius(1.0 / s)]


def factor_unimodular(f, s_hint=None, R=None, uni_tol=None, M=None):
    """
    Factor f = z^n g0(z) / conj(g0(1/conj z)) for f unimodular on the unit circle

    The largest s of the search grid on which f is zero-free is used. With
    h = log(f / z^n) split as h_plus + h_minus, g0 = exp(h_plus - h_0/2) so
    that |g0(0)| = 1 and the quotient reproduces f exactly.

    Args:
        f (LaurentSeries): Series with |f| = 1 on the unit circle
        s_hint (float, optional): Use this s instead of searching
        R (float, optional): Outer radius of the search grid
        uni_tol (float, optional): Accepted unimodularity defect

    Returns:
        FactorizationResult: n, g0, s and residuals
    """
    uni_tol = config.tolerance('uni', uni_tol)
    defect = unimodularity_defect(f, M)
    if defect >= uni_tol:
        raise NotUnimodular(f"sup ||f| - 1| = {defect:.3e} on the unit circle (tolerance {uni_tol:g})")

    for s in search_radii(f, R, s_hint):
        try:
            n, h = annulus_log(f, s)
            break
        except (VanishingInAnnulus, WindingMismatch, NearZeroOnContour, NonIntegerWinding, IllConditioned) as e:
            logger.debug(f"s = {s:.6g} rejected: {e}")
    else:
        raise NoNonvanishingAnnulus("no annulus of the search grid is free of zeros")

    h_plus, _ = laurent_split(h)
    h0 = h.coeff(0)
    # one-sided, so g0 extends to the disc |z| < s
    g0 = exp_series(h_plus - h0 / 2).with_validity(0.0, h.outer)
    g0_reflected = reflect(g0)

    M = M or default_samples(max(f.N, g0.N))
    residual = 0.0
    unit_residual = 0.0
    for r in residual_radii(s):
        z = _circle_points(r, M)
        target = evaluate(f, z)
        rebuilt = z ** n * evaluate(g0, z) / evaluate(g0_reflected, z)
        error = float(np.max(np.abs(target - rebuilt)))
        residual = max(residual, error / float(np.max(np.abs(target))))
        if r == 1.0:
            unit_residual = error
    logger.info(f"Factored with n = {n}, s = {s:.6g}, residual {residual:.3e}")
    return FactorizationResult(n, g0, s, residual, unit_residual, defect, outer_certificate(g0, M))


def synthesize_unimodular(h_plus, n, N=128):
    """
    z^n exp(h_plus(z) - conj(h_plus(1/conj z))), unimodular on the unit circle

    Args:
        h_plus (LaurentSeries): One-sided polynomial
        n (int): Winding number
        N (int): Degree bound of the exponential before the shift

    Returns:
        LaurentSeries: The synthesized function
    """
    exponent = h_plus - reflect(h_plus)
    return exp_series(exponent, N).shifted(n)
