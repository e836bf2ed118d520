#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Three-circle analysis: circle profiles, the Hadamard residual, maximum-modulus
sets and the rotation test
"""

import csv
import logging
import math

import numpy as np

import config
from models.errors import DomainError, UndefinedError
from models.results import CircleProfile, HadamardCheck, MaxSetVerdict, RotationVerdict
from utils.domain import circle_sup, refine_peak, local_maxima
from utils.laurent import default_samples, sample_circle

logger = logging.getLogger(__name__)


def _check_radius(f, r):
    if not f.contains_radius(r):
        raise DomainError(f"radius {r} outside validity annulus ({f.inner}, {f.outer})")


def _check_triple(f, r1, r2, r3):
    if not (r1 < r2 < r3):
        raise DomainError(f"radii must satisfy r1 < r2 < r3, got ({r1}, {r2}, {r3})")
    for r in (r1, r2, r3):
        _check_radius(f, r)


def _near_max_runs(mask):
    """
    Cyclic runs of True in a boolean mask

    Returns:
        list: (start, length) pairs
    """
    M = mask.size
    if mask.all():
        return [(0, M)]
    # Start scanning just after a False entry so no run wraps
    offset = int(np.argmin(mask)) + 1
    rolled = np.roll(mask, -offset)
    runs = []
    j = 0
    while j < M:
        if rolled[j]:
            start = j
            while j < M and rolled[j]:
                j += 1
            runs.append(((start + offset) % M, j - start))
        else:
            j += 1
    return runs


def _refined_maxima(f, r, samples, modulus, rho, tol_max):
    """Refined local maxima within tol_max of rho, as sorted angles"""
    step = 2 * np.pi / samples.M
    candidates = local_maxima(modulus)
    order = np.argsort(modulus[candidates])[::-1][:config.CLUSTER_CAP + 1]
    points = []
    for j in candidates[order]:
        theta, value = refine_peak(f, r, float(samples.angles[j]), step)
        if value >= rho * (1 - tol_max):
            points.append(theta)
    points = sorted(points)
    # Merge peaks reached from neighbouring samples
    merged = []
    for theta in points:
        if merged and abs(theta - merged[-1]) < step:
            continue
        merged.append(theta)
    if len(merged) > 1 and (merged[0] + 2 * np.pi - merged[-1]) < step:
        merged.pop()
    return merged


def circle_profile(f, r, M=None, tol_max=None):
    """
    M(r) = sup |f| on |z| = r with the angles where it is attained

    Args:
        f (LaurentSeries): Series
        r (float): Radius inside the validity annulus
        M (int, optional): Samples on the circle
        tol_max (float, optional): Relative band counted as attaining the sup

    Returns:
        CircleProfile: The profile
    """
    _check_radius(f, r)
    tol_max = config.tolerance('tol_max', tol_max)
    M = M or default_samples(f.N)
    rho, _, error = circle_sup(f, r, M)
    samples = sample_circle(f, r, M)
    modulus = np.abs(samples.values)
    if rho > 0 and np.all(modulus >= rho * (1 - tol_max)):
        return CircleProfile(r, rho, [], error, full_circle=True)
    points = _refined_maxima(f, r, samples, modulus, rho, tol_max) if rho > 0 else []
    return CircleProfile(r, rho, points, error)


def profile_series(f, radii, M=None):
    """Circle profiles for a list of radii"""
    return [circle_profile(f, r, M) for r in radii]


def write_profile_csv(profiles, path):
    """
    Export (r, M(r)) profiles

    Columns: radius, sup_modulus, log_radius, log_sup
    """
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle)
        writer.writerow(['radius', 'sup_modulus', 'log_radius', 'log_sup'])
        for profile in profiles:
            log_sup = math.log(profile.sup) if profile.sup > 0 else float('-inf')
            writer.writerow([repr(profile.radius), repr(profile.sup), repr(math.log(profile.radius)), repr(log_sup)])
    logger.info(f"Wrote {len(profiles)} circle profiles to {path}")


def hadamard_residual(f, r1, r2, r3, M=None, tol_eq=None, snap=None):
    """
    Residual of the three-circle inequality

    residual = log(r3/r2) log M(r1) + log(r2/r1) log M(r3) - log(r3/r1) log M(r2)

    Equality holds exactly for monomials c z^n; equality_flag requires both a
    residual below tol_eq and exactly one coefficient above the zero-snap
    threshold.

    Args:
        f (LaurentSeries): Series
        r1, r2, r3 (float): Ordered radii inside the validity annulus

    Returns:
        HadamardCheck: Residual and equality data
    """
    _check_triple(f, r1, r2, r3)
    tol_eq = config.tolerance('tol_eq', tol_eq)
    snap = config.tolerance('zero_snap', snap)
    circles = [circle_sup(f, r, M) for r in (r1, r2, r3)]
    sups = [c[0] for c in circles]
    if min(sups) <= 0:
        raise UndefinedError("M(r) vanishes on a circle: the series is identically zero")
    m1, m2, m3 = (math.log(s) for s in sups)
    residual = (math.log(r3 / r2) * m1 + math.log(r2 / r1) * m3) - math.log(r3 / r1) * m2
    near_equality = abs(residual) < tol_eq
    is_monomial = len(f.support(snap)) == 1
    if is_monomial and not near_equality:
        logger.warning(f"Monomial with Hadamard residual {residual:.3e} above {tol_eq:g}")
    return HadamardCheck((r1, r2, r3), sups, residual, near_equality and is_monomial, near_equality, is_monomial,
                         sup_errors=[c[2] for c in circles])


def max_modulus_set(f, r, M=None, tol_max=None):
    """
    Classify {z in rT : |f(z)| = M(r)} as the full circle or a finite set

    Args:
        f (LaurentSeries): Series, not identically zero
        r (float): Radius inside the validity annulus
        M (int, optional): Samples on the circle
        tol_max (float, optional): Relative band counted as attaining the sup

    Returns:
        MaxSetVerdict: FullCircle, Finite(points) or Indeterminate
    """
    _check_radius(f, r)
    if f.is_zero():
        raise UndefinedError("maximum-modulus set of the zero series")
    tol_max = config.tolerance('tol_max', tol_max)
    M = M or default_samples(f.N)
    rho = circle_sup(f, r, M)[0]
    samples = sample_circle(f, r, M)
    modulus = np.abs(samples.values)
    near = modulus >= rho * (1 - tol_max)
    evidence = float(np.mean(near))
    if near.all():
        return MaxSetVerdict(MaxSetVerdict.FULL_CIRCLE, evidence=evidence)

    runs = _near_max_runs(near)
    if len(runs) > config.CLUSTER_CAP:
        return MaxSetVerdict(MaxSetVerdict.INDETERMINATE, evidence=evidence,
                             reason=f"{len(runs)} near-maximum clusters exceed the cap {config.CLUSTER_CAP}")
    widest = max((length for _, length in runs), default=0)
    if widest > config.CLUSTER_WIDTH:
        return MaxSetVerdict(MaxSetVerdict.INDETERMINATE, evidence=evidence,
                             reason=f"near-maximum arc spans {widest} samples (limit {config.CLUSTER_WIDTH})")

    points = _refined_maxima(f, r, samples, modulus, rho, tol_max)
    if not points or len(points) > config.CLUSTER_CAP:
        return MaxSetVerdict(MaxSetVerdict.INDETERMINATE, evidence=evidence,
                             reason=f"{len(points)} refined maxima")
    return MaxSetVerdict(MaxSetVerdict.FINITE, points=points, evidence=evidence)


def three_circle_rotation_test(f, r1, r2, r3, M=None, tol=None, snap=None):
    """
    Decide whether f maps the three circles r_j T into themselves, in which
    case f must be a rotation c z with |c| = 1

    Args:
        f (LaurentSeries): Series
        r1, r2, r3 (float): Ordered radii inside the validity annulus

    Returns:
        RotationVerdict: IsRotation(c) or No(witness)
    """
    _check_triple(f, r1, r2, r3)
    tol = config.tolerance('rotation', tol)
    snap = config.tolerance('zero_snap', snap)
    M = M or default_samples(f.N)
    for j, r in enumerate((r1, r2, r3), start=1):
        samples = sample_circle(f, r, M)
        violating = np.nonzero(np.abs(np.abs(samples.values) - r) >= tol)[0]
        if violating.size:
            first = int(violating[0])
            z = samples.points[first]
            witness = {
                'circle': j,
                'radius': r,
                'z': [float(z.real), float(z.imag)],
                'modulus': float(abs(samples.values[first])),
            }
            return RotationVerdict(False, witness=witness)

    support = f.support(snap)
    c = f.coeff(1)
    if support != [1] or abs(abs(c) - 1) >= tol:
        # The circles are preserved at sample resolution but the coefficients disagree
        witness = {'circle': None, 'support': support, 'c1': [c.real, c.imag]}
        logger.warning(f"Circle hypothesis holds at samples but support is {support}")
        return RotationVerdict(False, witness=witness)
    return RotationVerdict(True, constant=c)
