#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Weighted composition operators, operator matrices, the composition-operator
test and the isometry classifier
"""

import logging

import numpy as np

import config
from models.domain import AnnulusDomain
from models.errors import (DomainError, NearZeroOnContour, NonIntegerWinding, SymbolNotInvertible,
                           TruncationError, VanishingInAnnulus, WindingMismatch)
from models.laurent import LaurentSeries
from models.operator import ClassificationResult, CompositionVerdict, Kind, OperatorMatrix, WeightedComposition
from utils.domain import seminorm
from utils.factorization import check_nonvanishing
from utils.laurent import inverted_validity, power, random_polynomial, reciprocal

logger = logging.getLogger(__name__)


def apply_weighted_composition(op, f):
    """
    Exact coefficient action of T or S

    Rotation: a_k -> alpha beta^k a_k at index k.
    Inversion: a_k -> alpha beta^k a_k at index -k.
    """
    scaled = op.alpha * np.power(op.beta, f.indices) * f.coeffs
    if op.kind is Kind.ROTATION:
        return LaurentSeries(scaled, f.inner, f.outer)
    return LaurentSeries(scaled[::-1], *inverted_validity(f))


def operator_matrix(op, N, n_trust=None):
    """Matrix of a weighted composition on the basis e_{-N}..e_N"""
    columns = [apply_weighted_composition(op, LaurentSeries.monomial(k, N=N)).coeffs for k in range(-N, N + 1)]
    return OperatorMatrix(np.column_stack(columns), n_trust)


def identity_matrix(N, n_trust=None):
    return OperatorMatrix(np.eye(2 * N + 1, dtype=complex), n_trust)


def differentiation_matrix(N, n_trust=None):
    """f -> f'; the image of e_-N falls outside the basis and is dropped"""
    entries = np.zeros((2 * N + 1, 2 * N + 1), dtype=complex)
    for k in range(-N + 1, N + 1):
        entries[k - 1 + N, k + N] = k
    return OperatorMatrix(entries, n_trust)


def dilation_matrix(rho, N, n_trust=None):
    """f(z) -> f(rho z)"""
    ks = np.arange(-N, N + 1)
    return OperatorMatrix(np.diag(np.power(complex(rho), ks)), n_trust)


def _deviation(image, target):
    N = max(image.N, target.N)
    return float(np.max(np.abs(image.padded(N).coeffs - target.padded(N).coeffs)))


def _check_symbol_invertible(phi, domain):
    """phi must have no zeros on the annulus before negative powers are formed"""
    s = domain.R ** (1.0 - 1.0 / config.S_GRID_STEPS)
    try:
        check_nonvanishing(phi, s)
    except (VanishingInAnnulus, WindingMismatch, NearZeroOnContour, NonIntegerWinding, DomainError) as e:
        raise SymbolNotInvertible(f"symbol vanishes on the annulus: {e}") from e


def composition_operator_test(matrix, n_max=None, tol=None, domain=None):
    """
    Test M e_n = (M e_1)^n

    The order is n = 1..n_max, then n = 0 (M e_0 = e_0), then the negative
    powers, which need a reciprocal of the symbol phi = M e_1.

    Args:
        matrix (OperatorMatrix): Operator
        n_max (int, optional): Largest |n| tested, matrix.n_trust by default
        tol (float, optional): Coefficientwise tolerance
        domain (AnnulusDomain, optional): Annulus on which phi must not vanish

    Returns:
        CompositionVerdict: Yes(symbol) or No(first failing n)
    """
    tol = config.tolerance('composition', tol)
    n_max = matrix.n_trust if n_max is None else n_max
    if n_max > matrix.n_trust:
        raise TruncationError(f"n_max = {n_max} exceeds the trusted degree {matrix.n_trust}")
    domain = domain or AnnulusDomain(config.DEFAULT_R)
    phi = matrix.column(1).snapped(config.TOLERANCES['zero_snap']).trimmed()

    tested = []
    order = list(range(1, n_max + 1)) + [0]
    for n in order:
        target = power(phi, n)
        deviation = _deviation(matrix.column(n), target)
        tested.append(n)
        if deviation > tol:
            logger.info(f"Composition test fails at n = {n} (deviation {deviation:.3e})")
            return CompositionVerdict(False, failing_n=n, deviation=deviation, tested=tested)

    _check_symbol_invertible(phi, domain)
    inverse = reciprocal(phi, N_out=max(matrix.N, phi.N))
    for n in range(1, n_max + 1):
        target = power(inverse, n)
        deviation = _deviation(matrix.column(-n), target)
        tested.append(-n)
        if deviation > tol:
            logger.info(f"Composition test fails at n = {-n} (deviation {deviation:.3e})")
            return CompositionVerdict(False, failing_n=-n, deviation=deviation, tested=tested)
    return CompositionVerdict(True, symbol=phi, tested=tested)


def _not_isometry(witness, checks):
    logger.info(f"Not an isometry: {witness}")
    return ClassificationResult(ClassificationResult.NOT_ISOMETRY, witness=witness, checks=checks)


def isometry_classify(matrix, domain, n_levels=4, probes=8, tol=None, seed=None):
    """
    Decide whether a matrix is T_{alpha,beta} or S_{alpha,beta}

    Step 1: M e_0 is a unimodular constant alpha.
    Step 2: M e_1 = c e_1 or c e_-1 with |c| = 1; this fixes the kind and beta = c / alpha.
    Step 3: M e_k = alpha beta^k e_{+-k} for |k| <= n_trust.
    Step 4: ||M f||_{inf,n} = ||f||_{inf,n} for random probes and n = 1..n_levels.

    Args:
        matrix (OperatorMatrix): Operator
        domain (AnnulusDomain): Annulus
        n_levels (int): Exhaustion levels checked, at least 4
        probes (int): Number of random probe polynomials
        tol (float, optional): Structural and relative seminorm tolerance
        seed (int, optional): Probe seed

    Returns:
        ClassificationResult: Rotation, Inversion or NotIsometry with a witness
    """
    tol = config.tolerance('classify', tol)
    snap = config.TOLERANCES['zero_snap']
    if matrix.n_trust < 4:
        raise TruncationError(f"trusted degree {matrix.n_trust} is below 4")
    if n_levels < 4:
        raise DomainError(f"n_levels must be at least 4, got {n_levels}")
    checks = {'n_trust': matrix.n_trust, 'n_levels': n_levels, 'probes': probes}

    # Step 1
    f0 = matrix.column(0).snapped(snap)
    alpha = f0.coeff(0)
    if f0.support() != [0] or abs(abs(alpha) - 1) >= tol:
        witness = {
            'step': 1,
            'probe': 'e0',
            'level': 1,
            'image_seminorm': seminorm(f0, domain, 1),
            'seminorm': 1.0,
            'support': f0.support(),
        }
        return _not_isometry(witness, checks)

    # Step 2
    f1 = matrix.column(1).snapped(snap)
    support = f1.support()
    if support == [1]:
        kind, c1 = Kind.ROTATION, f1.coeff(1)
    elif support == [-1]:
        kind, c1 = Kind.INVERSION, f1.coeff(-1)
    else:
        reason = 'mixture of e1 and e-1' if 1 in support and -1 in support else 'not a multiple of e1 or e-1'
        return _not_isometry({'step': 2, 'index': 1, 'support': support, 'reason': reason}, checks)
    if abs(abs(c1) - 1) >= tol:
        witness = {
            'step': 2,
            'probe': 'e1',
            'level': 1,
            'image_seminorm': seminorm(f1, domain, 1),
            'seminorm': 1.0,
            'c1': [c1.real, c1.imag],
        }
        return _not_isometry(witness, checks)
    beta = c1 / alpha
    op = WeightedComposition(kind, alpha, beta, tol=tol)

    # Step 3
    for k in range(-matrix.n_trust, matrix.n_trust + 1):
        expected = apply_weighted_composition(op, LaurentSeries.monomial(k, N=matrix.N))
        deviation = _deviation(matrix.column(k), expected)
        if deviation >= tol:
            return _not_isometry({'step': 3, 'index': k, 'deviation': deviation}, checks)

    # Step 4
    rng = np.random.default_rng(config.DEFAULT_SEED if seed is None else seed)
    for p in range(probes):
        f = random_polynomial(rng, matrix.n_trust)
        image = matrix.apply(f)
        for n in range(1, n_levels + 1):
            expected = seminorm(f, domain, n)
            found = seminorm(image, domain, n)
            if abs(found - expected) > tol * expected:
                witness = {
                    'step': 4,
                    'probe': p,
                    'probe_series': f.to_dict(),
                    'level': n,
                    'image_seminorm': found,
                    'seminorm': expected,
                }
                return _not_isometry(witness, checks)

    logger.info(f"Classified as {kind.value}(alpha={alpha:.6g}, beta={beta:.6g})")
    return ClassificationResult(kind.value, alpha, beta, checks=checks)


def cayley(z):
    """tau(z) = (1 + z)/(1 - z), unit disc onto the right half-plane"""
    if z == 1:
        raise DomainError("Cayley transform is undefined at z = 1")
    return (1 + z) / (1 - z)


def inverse_cayley(w):
    """tau^-1(w) = (w - 1)/(w + 1)"""
    if w == -1:
        raise DomainError("inverse Cayley transform is undefined at w = -1")
    return (w - 1) / (w + 1)


def cayley_conjugate_eval(alpha, beta, F, w):
    """
    Evaluate the half-plane isometry alpha F(tau(beta tau^-1(w)))

    Args:
        alpha (complex): Unimodular weight
        beta (complex): Unimodular rotation
        F (callable): Function on the right half-plane
        w (complex): Point with Re w > 0

    Returns:
        complex: The value at w
    """
    op = WeightedComposition(Kind.ROTATION, alpha, beta)
    w = complex(w)
    if w.real <= 0:
        raise DomainError(f"point {w} is outside the right half-plane")
    u = op.beta * inverse_cayley(w)
    if abs(u) >= 1:
        raise DomainError(f"rotated point {u} left the unit disc")
    return op.alpha * F(cayley(u))
