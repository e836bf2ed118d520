#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Seeded generator of the fixture corpus: series, operator matrices and
synthesized unimodular functions, with a manifest of expected labels
"""

import logging
import os

import numpy as np

from models.laurent import LaurentSeries
from models.operator import OperatorMatrix, WeightedComposition
from utils.factorization import synthesize_unimodular
from utils.fixtures import save_json
from utils.laurent import blaschke_factor, exp_z_minus_inv_z, random_polynomial
from utils.operators import differentiation_matrix, dilation_matrix, operator_matrix

logger = logging.getLogger(__name__)

MATRIX_N = 16
BLASCHKE_N = 64
PERTURBATION = 1e-3
DILATION = 0.9


def _unit(rng):
    return complex(np.exp(2j * np.pi * rng.random()))


def _series_fixtures(rng, count, N):
    fixtures = {}
    for i in range(count):
        degree = int(rng.integers(1, 9))
        fixtures[f"random_{i}"] = random_polynomial(rng, degree, N)
    for k in (-3, 0, 1, 5):
        fixtures[f"monomial_{k}"] = LaurentSeries.monomial(k, N=N)
    fixtures['blaschke'] = blaschke_factor(0.5, BLASCHKE_N)
    fixtures['exp_z_minus_inv_z'] = exp_z_minus_inv_z(N)
    return fixtures


def _matrix_fixtures(rng, count):
    fixtures = {}
    labels = {}
    for i in range(count):
        op = WeightedComposition.rotation(_unit(rng), _unit(rng))
        fixtures[f"rotation_{i}"] = operator_matrix(op, MATRIX_N)
        labels[f"rotation_{i}"] = {'verdict': 'Rotation', 'operator': op.to_dict()}
    for i in range(count):
        op = WeightedComposition.inversion(_unit(rng), _unit(rng))
        fixtures[f"inversion_{i}"] = operator_matrix(op, MATRIX_N)
        labels[f"inversion_{i}"] = {'verdict': 'Inversion', 'operator': op.to_dict()}
    for i in range(count):
        op = WeightedComposition.rotation(_unit(rng), _unit(rng))
        size = 2 * MATRIX_N + 1
        noise = rng.standard_normal((size, size)) + 1j * rng.standard_normal((size, size))
        entries = operator_matrix(op, MATRIX_N).entries + PERTURBATION * noise
        fixtures[f"perturbed_{i}"] = OperatorMatrix(entries)
        labels[f"perturbed_{i}"] = {'verdict': 'NotIsometry'}
    fixtures['dilation'] = dilation_matrix(DILATION, MATRIX_N)
    labels['dilation'] = {'verdict': 'NotIsometry', 'rho': DILATION}
    fixtures['differentiation'] = differentiation_matrix(MATRIX_N)
    labels['differentiation'] = {'verdict': 'NotIsometry', 'comptest_failing_n': 2}
    return fixtures, labels


def _unimodular_fixtures(rng, count):
    fixtures = {}
    labels = {}
    for i in range(count):
        degree = int(rng.integers(1, 9))
        h_plus = random_polynomial(rng, degree, one_sided=True) * 0.3
        n = int(rng.integers(-5, 6))
        fixtures[f"synth_{i}"] = synthesize_unimodular(h_plus, n)
        labels[f"synth_{i}"] = {'winding': n, 'h_plus': h_plus.to_dict()}
    return fixtures, labels


def generate_corpus(directory, seed, N, count=5):
    """
    Write the fixture corpus under directory

    Equal seed, N and count give byte-identical files.

    Args:
        directory (str): Output directory, created when missing
        seed (int): Seed of the single random generator
        N (int): Degree bound of the series fixtures
        count (int): Fixtures per random family

    Returns:
        dict: The manifest that was written
    """
    rng = np.random.default_rng(seed)
    manifest = {'seed': seed, 'N': N, 'count': count, 'series': {}, 'matrices': {}, 'unimodular': {}}

    for name, series in _series_fixtures(rng, count, N).items():
        save_json(series.to_dict(), os.path.join(directory, 'series', f"{name}.json"))
        manifest['series'][name] = {}
    manifest['series']['blaschke'] = {'winding': 1, 'zero': 0.5}
    manifest['series']['exp_z_minus_inv_z'] = {'winding': 0}

    matrices, labels = _matrix_fixtures(rng, count)
    for name, matrix in matrices.items():
        save_json(matrix.to_dict(), os.path.join(directory, 'matrices', f"{name}.json"))
    manifest['matrices'] = labels

    unimodular, labels = _unimodular_fixtures(rng, count)
    for name, series in unimodular.items():
        save_json(series.to_dict(), os.path.join(directory, 'unimodular', f"{name}.json"))
    manifest['unimodular'] = labels

    save_json(manifest, os.path.join(directory, 'manifest.json'))
    logger.info(f"Corpus with seed {seed} written to {directory}")
    return manifest
