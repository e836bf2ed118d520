"""Tests for the seeded fixture corpus."""

import os

import pytest
from scipy.special import jv

from models.domain import AnnulusDomain
from models.operator import ClassificationResult
from utils.corpus import generate_corpus
from utils.analysis import hadamard_residual
from utils.factorization import factor_unimodular
from utils.fixtures import load_json, load_matrix, load_series
from utils.operators import isometry_classify


def read_tree(directory):
    files = {}
    for root, _, names in os.walk(directory):
        for name in names:
            path = os.path.join(root, name)
            with open(path, 'rb') as handle:
                files[os.path.relpath(path, directory)] = handle.read()
    return files


@pytest.fixture(scope='module')
def corpus(tmp_path_factory):
    directory = str(tmp_path_factory.mktemp('corpus'))
    manifest = generate_corpus(directory, seed=7, N=32, count=2)
    return directory, manifest


class TestCorpus:

    def test_same_seed_same_bytes(self, corpus, tmp_path):
        directory, _ = corpus
        generate_corpus(str(tmp_path), seed=7, N=32, count=2)
        assert read_tree(directory) == read_tree(str(tmp_path))

    def test_manifest_on_disk(self, corpus):
        directory, manifest = corpus
        assert load_json(os.path.join(directory, 'manifest.json')) == manifest
        assert set(manifest['matrices']) == {'rotation_0', 'rotation_1', 'inversion_0', 'inversion_1',
                                             'perturbed_0', 'perturbed_1', 'dilation', 'differentiation'}

    def test_matrix_labels(self, corpus):
        directory, manifest = corpus
        domain = AnnulusDomain(2.0)
        for name, label in manifest['matrices'].items():
            result = isometry_classify(load_matrix(os.path.join(directory, 'matrices', f"{name}.json")), domain)
            assert result.verdict == label['verdict'], name
            if label['verdict'] != ClassificationResult.NOT_ISOMETRY:
                alpha = complex(*label['operator']['alpha'])
                assert abs(result.alpha - alpha) < 1e-10

    def test_unimodular_labels(self, corpus):
        directory, manifest = corpus
        for name, label in manifest['unimodular'].items():
            f = load_series(os.path.join(directory, 'unimodular', f"{name}.json"))
            assert factor_unimodular(f).winding == label['winding'], name

    def test_bessel_fixture(self, corpus):
        directory, _ = corpus
        f = load_series(os.path.join(directory, 'series', 'exp_z_minus_inv_z.json'))
        for k in range(-6, 7):
            assert f.coeff(k) == pytest.approx(jv(k, 2.0), abs=1e-12)

    def test_hadamard_equality_only_for_monomials(self, corpus):
        directory, manifest = corpus
        radii = (0.9, 1.0, 1.1)
        checked = 0
        for name in manifest['series']:
            f = load_series(os.path.join(directory, 'series', f"{name}.json"))
            if not (f.inner < radii[0] and radii[-1] < f.outer):
                continue
            check = hadamard_residual(f, *radii)
            assert check.residual >= -1e-9, name
            assert check.equality_flag == name.startswith('monomial'), name
            checked += 1
        assert checked >= 6
