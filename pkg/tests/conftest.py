"""Shared fixtures for the test suite."""

import numpy as np
import pytest

import config
from models.domain import AnnulusDomain
from models.laurent import LaurentSeries
from utils.fixtures import save_json


@pytest.fixture(autouse=True)
def restore_tolerances():
    saved = dict(config.TOLERANCES)
    yield
    config.TOLERANCES.clear()
    config.TOLERANCES.update(saved)


@pytest.fixture
def domain():
    return AnnulusDomain(2.0)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


@pytest.fixture
def write_series(tmp_path):
    """Save a series as JSON under tmp_path and return the path"""
    def _write(series, name='series.json'):
        path = str(tmp_path / name)
        save_json(series.to_dict(), path)
        return path
    return _write


@pytest.fixture
def one_plus_z():
    return LaurentSeries.from_mapping({0: 1.0, 1: 1.0})
