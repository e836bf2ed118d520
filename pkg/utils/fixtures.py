#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Loading and saving the JSON inputs of the command line
"""

import json
import logging
import os

from models.errors import MalformedInputError
from models.laurent import LaurentSeries
from models.operator import OperatorMatrix

logger = logging.getLogger(__name__)


def load_json(path):
    """
    Read a JSON document

    Args:
        path (str): File to read

    Returns:
        dict: Parsed document
    """
    try:
        with open(path, 'r', encoding='utf-8') as handle:
            data = json.load(handle)
    except FileNotFoundError as e:
        logger.error(f"Input file not found: {path}")
        raise MalformedInputError(f"input file not found: {path}") from e
    except json.JSONDecodeError as e:
        logger.error(f"Invalid JSON in {path}: {e}")
        raise MalformedInputError(f"invalid JSON in {path} (line {e.lineno}, column {e.colno}): {e.msg}") from e
    if not isinstance(data, dict):
        logger.error(f"Expected a JSON object in {path}")
        raise MalformedInputError(f"expected a JSON object in {path}, got {type(data).__name__}")
    return data


def _load(path, cls, what):
    data = load_json(path)
    try:
        return cls.from_dict(data)
    except MalformedInputError as e:
        logger.error(f"Invalid {what} in {path}: {e}")
        raise MalformedInputError(f"{path}: {e}") from e


def load_series(path):
    """LaurentSeries from {"N", "inner", "outer", "coeffs"}"""
    return _load(path, LaurentSeries, 'series')


def load_matrix(path):
    """OperatorMatrix from {"N", "entries"}"""
    return _load(path, OperatorMatrix, 'operator matrix')


def save_json(data, path):
    """Write a JSON document with sorted keys so equal data gives equal bytes"""
    directory = os.path.dirname(path)
    if directory:
        os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as handle:
        json.dump(data, handle, sort_keys=True, indent=1)
        handle.write('\n')
