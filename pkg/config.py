#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Configuration settings for the annulus isometry toolkit
"""

import os

from dotenv import load_dotenv

load_dotenv()

# Domain and truncation
DEFAULT_R = float(os.environ.get("ANNULUS_R", "2.0"))  # Outer radius of the annulus 1/R < |z| < R
DEFAULT_N = int(os.environ.get("ANNULUS_N", "64"))  # Truncation degree of Laurent series
DEFAULT_K_MAX = int(os.environ.get("ANNULUS_K_MAX", "20"))  # Terms kept in the Frechet distances

# High precision settings
DEFAULT_PRECISION_BITS = int(os.environ.get("ANNULUS_BITS", "256"))
MAX_EXACT_BITS = int(os.environ.get("ANNULUS_MAX_EXACT_BITS", "4096"))  # Larger integers go to log space

# Randomness
DEFAULT_SEED = int(os.environ.get("ANNULUS_SEED", "42"))

# Logging
LOG_LEVEL = os.environ.get("ANNULUS_LOG_LEVEL", "INFO")
LOG_FILE = os.environ.get("ANNULUS_LOG_FILE")  # e.g. annulus.log

# Numerical tolerances, overridable per run with --tol name=value
TOLERANCES = {
    "zero_snap": 1e-14,  # recovered coefficients below this are set to zero
    "dynamic_range": 1e12,  # largest r^N or r^-N accepted by circle recovery
    "unimodular": 1e-12,  # |alpha|, |beta| at construction
    "tol_max": 1e-6,  # relative band counted as "at the maximum"
    "tol_eq": 1e-8,  # Hadamard equality band
    "hadamard": 1e-9,  # allowed negative Hadamard residual
    "rotation": 1e-9,  # three-circle hypothesis and rotation check
    "composition": 1e-9,  # Te_n = (Te_1)^n comparison
    "classify": 1e-9,  # isometry classifier structural and seminorm checks
    "vanish": 1e-8,  # minimum modulus on a winding contour
    "round": 1e-3,  # distance of a winding integral to the nearest integer
    "uni": 1e-8,  # unimodularity defect accepted by the factorization
    "log_residual": 1e-8,  # annulus logarithm reconstruction
    "div": 1e-12,  # smallest resolvent divisor
    "resolvent_check": 1e-10,  # (T - lambda) f = g verification
    "period": 1e-12,  # beta^n = 1 detection
    "eigen": 1e-10,  # eigenpair residual accepted for emitted witnesses
}

# Sampling and search settings
MIN_SAMPLES = 64  # Smallest number of samples taken on a circle
GOLDEN_ITERATIONS = 40  # Refinement steps around a sampled maximum
REFINED_PEAKS = 16  # Most sampled local maxima refined when searching a sup
PEAK_BAND = 0.85  # Sampled maxima below this fraction of the largest sample are not refined
CLUSTER_CAP = 64  # Largest number of maximum points reported as a finite set
CLUSTER_WIDTH = 3  # Widest cluster of near-maximum samples, in sample spacings
S_GRID_STEPS = 16  # s_j = R^(1 - j/S_GRID_STEPS)
S_GRID_LAST = 14
APERIODIC_CUTOFF = 10**6  # Largest period searched before declaring beta aperiodic


def tolerance(name, override=None):
    """
    Look up a tolerance by name

    Args:
        name (str): Key in TOLERANCES
        override (float, optional): Value returned instead when given

    Returns:
        float: The tolerance in effect
    """
    if override is not None:
        return override
    return TOLERANCES[name]
