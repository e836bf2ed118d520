#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Result classes returned by the analysis, factorization and spectral helpers
"""

import math


def _complex_to_list(c):
    return [float(complex(c).real), float(complex(c).imag)]


class CircleProfile:
    """
    Sup of |f| on one circle with the angles where it is attained
    """

    def __init__(self, radius, sup, argmax_points, sup_error, full_circle=False):
        """
        Args:
            radius (float): Circle radius r
            sup (float): M(r)
            argmax_points (list): Angles within tol_max of M(r)
            sup_error (float): Reported refinement error of M(r)
            full_circle (bool): True when |f| is constant on the circle
        """
        self.radius = radius
        self.sup = sup
        self.argmax_points = argmax_points
        self.sup_error = sup_error
        self.full_circle = full_circle

    def to_dict(self):
        return {
            'radius': self.radius,
            'sup': self.sup,
            'argmax_points': 'full_circle' if self.full_circle else list(self.argmax_points),
            'sup_error': self.sup_error,
        }


class MaxSetVerdict:
    """Structure of the set where |f| reaches its sup on a circle"""

    FULL_CIRCLE = 'FullCircle'
    FINITE = 'Finite'
    INDETERMINATE = 'Indeterminate'

    def __init__(self, kind, points=None, evidence=0.0, reason=None):
        self.kind = kind
        self.points = points or []
        self.evidence = evidence
        self.reason = reason

    def to_dict(self):
        return {
            'kind': self.kind,
            'points': list(self.points),
            'evidence': self.evidence,
            'reason': self.reason,
        }


class HadamardCheck:
    """Three-circle convexity residual for one radius triple"""

    def __init__(self, radii, sups, residual, equality_flag, near_equality, is_monomial, sup_errors=None):
        self.radii = radii
        self.sups = sups
        self.sup_errors = sup_errors or [0.0] * len(sups)
        self.residual = residual
        self.equality_flag = equality_flag
        self.near_equality = near_equality
        self.is_monomial = is_monomial

    def to_dict(self):
        return {
            'radii': list(self.radii),
            'sups': list(self.sups),
            'sup_errors': list(self.sup_errors),
            'residual': self.residual,
            'equality_flag': self.equality_flag,
            'near_equality': self.near_equality,
            'is_monomial': self.is_monomial,
        }


class RotationVerdict:
    """Outcome of the three-circle rotation test"""

    def __init__(self, is_rotation, constant=None, witness=None):
        self.is_rotation = is_rotation
        self.constant = constant
        self.witness = witness

    def to_dict(self):
        return {
            'verdict': 'IsRotation' if self.is_rotation else 'No',
            'c': _complex_to_list(self.constant) if self.constant is not None else None,
            'witness': self.witness,
        }


class FactorizationResult:
    """
    f = z^n g0(z) / conj(g0(1/conj z)) on the annulus 1/s < |z| < s
    """

    def __init__(self, winding, g0, s, residual, unit_circle_residual, unimodularity_defect, outer):
        """
        Args:
            winding (int): n
            g0 (LaurentSeries): One-sided outer factor
            s (float): Working radius
            residual (float): Largest relative residual over the test circles
            unit_circle_residual (float): Absolute residual on the unit circle
            unimodularity_defect (float): sup over the unit circle of ||f| - 1|
            outer (dict): Outer-function certificate of g0
        """
        self.winding = winding
        self.g0 = g0
        self.s = s
        self.residual = residual
        self.unit_circle_residual = unit_circle_residual
        self.unimodularity_defect = unimodularity_defect
        self.outer = outer

    def to_dict(self):
        return {
            'winding': self.winding,
            's': self.s,
            'g0': self.g0.to_dict(),
            'residual': self.residual,
            'unit_circle_residual': self.unit_circle_residual,
            'unimodularity_defect': self.unimodularity_defect,
            'outer_certificate': self.outer,
        }


class EigenWitness:
    """Eigenvalue together with a truncated eigenvector"""

    def __init__(self, eigenvalue, vector, label):
        self.eigenvalue = complex(eigenvalue)
        self.vector = vector
        self.label = label

    def to_dict(self):
        return {
            'eigenvalue': _complex_to_list(self.eigenvalue),
            'label': self.label,
            'vector': self.vector.to_dict(),
        }


class SpectrumDescription:
    """
    Spectrum and point spectrum of a weighted composition operator
    """

    INVERSION_PAIR = 'InversionPair'
    ROOT_OF_UNITY_CYCLE = 'RootOfUnityCycle'
    APERIODIC_ORBIT = 'AperiodicOrbit'

    def __init__(self, kind, alpha, beta, points, eigenspace_dimension, order=None, witnesses=None,
                 period_cutoff=None):
        self.kind = kind
        self.alpha = complex(alpha)
        self.beta = complex(beta)
        self.points = [complex(p) for p in points]
        self.eigenspace_dimension = eigenspace_dimension
        self.order = order
        self.witnesses = witnesses or []
        self.period_cutoff = period_cutoff

    def to_dict(self):
        data = {
            'kind': self.kind,
            'alpha': _complex_to_list(self.alpha),
            'beta': _complex_to_list(self.beta),
            'eigenspace_dimension': self.eigenspace_dimension,
            'order': self.order,
            'witnesses': [w.to_dict() for w in self.witnesses],
        }
        if self.kind == self.APERIODIC_ORBIT:
            data['points'] = {'generator': 'alpha * beta^k, k in Z', 'sample': [_complex_to_list(p) for p in self.points]}
            data['period_cutoff'] = self.period_cutoff
        else:
            data['points'] = [_complex_to_list(p) for p in self.points]
        return data


class ResolventSolution:
    """Solution of (T - lambda) f = g by coefficient division"""

    def __init__(self, f, min_divisor, min_divisor_index, verification_residual, bounds_hold=None):
        self.f = f
        self.min_divisor = min_divisor
        self.min_divisor_index = min_divisor_index
        self.verification_residual = verification_residual
        self.bounds_hold = bounds_hold

    def to_dict(self):
        return {
            'f': self.f.to_dict(),
            'min_divisor': self.min_divisor,
            'min_divisor_index': self.min_divisor_index,
            'verification_residual': self.verification_residual,
            'coefficient_bounds_hold': self.bounds_hold,
        }


class GapProfile:
    """
    Small-divisor profile |beta^k - lambda|^(-1/k) for k = 1..K
    """

    def __init__(self, k_values, gap_values, envelope, limit_bracket, bound_values=None,
                 bound_violations=None, parameters=None):
        self.k_values = k_values
        self.gap_values = gap_values
        self.envelope = envelope
        self.limit_bracket = limit_bracket
        self.bound_values = bound_values
        self.bound_violations = bound_violations
        self.parameters = parameters or {}

    @property
    def diophantine_bound(self):
        """Certificate data when (gamma, tau) were supplied"""
        if self.bound_values is None:
            return None
        return {
            'gamma': self.parameters.get('gamma'),
            'tau': self.parameters.get('tau'),
            'holds': not self.bound_violations,
            'violations': list(self.bound_violations[:20]),
        }

    def to_dict(self, include_profile=False):
        index_max = int(self.gap_values.argmax())
        data = {
            'parameters': self.parameters,
            'K': int(self.k_values[-1]),
            'final_gap': float(self.gap_values[-1]),
            'max_gap': float(self.gap_values[index_max]),
            'argmax_k': int(self.k_values[index_max]),
            'final_envelope': float(self.envelope[-1]),
            'limit_bracket': list(self.limit_bracket),
            'diophantine_bound': self.diophantine_bound,
        }
        if include_profile:
            data['k'] = [int(k) for k in self.k_values]
            data['gap'] = [float(g) for g in self.gap_values]
            data['envelope'] = [float(e) for e in self.envelope]
        return data


class LiouvilleTerm:
    """p_n = 2^q_n together with the certified inequalities at index n"""

    def __init__(self, n, p, q, eps_exponent, checks):
        """
        Args:
            n (int): Index
            p (LogSpaceInteger): p_n
            q (LogSpaceInteger): q_n
            eps_exponent (LogSpaceInteger): e with eps_n <= 2^-e
            checks (dict): Name -> bool for each certified inequality
        """
        self.n = n
        self.p = p
        self.q = q
        self.eps_exponent = eps_exponent
        self.checks = checks

    def to_dict(self):
        return {
            'n': self.n,
            'p': self.p.to_dict(),
            'q': self.q.to_dict(),
            'eps_le_2_pow_minus': self.eps_exponent.to_dict(),
            'checks': dict(self.checks),
        }


class LiouvilleGrowth:
    """
    Certified brackets for -log|1 + beta^p_n| and (1/p_n) log|c_n|
    """

    def __init__(self, n, neg_log_divisor, growth_exponent, divisor=None):
        """
        Args:
            n (int): Index
            neg_log_divisor (tuple): (lower, upper) LogSpaceInteger bounds of -ln|1 + beta^p_n|
            growth_exponent (tuple): (lower, upper) LogSpaceInteger bounds of (1/p_n) ln|c_n|
            divisor (mpmath interval, optional): |1 + beta^p_n| itself when representable
        """
        self.n = n
        self.neg_log_divisor = neg_log_divisor
        self.growth_exponent = growth_exponent
        self.divisor = divisor

    @property
    def lower(self):
        return self.growth_exponent[0]

    def to_dict(self):
        data = {
            'n': self.n,
            'neg_log_divisor': {'lower': self.neg_log_divisor[0].to_dict(), 'upper': self.neg_log_divisor[1].to_dict()},
            'growth_exponent': {'lower': self.growth_exponent[0].to_dict(), 'upper': self.growth_exponent[1].to_dict()},
        }
        if self.divisor is not None:
            data['divisor'] = [float(self.divisor.a), float(self.divisor.b)]
        return data


def finite_or_none(value):
    """JSON-safe float: infinities become None"""
    if value is None or math.isinf(value) or math.isnan(value):
        return None
    return float(value)
