#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Spectra of weighted composition operators, resolvent solves, the
small-divisor gap profile and the Liouville growth certificates
"""

import ast
import cmath
import csv
import logging
import math
import operator
from fractions import Fraction

import numpy as np
from mpmath import iv, mp

import config
from models.domain import AnnulusDomain
from models.errors import (DomainError, InconsistentPeriodClaim, MalformedInputError, PrecisionExhausted,
                           ResolventVerificationError, SmallDivisor, ZeroFunction)
from models.laurent import LaurentSeries
from models.log_integer import EXACT, LogSpaceInteger, interval_precision
from models.operator import Kind
from models.results import (EigenWitness, GapProfile, LiouvilleGrowth, LiouvilleTerm, ResolventSolution,
                            SpectrumDescription)
from utils.domain import seminorm
from utils.operators import apply_weighted_composition

logger = logging.getLogger(__name__)

WITNESS_INDICES = 3  # e_k witnesses emitted per eigenvalue, k = 1..3
WITNESS_SPAN = 64  # periods above this get no e_{k + n l} witnesses
APERIODIC_SAMPLE = 8  # points alpha beta^k listed for an aperiodic orbit
LIOUVILLE_MAX_N = 8


def _continued_fraction_denominators(x, cutoff):
    """Convergent denominators of a rational x in [0, 1), up to cutoff"""
    h_prev, h = 0, 1
    q_prev, q = 1, 0
    while True:
        a = math.floor(x)
        h_prev, h = h, a * h + h_prev
        q_prev, q = q, a * q + q_prev
        if q > cutoff:
            return
        if q > 0:
            yield q
        x = x - a
        if x == 0:
            return
        x = 1 / x


def _orbit_distance(theta, n):
    """|beta^n - 1| = 2|sin(pi n theta)| with n theta reduced exactly"""
    frac = (n * theta) % 1
    return 2 * abs(math.sin(math.pi * float(frac)))


def detect_period(beta, cutoff=None, tol=None):
    """
    Smallest n <= cutoff with |beta^n - 1| < tol

    The smallest such n is a best approximation of arg(beta)/2pi, so only
    continued-fraction convergent denominators need testing.

    Args:
        beta (complex): Unimodular number
        cutoff (int, optional): Largest period searched, config.APERIODIC_CUTOFF by default
        tol (float, optional): Period tolerance

    Returns:
        int or None: The period, None when beta looks aperiodic up to the cutoff
    """
    cutoff = cutoff or config.APERIODIC_CUTOFF
    tol = config.tolerance('period', tol)
    theta = Fraction(cmath.phase(complex(beta)) / (2 * math.pi)) % 1
    for q in _continued_fraction_denominators(theta, cutoff):
        if _orbit_distance(theta, q) < tol:
            return q
    return None


def _check_period_claim(beta, n_root, tol):
    theta = Fraction(cmath.phase(complex(beta)) / (2 * math.pi)) % 1
    distance = _orbit_distance(theta, n_root)
    if distance >= tol:
        raise InconsistentPeriodClaim(f"|beta^{n_root} - 1| = {distance:.3e} is not below {tol:g}")
    for d in range(1, n_root):
        if n_root % d == 0 and _orbit_distance(theta, d) < tol:
            raise InconsistentPeriodClaim(f"beta has the smaller period {d}, not {n_root}")


def spectrum(op, n_root=None, aperiodic=False, tol=None):
    """
    Spectrum, point spectrum and eigenvector witnesses of T or S

    Args:
        op (WeightedComposition): Operator
        n_root (int, optional): Claimed order of beta for a rotation
        aperiodic (bool): Claim that beta is not a root of unity
        tol (float, optional): Period tolerance

    Returns:
        SpectrumDescription: InversionPair, RootOfUnityCycle or AperiodicOrbit
    """
    tol = config.tolerance('period', tol)
    alpha, beta = op.alpha, op.beta
    if op.kind is Kind.INVERSION:
        N = WITNESS_INDICES
        witnesses = [EigenWitness(alpha, LaurentSeries.monomial(0, N=N), 'e0')]
        for k in range(1, WITNESS_INDICES + 1):
            c = beta ** k
            plus = LaurentSeries.from_mapping({k: 1, -k: c}, N)
            minus = LaurentSeries.from_mapping({k: 1, -k: -c}, N)
            witnesses.append(EigenWitness(alpha, plus, f"e{k} + beta^{k} e{-k}"))
            witnesses.append(EigenWitness(-alpha, minus, f"e{k} - beta^{k} e{-k}"))
        return SpectrumDescription(SpectrumDescription.INVERSION_PAIR, alpha, beta, [alpha, -alpha],
                                   'infinite', witnesses=witnesses)

    if n_root is not None:
        _check_period_claim(beta, n_root, tol)
        period = n_root
    else:
        period = detect_period(beta, tol=tol)
        if aperiodic and period is not None:
            raise InconsistentPeriodClaim(f"beta claimed aperiodic but beta^{period} = 1")

    if period is None:
        logger.info(f"beta = {beta:.6g} has no period up to {config.APERIODIC_CUTOFF}")
        N = max(APERIODIC_SAMPLE, WITNESS_INDICES)
        points = [alpha * beta ** k for k in range(APERIODIC_SAMPLE)]
        witnesses = [EigenWitness(alpha * beta ** k, LaurentSeries.monomial(k, N=N), f"e{k}")
                     for k in range(-WITNESS_INDICES, WITNESS_INDICES + 1)]
        return SpectrumDescription(SpectrumDescription.APERIODIC_ORBIT, alpha, beta, points, 1,
                                   witnesses=witnesses, period_cutoff=config.APERIODIC_CUTOFF)

    points = [alpha * beta ** k for k in range(period)]
    witnesses = []
    for k in range(min(period, APERIODIC_SAMPLE)):
        eigenvalue = alpha * beta ** k
        if period <= WITNESS_SPAN:
            for index in (k, k + period, k - period):
                witnesses.append(EigenWitness(eigenvalue, LaurentSeries.monomial(index, N=k + period), f"e{index}"))
        else:
            witnesses.append(EigenWitness(eigenvalue, LaurentSeries.monomial(k, N=max(k, 1)), f"e{k}"))
    return SpectrumDescription(SpectrumDescription.ROOT_OF_UNITY_CYCLE, alpha, beta, points, 'infinite',
                               order=period, witnesses=witnesses)


def eigenvector_check(op, eigenvalue, f, domain=None):
    """
    ||op(f) - lambda f||_{inf,2} / ||f||_{inf,2}

    Args:
        op (WeightedComposition): Operator
        eigenvalue (complex): Candidate eigenvalue
        f (LaurentSeries): Candidate eigenvector
        domain (AnnulusDomain, optional): Annulus for the seminorm

    Returns:
        float: Relative residual
    """
    if f.is_zero():
        raise ZeroFunction("eigenvector candidate is identically zero")
    domain = domain or AnnulusDomain(config.DEFAULT_R)
    image = apply_weighted_composition(op, f)
    return seminorm(image - f * complex(eigenvalue), domain, 2) / seminorm(f, domain, 2)


def resolvent_solve(op, eigenvalue, g, div_tol=None, check_tol=None):
    """
    Solve (T - lambda) f = g for a rotation T by coefficient division

    Args:
        op (WeightedComposition): Rotation operator
        eigenvalue (complex): lambda
        g (LaurentSeries): Right-hand side
        div_tol (float, optional): Smallest accepted divisor
        check_tol (float, optional): Accepted verification residual

    Returns:
        ResolventSolution: f, min divisor and its index, verification residual, coefficient bound check
    """
    if op.kind is not Kind.ROTATION:
        raise DomainError("resolvent_solve needs a rotation operator")
    div_tol = config.tolerance('div', div_tol)
    check_tol = config.tolerance('resolvent_check', check_tol)
    lam = complex(eigenvalue)
    ks = g.indices
    divisors = op.alpha * np.power(op.beta, ks) - lam
    sizes = np.abs(divisors)

    small = [int(k) for k in ks[sizes <= div_tol]]
    if small:
        k = min(small, key=lambda j: (abs(j), j < 0))
        raise SmallDivisor(k, float(sizes[k + g.N]))

    f = LaurentSeries(g.coeffs / divisors, g.inner, g.outer)
    residual_series = apply_weighted_composition(op, f) - f * lam - g
    scale = max(1.0, g.max_abs())
    residual = residual_series.max_abs() / scale
    if residual > check_tol:
        raise ResolventVerificationError(f"(T - lambda) f misses g by {residual:.3e} (tolerance {check_tol:g})")

    bounds_hold = None
    modulus = abs(lam)
    if abs(modulus - 1) > config.TOLERANCES['unimodular']:
        slack = 1e-14
        b = np.abs(g.coeffs)
        a = np.abs(f.coeffs)
        nonzero = b > 0
        lower = b[nonzero] / (1 + modulus)
        upper = b[nonzero] / abs(1 - modulus)
        bounds_hold = bool(np.all(lower < a[nonzero] + slack * b[nonzero]) and
                           np.all(a[nonzero] < upper + slack * b[nonzero]))
        if not bounds_hold:
            logger.warning(f"Coefficient bounds fail for lambda = {lam:.6g}")

    index = int(np.argmin(sizes))
    return ResolventSolution(f, float(sizes[index]), int(ks[index]), residual, bounds_hold)


_OPERATORS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.Div: operator.truediv,
    ast.Pow: operator.pow,
}

_FUNCTIONS = {'sqrt': mp.sqrt, 'log': mp.log, 'exp': mp.exp}
_CONSTANTS = {'pi': lambda: +mp.pi, 'e': lambda: +mp.e}


def parse_real_expression(text):
    """
    Evaluate an arithmetic expression like 'sqrt(2) - 1' at the current mp precision

    Numbers, + - * / **, unary minus, pi, e, sqrt, log and exp are accepted.
    """
    def evaluate(node):
        if isinstance(node, ast.Expression):
            return evaluate(node.body)
        if isinstance(node, ast.Constant) and isinstance(node.value, (int, float)):
            return mp.mpf(node.value) if isinstance(node.value, int) else mp.mpf(repr(node.value))
        if isinstance(node, ast.BinOp) and type(node.op) in _OPERATORS:
            return _OPERATORS[type(node.op)](evaluate(node.left), evaluate(node.right))
        if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            value = evaluate(node.operand)
            return -value if isinstance(node.op, ast.USub) else value
        if isinstance(node, ast.Name) and node.id in _CONSTANTS:
            return _CONSTANTS[node.id]()
        if (isinstance(node, ast.Call) and isinstance(node.func, ast.Name) and node.func.id in _FUNCTIONS
                and len(node.args) == 1 and not node.keywords):
            return _FUNCTIONS[node.func.id](evaluate(node.args[0]))
        raise MalformedInputError(f"unsupported element in expression '{text}'")

    try:
        tree = ast.parse(str(text), mode='eval')
    except SyntaxError as e:
        raise MalformedInputError(f"cannot parse expression '{text}': {e}") from e
    return evaluate(tree)


def parse_rational(text):
    """'1/3' or a Fraction"""
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as e:
        raise MalformedInputError(f"invalid rational '{text}': {e}") from e


def diophantine_gap_profile(xi, r, K, bits=None, gamma=None, tau=None):
    """
    |beta^k - lambda|^(-1/k) for beta = e^{2 pi i xi}, lambda = e^{2 pi i r}, k = 1..K

    With x = xi k - r - p reduced to [-1/2, 1/2], |beta^k - lambda| = 2|sin(pi x)|.
    Each x is formed from the full-precision xi, never accumulated.

    Args:
        xi (str or number): Irrational, e.g. 'sqrt(2) - 1'
        r (str or Fraction): Non-integer rational p0/q0
        K (int): Number of terms, at least 10
        bits (int, optional): Working precision
        gamma (float, optional): Diophantine constant
        tau (float, optional): Diophantine order

    Returns:
        GapProfile: Gaps, suffix-max envelope, limit bracket and optional bound check
    """
    r = parse_rational(r)
    if r.denominator == 1:
        raise DomainError(f"r = {r} is an integer; lambda = 1 is always an eigenvalue")
    if K < 10:
        raise DomainError(f"K must be at least 10, got {K}")
    bits = bits or config.DEFAULT_PRECISION_BITS
    with_bound = gamma is not None and tau is not None

    gaps = np.empty(K)
    violations = []
    bound_values = np.empty(K) if with_bound else None
    with mp.workprec(bits):
        xi_value = parse_real_expression(xi) if isinstance(xi, str) else mp.mpf(xi)
        r_value = mp.mpf(r.numerator) / r.denominator
        resolution = mp.ldexp(1, 8 - bits)
        if with_bound:
            c = mp.mpf(r.denominator) ** tau / (4 * mp.mpf(gamma))
        for k in range(1, K + 1):
            x = xi_value * k - r_value
            x -= mp.nint(x)
            if abs(x) <= k * resolution:
                raise PrecisionExhausted(f"|xi k - r - p| = {mp.nstr(abs(x), 5)} at k = {k} is below the {bits}-bit resolution")
            divisor = 2 * abs(mp.sin(mp.pi * x))
            gaps[k - 1] = float(divisor ** (mp.mpf(-1) / k))
            if with_bound:
                bound = c * mp.mpf(k) ** (tau - 1)
                bound_values[k - 1] = float(bound ** (mp.mpf(1) / k))
                if 1 / divisor > bound:
                    violations.append(k)

    envelope = np.maximum.accumulate(gaps[::-1])[::-1]
    tail = gaps[-max(1, K // 10):]
    bracket = (min(2.0 ** (-1.0 / K), float(tail.min())), float(tail.max()))
    parameters = {'xi': str(xi), 'r': f"{r.numerator}/{r.denominator}", 'K': K, 'bits': bits}
    if with_bound:
        parameters.update({'gamma': gamma, 'tau': tau, 'c': float(c)})
        if violations:
            logger.warning(f"Diophantine bound violated at {len(violations)} values of k, first k = {violations[0]}")
    logger.info(f"Gap profile to K = {K}: max {gaps.max():.6g} at k = {int(gaps.argmax()) + 1}, final {gaps[-1]:.6g}")
    return GapProfile(np.arange(1, K + 1), gaps, envelope, bracket, bound_values,
                      violations if with_bound else None, parameters)


def write_gap_csv(profile, path):
    """Write k, gap, envelope and bound columns"""
    with open(path, 'w', newline='') as handle:
        writer = csv.writer(handle)
        writer.writerow(['k', 'gap', 'envelope', 'bound'])
        for j, k in enumerate(profile.k_values):
            bound = '' if profile.bound_values is None else repr(float(profile.bound_values[j]))
            writer.writerow([int(k), repr(float(profile.gap_values[j])), repr(float(profile.envelope[j])), bound])
    logger.info(f"Wrote {len(profile.k_values)} gap rows to {path}")


def _liouville_exponents(count, bits):
    """q_1..q_count with p_n = 2^q_n, p_1 = 1 and q_{n+1} = n^{p_n}"""
    q = [LogSpaceInteger.of(0, bits)]
    p = [LogSpaceInteger.of(1, bits)]
    for n in range(1, count):
        q_next = LogSpaceInteger.int_power(n, p[-1], bits)
        q.append(q_next)
        p.append(LogSpaceInteger.pow2(q_next, bits))
    return p, q


def liouville_sequence(N, bits=None):
    """
    p_n and q_n for n = 1..N with the certified inequalities

    Checks per n, all in exponent space:
        ratio_integer   q_{n+1} >= q_n             (p_{n+1}/p_n is an integer)
        ratio_bound     q_{n+1} >= q_n + n - 1     (p_{n+1}/p_n >= 2^{n-1})
        tail_ratio      q_{n+2} >= q_{n+1} + n     (eps_n <= 2/p_{n+1})
        power_growth    q_{n+1} >= (n+1) q_n       (p_{n+1} >= p_n^{n+1})
        liouville       q_{n+1} >= n q_n + 1       (eps_n <= 1/p_n^n)

    Returns:
        list: LiouvilleTerm for n = 1..N
    """
    if not 2 <= N <= LIOUVILLE_MAX_N:
        raise DomainError(f"N must lie in [2, {LIOUVILLE_MAX_N}], got {N}")
    bits = bits or config.DEFAULT_PRECISION_BITS
    p, q = _liouville_exponents(N + 2, bits)
    terms = []
    for n in range(1, N + 1):
        q_n, q_next, q_after = q[n - 1], q[n], q[n + 1]
        checks = {
            'ratio_integer': q_next.at_least(q_n),
            'ratio_bound': q_next.at_least(q_n + (n - 1)),
            'tail_ratio': q_after.at_least(q_next + n),
            'power_growth': q_next.at_least(q_n * (n + 1)),
            'liouville': q_next.at_least(q_n * n + 1),
        }
        if not all(checks.values()):
            logger.warning(f"Liouville check failed at n = {n}: {checks}")
        terms.append(LiouvilleTerm(n, p[n - 1], q_n, q_next - 1, checks))
    return terms


def _interval_bounds(x, bits):
    return LogSpaceInteger(interval=x.a, bits=bits), LogSpaceInteger(interval=x.b, bits=bits)


def liouville_growth(n, bits=None):
    """
    Certified brackets for D = |1 + beta^{p_n}| and (1/p_n) ln|c_n|, c_n = 1/(1 + beta^{p_n})

    D = 2 sin(pi S/2) with S = sum_{k > n} p_n/p_k.
    n = 2: S/2 = 1/16 + eps_3 and D is evaluated directly.
    n = 3: S lies in [p_n/p_{n+1}, U p_n/p_{n+1}], U = 1 + 2^{1-n}, and
        D in [2S, pi S], so -log2 D in [q_{n+1} - q_n - log2(pi U), q_{n+1} - q_n - 1].
    n >= 4: once log2 q_{n+1} >= 2(q_n + 2) the bracket relaxes to
        -log2 D in [q_{n+1}/2, q_{n+1}] and log2 of the growth exponent to
        [x/2, x] with x = p_n log2 n.

    Returns:
        LiouvilleGrowth: Brackets as LogSpaceInteger pairs
    """
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    bits = bits or config.DEFAULT_PRECISION_BITS
    p, q = _liouville_exponents(n + 2, bits)
    p_n, q_n, q_next = p[n - 1], q[n - 1], q[n]

    with interval_precision(bits):
        if n == 2:
            eps = iv.mpf([iv.ldexp(iv.mpf(1), -q[3].exact), iv.ldexp(iv.mpf(1), 1 - q[3].exact)])
            divisor = 2 * iv.sin(iv.pi * (iv.mpf(1) / 16 + eps))
            neg_log = -iv.ln(divisor)
            growth = neg_log / p_n.exact
            logger.info(f"|1 + beta^p_2| = {iv.nstr(divisor, 12)}")
            return LiouvilleGrowth(n, _interval_bounds(neg_log, bits), _interval_bounds(growth, bits), divisor)

        if q_next.kind == EXACT:
            gap = iv.mpf(q_next.exact - q_n.exact)
            tail = 1 + iv.ldexp(iv.mpf(1), 1 - n)
            neg_log2 = iv.mpf([(gap - iv.ln(iv.pi * tail) / iv.ln2).a, (gap - 1).b])
            neg_log = neg_log2 * iv.ln2
            growth = neg_log / iv.mpf(p_n.exact)
            return LiouvilleGrowth(n, _interval_bounds(neg_log, bits), _interval_bounds(growth, bits))

        ln2 = iv.ln2 * 1

    x = p_n * LogSpaceInteger.of(n, bits).log2()
    if not x.require_at_least((q_n + 2) * 2, f"log2 q_{n + 1} >= 2(q_{n} + 2)"):
        raise PrecisionExhausted(f"cannot separate q_{n + 1} from q_{n} at {bits} bits")
    half = LogSpaceInteger.of(0.5, bits)
    neg_log = (q_next * half * ln2, q_next * ln2)
    growth = (LogSpaceInteger.pow2(x * half, bits), LogSpaceInteger.pow2(x, bits))
    logger.info(f"Growth exponent at n = {n} is at least {growth[0]!r}")
    return LiouvilleGrowth(n, neg_log, growth)
