#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Handlers for the command-line subcommands

Every handler takes the parsed arguments and the RunConfig and returns
(result, diagnostics, exit_code). Errors propagate as AnnulusError.
"""

import logging

from mpmath import mp

import config
from models.domain import AnnulusDomain
from models.errors import DomainError
from models.operator import Kind, WeightedComposition
from models.results import MaxSetVerdict
from utils.analysis import (circle_profile, hadamard_residual, max_modulus_set, profile_series,
                            three_circle_rotation_test, write_profile_csv)
from utils.corpus import generate_corpus
from utils.domain import frechet_distance, seminorm_with_error
from utils.factorization import factor_unimodular, winding_number
from utils.fixtures import load_matrix, load_series
from utils.operators import composition_operator_test, isometry_classify
from utils.reports import EXIT_OK
from utils.spectral import (diophantine_gap_profile, eigenvector_check, liouville_growth, liouville_sequence,
                            parse_real_expression, resolvent_solve, spectrum, write_gap_csv)

logger = logging.getLogger(__name__)

EXIT_INDETERMINATE = 3


def _domain(run_config):
    return AnnulusDomain(run_config.R)


def _beta(args, bits):
    """beta from --beta, or e^{2 pi i theta} from a --theta expression"""
    if getattr(args, 'theta', None) is not None:
        with mp.workprec(bits):
            theta = parse_real_expression(args.theta)
            return complex(mp.expjpi(2 * theta))
    if args.beta is None:
        raise DomainError("one of --beta or --theta is required")
    return args.beta


def _operator(args, run_config, kind=None):
    kind = kind or args.kind
    return WeightedComposition(Kind(kind), args.alpha, _beta(args, run_config.precision_bits))


def seminorm_command(args, run_config):
    """||f||_{inf,n} for the requested exhaustion levels"""
    f = load_series(args.series)
    domain = _domain(run_config)
    values = []
    for n in args.n:
        level = domain.level(n)
        value, error = seminorm_with_error(f, domain, n)
        values.append({**level.to_dict(), 'value': value, 'sup_error': error})
    return {'seminorms': values}, {'N': f.N, 'domain': domain.to_dict()}, EXIT_OK


def metric_command(args, run_config):
    f = load_series(args.series)
    g = load_series(args.other)
    distance, tail = frechet_distance(f, g, _domain(run_config), args.variant, args.k_max)
    result = {
        'distance': distance,
        'tail_bound': tail,
        'variant': args.variant,
        'k_max': args.k_max or config.DEFAULT_K_MAX,
    }
    return result, {}, EXIT_OK


def hadamard_command(args, run_config):
    """Three-circle residual, with an optional (r, M(r)) CSV"""
    f = load_series(args.series)
    r1, r2, r3 = args.radii
    check = hadamard_residual(f, r1, r2, r3)
    if args.csv:
        write_profile_csv(profile_series(f, args.radii), args.csv)
    return check.to_dict(), {'csv': args.csv}, EXIT_OK


def maxset_command(args, run_config):
    f = load_series(args.series)
    verdict = max_modulus_set(f, args.radius)
    diagnostics = {}
    if args.csv:
        write_profile_csv([circle_profile(f, args.radius)], args.csv)
        diagnostics['csv'] = args.csv
    if verdict.kind == MaxSetVerdict.INDETERMINATE:
        logger.warning(f"Maximum-modulus set at r = {args.radius} is indeterminate: {verdict.reason}")
        diagnostics['reason'] = verdict.reason
        return verdict.to_dict(), diagnostics, EXIT_INDETERMINATE
    return verdict.to_dict(), diagnostics, EXIT_OK


def rotation_test_command(args, run_config):
    f = load_series(args.series)
    r1, r2, r3 = args.radii
    return three_circle_rotation_test(f, r1, r2, r3).to_dict(), {}, EXIT_OK


def classify_command(args, run_config):
    """Isometry classification of an operator matrix"""
    matrix = load_matrix(args.matrix)
    result = isometry_classify(matrix, _domain(run_config), n_levels=args.levels, probes=args.probes,
                               seed=run_config.seed)
    return result.to_dict(), {'N': matrix.N, 'n_trust': matrix.n_trust}, EXIT_OK


def comptest_command(args, run_config):
    matrix = load_matrix(args.matrix)
    verdict = composition_operator_test(matrix, args.n_max, domain=_domain(run_config))
    return verdict.to_dict(), {'N': matrix.N, 'n_trust': matrix.n_trust}, EXIT_OK


def factorize_command(args, run_config):
    """Unimodular factorization f = z^n g0 / conj(g0(1/conj z))"""
    f = load_series(args.series)
    result = factor_unimodular(f, s_hint=args.s_hint, R=run_config.R)
    return result.to_dict(), {'N': f.N}, EXIT_OK


def winding_command(args, run_config):
    f = load_series(args.series)
    return {'radius': args.radius, 'winding': winding_number(f, args.radius)}, {}, EXIT_OK


def spectrum_command(args, run_config):
    """Spectrum description with eigenvector witnesses"""
    op = _operator(args, run_config)
    description = spectrum(op, n_root=args.n_root, aperiodic=args.aperiodic)
    domain = _domain(run_config)
    residuals = [eigenvector_check(op, w.eigenvalue, w.vector, domain) for w in description.witnesses]
    diagnostics = {'max_witness_residual': max(residuals, default=0.0)}
    if diagnostics['max_witness_residual'] >= config.TOLERANCES['eigen']:
        logger.warning(f"Witness residual {diagnostics['max_witness_residual']:.3e} above tolerance")
    return description.to_dict(), diagnostics, EXIT_OK


def resolvent_command(args, run_config):
    op = _operator(args, run_config, Kind.ROTATION.value)
    g = load_series(args.series)
    solution = resolvent_solve(op, args.eigenvalue, g)
    return solution.to_dict(), {'operator': op.to_dict()}, EXIT_OK


def eigencheck_command(args, run_config):
    """Relative residual ||Tf - lambda f||_2 / ||f||_2"""
    op = _operator(args, run_config)
    f = load_series(args.series)
    residual = eigenvector_check(op, args.eigenvalue, f, _domain(run_config))
    result = {
        'eigenvalue': [args.eigenvalue.real, args.eigenvalue.imag],
        'residual': residual,
        'is_eigenpair': residual < config.TOLERANCES['eigen'],
    }
    return result, {'operator': op.to_dict()}, EXIT_OK


def diophantine_command(args, run_config):
    profile = diophantine_gap_profile(args.xi, args.r, args.K, run_config.precision_bits, args.gamma, args.tau)
    if args.csv:
        write_gap_csv(profile, args.csv)
    return profile.to_dict(), {'csv': args.csv}, EXIT_OK


def liouville_command(args, run_config):
    """
    Liouville exponents with their certified inequalities and growth brackets
    """
    bits = run_config.precision_bits
    terms = liouville_sequence(args.terms, bits)
    growth = [liouville_growth(n, bits) for n in range(2, args.terms + 1)]
    increasing = all(b.lower.compare(a.lower) == 1 for a, b in zip(growth, growth[1:]))
    beyond = {str(g.n): g.lower.at_least(10 ** g.n) for g in growth if g.n >= 3}
    result = {
        'terms': [t.to_dict() for t in terms],
        'growth': [g.to_dict() for g in growth],
        'growth_increasing': increasing,
        'growth_exceeds_10_pow_n': beyond,
    }
    diagnostics = {'all_checks_hold': all(all(t.checks.values()) for t in terms)}
    return result, diagnostics, EXIT_OK


def corpus_command(args, run_config):
    manifest = generate_corpus(args.dir, run_config.seed, run_config.N, args.count)
    result = {
        'directory': args.dir,
        'series': sorted(manifest['series']),
        'matrices': sorted(manifest['matrices']),
        'unimodular': sorted(manifest['unimodular']),
    }
    return result, {}, EXIT_OK


COMMANDS = {
    'seminorm': seminorm_command,
    'metric': metric_command,
    'hadamard': hadamard_command,
    'maxset': maxset_command,
    'rotation-test': rotation_test_command,
    'classify': classify_command,
    'comptest': comptest_command,
    'factorize': factorize_command,
    'winding': winding_command,
    'spectrum': spectrum_command,
    'resolvent': resolvent_command,
    'eigencheck': eigencheck_command,
    'diophantine': diophantine_command,
    'liouville': liouville_command,
    'corpus': corpus_command,
}

# Arguments naming input files, hashed into the report digest
INPUT_FILES = ('series', 'other', 'matrix')
