#!/usr/bin/env python
# -*- coding: utf-8 -*-

"""
Command-line entry point of the annulus isometry toolkit
Every subcommand writes one JSON report; see README.md for the list
"""

import argparse
import logging
import sys
import time

from pydantic import ValidationError

import config
from handlers.commands import COMMANDS, INPUT_FILES
from models.errors import AnnulusError, MalformedInputError
from models.report import RunConfig
from utils.pdf_generator import write_report_pdf
from utils.reports import build_report, inputs_digest, write_report

logger = logging.getLogger(__name__)

# Options shared by every subcommand; they configure the run, not the command
COMMON_OPTIONS = ('R', 'N', 'bits', 'seed', 'tol', 'out', 'pdf', 'reproducible', 'log_level', 'command')

DEFAULT_RADII = [0.8, 1.0, 1.25]


def setup_logging(level):
    """Configure the root logger once per process"""
    handlers = [logging.StreamHandler(sys.stderr)]
    if config.LOG_FILE:
        handlers.append(logging.FileHandler(config.LOG_FILE))
    logging.basicConfig(
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        level=getattr(logging, str(level).upper(), logging.INFO),
        handlers=handlers,
        force=True
    )


class ArgumentParser(argparse.ArgumentParser):
    """Parser whose usage errors raise MalformedInputError instead of exiting"""

    def error(self, message):
        raise MalformedInputError(f"{self.prog}: {message}")


def _common_parser(with_degree=True):
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--R', type=float, help=f"outer radius of the annulus (default {config.DEFAULT_R})")
    if with_degree:
        common.add_argument('--N', type=int, help=f"truncation degree (default {config.DEFAULT_N})")
    common.add_argument('--bits', type=int, help=f"working precision (default {config.DEFAULT_PRECISION_BITS})")
    common.add_argument('--seed', type=int, help=f"random seed (default {config.DEFAULT_SEED})")
    common.add_argument('--tol', action='append', default=[], metavar='NAME=VALUE', help="override a tolerance")
    common.add_argument('--out', help="report path (default stdout)")
    common.add_argument('--pdf', help="also render the report as PDF")
    common.add_argument('--reproducible', action='store_true', help="zero elapsed_ms for byte-identical reports")
    common.add_argument('--log-level', default=config.LOG_LEVEL)
    return common


def build_parser():
    """Argument parser with one subparser per command"""
    common = _common_parser()
    parser = ArgumentParser(prog='annulus', description="Isometries and spectra on the annulus 1/R < |z| < R")
    sub = parser.add_subparsers(dest='command', required=True)

    p = sub.add_parser('seminorm', parents=[common], help="sup norms over the exhaustion compacta")
    p.add_argument('--series', required=True)
    p.add_argument('--n', type=int, nargs='+', default=[1, 2, 3, 4, 5, 6])

    p = sub.add_parser('metric', parents=[common], help="Frechet distance between two series")
    p.add_argument('--series', required=True)
    p.add_argument('--other', required=True)
    p.add_argument('--variant', choices=['bounded', 'ratio'], default='bounded')
    p.add_argument('--k-max', type=int)

    p = sub.add_parser('hadamard', parents=[common], help="three-circle convexity residual")
    p.add_argument('--series', required=True)
    p.add_argument('--radii', type=float, nargs=3, default=DEFAULT_RADII)
    p.add_argument('--csv')

    p = sub.add_parser('maxset', parents=[common], help="maximum-modulus set on a circle")
    p.add_argument('--series', required=True)
    p.add_argument('--radius', type=float, default=1.0)
    p.add_argument('--csv')

    p = sub.add_parser('rotation-test', parents=[common], help="three-circle rotation test")
    p.add_argument('--series', required=True)
    p.add_argument('--radii', type=float, nargs=3, default=DEFAULT_RADII)

    p = sub.add_parser('classify', parents=[common], help="isometry classification of an operator matrix")
    p.add_argument('--matrix', required=True)
    p.add_argument('--levels', type=int, default=4)
    p.add_argument('--probes', type=int, default=8)

    p = sub.add_parser('comptest', parents=[common], help="composition-operator test")
    p.add_argument('--matrix', required=True)
    p.add_argument('--n-max', type=int)

    p = sub.add_parser('factorize', parents=[common], help="unimodular factorization")
    p.add_argument('--series', required=True)
    p.add_argument('--s-hint', type=float)

    p = sub.add_parser('winding', parents=[common], help="winding number on a circle")
    p.add_argument('--series', required=True)
    p.add_argument('--radius', type=float, default=1.0)

    for name, helptext in (('spectrum', "spectrum and eigenvector witnesses"),
                           ('eigencheck', "eigenpair residual"),
                           ('resolvent', "solve (T - lambda) f = g")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        if name != 'resolvent':
            p.add_argument('--kind', choices=['Rotation', 'Inversion'], default='Rotation')
        p.add_argument('--alpha', type=complex, default=1 + 0j)
        group = p.add_mutually_exclusive_group()
        group.add_argument('--beta', type=complex)
        group.add_argument('--theta', help="beta = exp(2 pi i theta), e.g. 'sqrt(2) - 1'")
        if name == 'spectrum':
            p.add_argument('--n-root', type=int)
            p.add_argument('--aperiodic', action='store_true')
        else:
            p.add_argument('--lambda', dest='eigenvalue', type=complex, required=True)
            p.add_argument('--series', required=True)

    p = sub.add_parser('diophantine', parents=[common], help="small-divisor gap profile")
    p.add_argument('--xi', required=True, help="irrational, e.g. 'sqrt(2) - 1'")
    p.add_argument('--r', required=True, help="rational p/q, not an integer")
    p.add_argument('--K', type=int, default=10000)
    p.add_argument('--gamma', type=float)
    p.add_argument('--tau', type=float)
    p.add_argument('--csv')

    # --N counts Liouville terms here, not the truncation degree
    p = sub.add_parser('liouville', parents=[_common_parser(with_degree=False)],
                       help="Liouville exponents and growth certificates")
    p.add_argument('--N', dest='terms', type=int, default=5, help="number of terms")

    p = sub.add_parser('corpus', parents=[common], help="write the fixture corpus")
    p.add_argument('--dir', required=True)
    p.add_argument('--count', type=int, default=5)

    return parser


def parse_tolerances(items):
    """['name=value', ...] -> {name: value}"""
    overrides = {}
    for item in items:
        name, sep, value = item.partition('=')
        if not sep:
            raise MalformedInputError(f"tolerance override '{item}' must look like name=value")
        try:
            overrides[name.strip()] = float(value)
        except ValueError as e:
            raise MalformedInputError(f"tolerance {name} has non-numeric value '{value}'") from e
    return overrides


def run_config_from_args(args):
    """Validate the shared options into a RunConfig"""
    values = {
        'R': args.R,
        'N': getattr(args, 'N', None),
        'precision_bits': args.bits,
        'seed': args.seed,
        'tolerances': parse_tolerances(args.tol),
        'output_path': args.out,
        'reproducible': args.reproducible,
    }
    try:
        return RunConfig(**{key: value for key, value in values.items() if value is not None})
    except ValidationError as e:
        raise MalformedInputError(f"invalid run configuration: {e}") from e


def _digest(args):
    paths = {name: getattr(args, name) for name in INPUT_FILES if getattr(args, name, None)}
    params = {key: value for key, value in vars(args).items() if key not in COMMON_OPTIONS and key not in paths}
    return inputs_digest(paths, params)


def execute(args):
    """
    Run one parsed command and write its report

    Returns:
        int: Exit code
    """
    started = time.perf_counter()
    saved = dict(config.TOLERANCES)
    run_config = RunConfig(output_path=args.out, reproducible=args.reproducible)
    digest = ''
    try:
        run_config = run_config_from_args(args)
        config.TOLERANCES.update(run_config.tolerances)
        logger.info(f"Running {args.command}")
        result, diagnostics, exit_code = COMMANDS[args.command](args, run_config)
        digest = _digest(args)
    except AnnulusError as e:
        logger.error(f"{args.command} failed: {type(e).__name__}: {e}")
        result = {}
        diagnostics = {'error': type(e).__name__, 'message': str(e)}
        exit_code = e.exit_code
    finally:
        config.TOLERANCES.clear()
        config.TOLERANCES.update(saved)

    elapsed_ms = (time.perf_counter() - started) * 1000.0
    report = build_report(args.command, run_config, digest, result, diagnostics, elapsed_ms)
    write_report(report, run_config.output_path)
    if args.pdf:
        write_report_pdf(report.model_dump(mode='json'), args.pdf)
    logger.info(f"{args.command} finished with exit code {exit_code}")
    return exit_code


def _option_value(argv, name):
    """Value of --name in a raw argument list, None when absent"""
    for i, item in enumerate(argv):
        if item == name and i + 1 < len(argv):
            return argv[i + 1]
        if item.startswith(name + '='):
            return item.partition('=')[2]
    return None


def report_usage_error(argv, error):
    """
    Write the error report for arguments that did not parse

    No report is written when the command itself is unknown.

    Returns:
        int: Exit code
    """
    setup_logging(_option_value(argv, '--log-level') or config.LOG_LEVEL)
    logger.error(f"Invalid arguments: {error}")
    command = argv[0] if argv and argv[0] in COMMANDS else None
    if command is None:
        return error.exit_code
    out = _option_value(argv, '--out')
    run_config = RunConfig(output_path=out, reproducible='--reproducible' in argv)
    diagnostics = {'error': type(error).__name__, 'message': str(error)}
    write_report(build_report(command, run_config, '', {}, diagnostics, 0.0), out)
    return error.exit_code


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = build_parser().parse_args(argv)
    except MalformedInputError as e:
        return report_usage_error(argv, e)
    setup_logging(args.log_level)
    return execute(args)


if __name__ == '__main__':
    sys.exit(main())
