'''Command-line front end: enumerate, differential, cohomology and verify'''
import argparse
import logging
import os
import time

from . import constants
from .checks import CHECKS
from .config import FORMATS, JobConfig
from .exceptions import (HelpfulError, InfiniteDegreePiece, InvariantViolation, RankMismatch,
                         ResourceLimit, UnsupportedFamilyParam)
from .reports import BasisReport
from .utils import safe_print, write_file
from .workbench import Workbench

log = logging.getLogger(__name__)

# command-line flag -> JobConfig attribute
OVERRIDES = {
    'family': 'family',
    'd': 'd',
    'g': 'genus',
    'm': 'boundaries',
    'edges': 'edges',
    'hairs': 'hairs',
    'window': 'degree_window',
    'max_edges': 'max_edges',
    'seed': 'seed',
    'prime': 'prime',
    'samples': 'samples',
    'workers': 'workers',
    'cache_dir': 'cache_dir',
    'format': 'output_format',
    'report_dir': 'report_dir',
    'embed_timing': 'embed_timing',
    'drop_passing': 'drop_passing',
    'debug_level': 'debug_level',
}


def _extension(fmt):
    return '.txt' if fmt == 'table' else '.json'


def _publish(bench, report, stem):
    '''Writes a report under ReportDir and echoes it to stdout'''
    fmt = bench.config.output_format
    text = report.render(fmt)
    path = os.path.join(bench.config.report_dir, stem + _extension(fmt))
    write_file(path, [text.rstrip('\n')])
    log.info("Wrote %s", path)
    safe_print(text, end='')
    return path


def cmd_enumerate(bench, args):
    spec = bench.spec()
    started = time.perf_counter()
    sizes = {}
    for degree in bench.window(spec):
        sizes[degree] = len(bench.basis(spec, degree))
        log.info("%s degree %d: %d generators", spec.name, degree, sizes[degree])
    report = bench.stamp(BasisReport(dict(spec.as_dict(), name=spec.name), sizes), started)
    _publish(bench, report, '%s_bases' % spec.name)
    return constants.EXIT_PASS


def cmd_differential(bench, args):
    spec = bench.spec()
    for degree in bench.window(spec):
        matrix = bench.differential(spec, degree)
        path = os.path.join(bench.config.report_dir, '%s_D%d.mtx' % (spec.name, degree))
        write_file(path, [matrix.to_matrix_market().rstrip('\n')])
        log.info("D_%d of %s: %dx%d, %d non-zeros -> %s",
                 degree, spec.name, matrix.n_rows, matrix.n_cols, matrix.nnz, path)
    return constants.EXIT_PASS


def cmd_cohomology(bench, args):
    spec = bench.spec()
    report = bench.cohomology(spec)
    _publish(bench, report, '%s_cohomology' % spec.name)
    return constants.EXIT_PASS if report.ok else constants.EXIT_FAIL


def cmd_verify(bench, args):
    report = bench.run_check(args.check)
    _publish(bench, report, 'verify_%s' % report.check)
    if not report.ok:
        for failure in report.failures:
            log.error("Failed: %s %s", failure.name, failure.detail)
    return constants.EXIT_PASS if report.ok else constants.EXIT_FAIL


COMMANDS = (
    ('enumerate', cmd_enumerate, "Enumerate and cache the bases of a family over the degree window."),
    ('differential', cmd_differential, "Write the differential matrices in Matrix Market format."),
    ('cohomology', cmd_cohomology, "Compute Betti numbers over the degree window."),
    ('verify', cmd_verify, "Run one of the verifiers and report pass or fail."),
)


def _job_options():
    parser = argparse.ArgumentParser(add_help=False)
    job = parser.add_argument_group('job')
    job.add_argument('--config', help="options file (default config/options.ini)")
    job.add_argument('--family', help="rgc, orgc, rgc1, orgc1, mixed or pcy")
    job.add_argument('--d', type=int)
    job.add_argument('--g', help="genus, or 'none'")
    job.add_argument('--m', help="boundary count, or 'none'")
    job.add_argument('--edges', type=int, help="edge count of the mixed family")
    job.add_argument('--hairs', help="pcy out-hair and in-hair counts as 'p,q'")
    job.add_argument('--window', help="degree window lo..hi")
    job.add_argument('--max-edges', type=int)
    job.add_argument('--seed', type=int)

    checks = parser.add_argument_group('checks')
    checks.add_argument('--prime', type=int)
    checks.add_argument('--samples', type=int)
    checks.add_argument('--drop-passing', action='store_const', const=True)

    runtime = parser.add_argument_group('runtime')
    runtime.add_argument('--workers', type=int)
    runtime.add_argument('--cache-dir')
    runtime.add_argument('--format', choices=FORMATS)
    runtime.add_argument('--report-dir')
    runtime.add_argument('--embed-timing', action='store_const', const=True)
    runtime.add_argument('--debug-level')
    return parser


def build_parser():
    parser = argparse.ArgumentParser(
        prog='rgcbench',
        description="Exact computations in ribbon graph complexes.",
    )
    parser.add_argument('--version', action='version', version='%(prog)s ' + constants.VERSION)
    commands = parser.add_subparsers(dest='command', metavar='command')
    commands.required = True

    common = _job_options()
    for name, func, text in COMMANDS:
        sub = commands.add_parser(name, parents=[common], help=text, description=text)
        sub.set_defaults(func=func)
        if name == 'verify':
            names = sorted({c.name for c in CHECKS} | {a for c in CHECKS for a in c.aliases})
            sub.add_argument('--check', required=True, choices=names)
    return parser


def make_config(args, environ=None):
    overrides = {attr: getattr(args, flag, None) for flag, attr in OVERRIDES.items()}
    return JobConfig(args.config, overrides, environ=environ)


def main(argv=None, environ=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    bench = None
    try:
        bench = Workbench(make_config(args, environ))
        return args.func(bench, args)

    except HelpfulError as e:
        log.error(e.message)
        return constants.EXIT_USAGE

    except InfiniteDegreePiece as e:
        log.error("%s\n%s", e.message, e.hint)
        return constants.EXIT_USAGE

    except UnsupportedFamilyParam as e:
        log.error("Unsupported family parameters: %s", e.message)
        return constants.EXIT_USAGE

    except ResourceLimit as e:
        log.error("Resource limit hit: %s", e.message)
        return constants.EXIT_RESOURCE

    except (InvariantViolation, RankMismatch) as e:
        log.critical("%s: %s", e.__class__.__name__, e.message)
        return constants.EXIT_FAIL

    finally:
        if bench is not None:
            bench.shutdown()
