import os
import sys
import time
import logging

import colorlog

from .cache import BasisStore
from .canonical import CanonicalCache
from .chaincx import assemble, basis_provider, cohomology
from .checks import CHECKS
from .config import JobConfig
from .constants import LOG_FILE
from .enumeration import default_window
from .exceptions import HelpfulError
from .workers import WorkerPool

log = logging.getLogger(__name__)


class Workbench:
    """
    Owns the job configuration and everything shared between commands:
    the canonical-form cache, the basis store, the worker pool and the
    registry of checks.
    """

    def __init__(self, config=None):
        self.config = config if config is not None else JobConfig()
        self._setup_logging()

        self.cache = CanonicalCache()
        self.store = BasisStore(self.config.cache_dir)
        self.pool = WorkerPool(self.config.workers)
        self.provider = basis_provider(self.store, self.cache, self.config.basis_limit)

        self.checks = {}
        for check_class in CHECKS:
            self.checks[check_class.name] = check_class
            for alias in check_class.aliases:
                self.checks[alias] = check_class

        if self.config.missing_keys:
            log.warning("Your config is missing some options, defaults are used for: %s",
                        ', '.join(sorted(self.config.missing_keys)))

    def _setup_logging(self):
        if logging.getLogger(__package__).handlers:
            log.debug("Skipping logger setup, already set up")
            return

        shandler = logging.StreamHandler(stream=sys.stderr)
        shandler.setFormatter(colorlog.LevelFormatter(
            fmt = {
                'DEBUG': '{log_color}[{levelname}:{module}] {message}',
                'INFO': '{log_color}{message}',
                'WARNING': '{log_color}{levelname}: {message}',
                'ERROR': '{log_color}[{levelname}:{module}] {message}',
                'CRITICAL': '{log_color}[{levelname}:{module}] {message}',

                'EVERYTHING': '{log_color}[{levelname}:{module}] {message}',
                'NOISY': '{log_color}[{levelname}:{module}][{relativeCreated:.3f}] {message}',
            },
            log_colors = {
                'DEBUG':    'cyan',
                'INFO':     'white',
                'WARNING':  'yellow',
                'ERROR':    'red',
                'CRITICAL': 'bold_red',

                'EVERYTHING': 'white',
                'NOISY':      'white',
            },
            style = '{',
            datefmt = ''
        ))
        shandler.setLevel(self.config.debug_level)
        logging.getLogger(__package__).addHandler(shandler)

        if os.path.isdir(os.path.dirname(LOG_FILE)):
            fhandler = logging.FileHandler(LOG_FILE, mode='a', encoding='utf-8')
            fhandler.setFormatter(logging.Formatter(
                fmt="[%(relativeCreated).3f] %(name)s-%(levelname)s: %(message)s"
            ))
            fhandler.setLevel(logging.EVERYTHING)
            logging.getLogger(__package__).addHandler(fhandler)

        log.debug('Set logging level to %s', self.config.debug_level_str)

    def spec(self, family=None, d=None):
        return self.config.spec(family, d)

    def window(self, spec):
        if self.config.degree_window is not None:
            return list(self.config.degree_window)
        return default_window(spec, self.config.max_edges)

    def basis(self, spec, degree):
        return self.provider(spec, degree)

    def differential(self, spec, degree):
        return assemble(spec, degree, self.provider, self.pool, self.cache)

    def cohomology(self, spec, window=None):
        window = self.window(spec) if window is None else window
        started = time.perf_counter()
        report = cohomology(spec, window, self.provider, self.config.prime, self.pool, self.cache)
        self.stamp(report, started)
        return report

    def stamp(self, report, started=None):
        '''Embeds config, seed and (when enabled) timing into a report'''
        report.config = self.config.as_dict()
        report.seed = self.config.seed
        if self.config.embed_timing and started is not None:
            report.timing = time.perf_counter() - started
        return report

    def run_check(self, name):
        if name not in self.checks:
            raise HelpfulError(
                "Unknown check {!r}.".format(name),
                "Choose one of: {}.".format(', '.join(sorted(self.checks))),
                preface="An error has occured running a check:\n"
            )
        check = self.checks[name](self)
        started = time.perf_counter()
        report = check.run()
        self.stamp(report, started)
        log.info("Check %s: %s", check.name, 'passed' if report.ok else 'FAILED')
        return report

    def shutdown(self):
        self.pool.shutdown()
        log.debug("Canonical cache: %d hits, %d misses; basis store: %d hits, %d misses",
                  self.cache.hits, self.cache.misses, self.store.hits, self.store.misses)
