import os
import shutil
import logging
import configparser

from .constants import CACHE_PATH, DEFAULT_PRIME, REPORT_PATH
from .exceptions import HelpfulError, UnsupportedFamilyParam
from .families import Family, FamilySpec
from .utils import parse_window

log = logging.getLogger(__name__)

FORMATS = ('json', 'table', 'matrix-market')


class JobConfig:
    """
    Job settings read from an options file, then overridden by the
    environment (RGCBENCH_CACHE_DIR, RGCBENCH_WORKERS), then by `overrides`
    (command-line values; None means not given).
    """

    def __init__(self, config_file=None, overrides=None, *, environ=None):
        self.config_file = config_file or ConfigDefaults.options_file
        self.find_config()

        config = configparser.ConfigParser(interpolation=None)
        config.read(self.config_file, encoding='utf-8')

        confsections = {"Job", "Checks", "Output", "Runtime"}.difference(config.sections())
        if confsections:
            raise HelpfulError(
                "One or more required config sections are missing.",
                "Fix your config.  Each [Section] should be on its own line with "
                "nothing else on it.  The following sections are missing: {}".format(
                    ', '.join(['[%s]' % s for s in sorted(confsections)])
                ),
                preface="An error has occured parsing the config:\n"
            )

        self._confpreface = "An error has occured reading the config:\n"

        try:
            self.family = config.get('Job', 'Family', fallback=ConfigDefaults.family)
            self.d = config.getint('Job', 'D', fallback=ConfigDefaults.d)
            self.genus = config.get('Job', 'Genus', fallback=ConfigDefaults.genus)
            self.boundaries = config.get('Job', 'Boundaries', fallback=ConfigDefaults.boundaries)
            self.edges = config.get('Job', 'Edges', fallback=ConfigDefaults.edges)
            self.hairs = config.get('Job', 'Hairs', fallback=ConfigDefaults.hairs)
            self.degree_window = config.get('Job', 'DegreeWindow', fallback=ConfigDefaults.degree_window)
            self.max_edges = config.getint('Job', 'MaxEdges', fallback=ConfigDefaults.max_edges)
            self.seed = config.getint('Job', 'Seed', fallback=ConfigDefaults.seed)

            self.prime = config.getint('Checks', 'Prime', fallback=ConfigDefaults.prime)
            self.samples = config.getint('Checks', 'Samples', fallback=ConfigDefaults.samples)
            self.exhaustive_edges = config.getint('Checks', 'ExhaustiveEdges', fallback=ConfigDefaults.exhaustive_edges)
            self.pcy_max_hairs = config.getint('Checks', 'PcyMaxHairs', fallback=ConfigDefaults.pcy_max_hairs)
            self.pcy_max_vertices = config.getint('Checks', 'PcyMaxVertices', fallback=ConfigDefaults.pcy_max_vertices)
            self.pcy_max_edges = config.getint('Checks', 'PcyMaxEdges', fallback=ConfigDefaults.pcy_max_edges)
            self.drop_passing = config.getboolean('Checks', 'DropPassing', fallback=ConfigDefaults.drop_passing)

            self.output_format = config.get('Output', 'Format', fallback=ConfigDefaults.output_format)
            self.report_dir = config.get('Output', 'ReportDir', fallback=ConfigDefaults.report_dir)
            self.embed_timing = config.getboolean('Output', 'EmbedTiming', fallback=ConfigDefaults.embed_timing)

            self.workers = config.getint('Runtime', 'Workers', fallback=ConfigDefaults.workers)
            self.cache_dir = config.get('Runtime', 'CacheDir', fallback=ConfigDefaults.cache_dir)
            self.max_basis_size = config.getint('Runtime', 'MaxBasisSize', fallback=ConfigDefaults.max_basis_size)
            self.debug_level = config.get('Runtime', 'DebugLevel', fallback=ConfigDefaults.debug_level)
        except ValueError as e:
            raise HelpfulError(
                "A config value could not be read: {}".format(e),
                "Check {} for a non-numeric value in a numeric option.".format(self.config_file),
                preface=self._confpreface
            )

        self.debug_level_str = self.debug_level

        environ = os.environ if environ is None else environ
        if environ.get('RGCBENCH_CACHE_DIR'):
            self.cache_dir = environ['RGCBENCH_CACHE_DIR']
        if environ.get('RGCBENCH_WORKERS'):
            try:
                self.workers = int(environ['RGCBENCH_WORKERS'])
            except ValueError:
                log.warning("Ignoring RGCBENCH_WORKERS=%r, not a number", environ['RGCBENCH_WORKERS'])

        for key, value in (overrides or {}).items():
            if value is None:
                continue
            if not hasattr(self, key):
                raise HelpfulError(
                    "Unknown option override {!r}.".format(key),
                    "This is a bug in the command-line front end.",
                    preface=self._confpreface
                )
            setattr(self, key, value)

        self.run_checks()

        self.missing_keys = set()
        self.check_changes(config)

    def get_all_keys(self, conf):
        """Returns all config keys as a list"""
        sects = dict(conf.items())
        keys = []
        for k in sects:
            s = sects[k]
            keys += [key for key in s.keys()]
        return keys

    def check_changes(self, conf):
        exfile = ConfigDefaults.example_file
        if os.path.isfile(exfile):
            usr_keys = self.get_all_keys(conf)
            exconf = configparser.ConfigParser(interpolation=None)
            if not exconf.read(exfile, encoding='utf-8'):
                return
            ex_keys = self.get_all_keys(exconf)
            if set(usr_keys) != set(ex_keys):
                self.missing_keys = set(ex_keys) - set(usr_keys)

    @staticmethod
    def _optional_int(value):
        if value is None or isinstance(value, int):
            return value
        value = str(value).strip().lower()
        if value in ('', 'none', 'any'):
            return None
        return int(value)

    def run_checks(self):
        """
        Validation logic for job settings.
        """
        try:
            self.family = Family.parse(self.family) if not isinstance(self.family, Family) else self.family
        except UnsupportedFamilyParam as e:
            raise HelpfulError(e.message, "Set [Job] Family to one of: {}.".format(
                ', '.join(f.value for f in Family)), preface=self._confpreface)

        try:
            self.genus = self._optional_int(self.genus)
            self.boundaries = self._optional_int(self.boundaries)
            self.edges = self._optional_int(self.edges)
            if not isinstance(self.hairs, tuple):
                parts = [x for x in str(self.hairs or '').replace(',', ' ').split() if x]
                self.hairs = tuple(int(x) for x in parts) if parts else (0, 0)
            if not isinstance(self.degree_window, range):
                self.degree_window = parse_window(self.degree_window)
        except ValueError as e:
            raise HelpfulError(
                "Invalid job geometry: {}".format(e),
                "Genus, Boundaries and Edges take an integer or 'none'; Hairs takes 'p, q'; "
                "DegreeWindow takes 'lo..hi' with lo <= hi.",
                preface=self._confpreface
            )

        if len(self.hairs) != 2:
            raise HelpfulError(
                "Hairs must name two counts, got {}.".format(self.hairs),
                "Write the out-hair and in-hair counts as 'p, q'.",
                preface=self._confpreface
            )

        if self.prime < 3 or any(self.prime % k == 0 for k in range(2, int(self.prime ** 0.5) + 1)):
            raise HelpfulError(
                "Prime {} is not an odd prime.".format(self.prime),
                "Use an odd prime such as the default {}.".format(DEFAULT_PRIME),
                preface=self._confpreface
            )

        if self.workers < 1:
            raise HelpfulError(
                "Workers must be at least 1, got {}.".format(self.workers),
                "Set [Runtime] Workers to 1 to run inline.",
                preface=self._confpreface
            )

        if self.output_format not in FORMATS:
            raise HelpfulError(
                "Unknown output format {!r}.".format(self.output_format),
                "Set [Output] Format to one of: {}.".format(', '.join(FORMATS)),
                preface=self._confpreface
            )

        if min(self.max_edges, self.samples, self.exhaustive_edges) < 0:
            raise HelpfulError(
                "MaxEdges, Samples and ExhaustiveEdges cannot be negative.",
                "Fix the [Job] and [Checks] sections of {}.".format(self.config_file),
                preface=self._confpreface
            )

        if isinstance(self.debug_level, str):
            self.debug_level_str = self.debug_level
            if hasattr(logging, self.debug_level.upper()):
                self.debug_level = getattr(logging, self.debug_level.upper())
            else:
                log.warning("Invalid DebugLevel option \"{}\" given, falling back to INFO".format(self.debug_level_str))
                self.debug_level = logging.INFO
                self.debug_level_str = 'INFO'

        self.debug_mode = self.debug_level <= logging.DEBUG

    @property
    def basis_limit(self):
        return self.max_basis_size or None

    def spec(self, family=None, d=None):
        '''FamilySpec of the job, optionally for another family or d'''
        family = family or self.family
        d = self.d if d is None else d
        m = 1 if family.one_boundary else self.boundaries
        edges = self.edges
        if family is Family.MIXED and edges is None:
            edges = self.max_edges
        return FamilySpec(
            family, d, self.genus, m,
            edges=edges if family is Family.MIXED else None,
            hairs=self.hairs if family is Family.PCY else (0, 0),
            drop_passing=self.drop_passing and family.directed and family is not Family.PCY,
        )

    def as_dict(self):
        '''Settings that determine results; embedded in every report'''
        return {
            'family': self.family.value,
            'd': self.d,
            'genus': self.genus,
            'boundaries': self.boundaries,
            'edges': self.edges,
            'hairs': list(self.hairs),
            'degree_window': None if self.degree_window is None
                             else [self.degree_window.start, self.degree_window.stop - 1],
            'max_edges': self.max_edges,
            'seed': self.seed,
            'prime': self.prime,
            'samples': self.samples,
            'exhaustive_edges': self.exhaustive_edges,
            'pcy_max_hairs': self.pcy_max_hairs,
            'pcy_max_vertices': self.pcy_max_vertices,
            'pcy_max_edges': self.pcy_max_edges,
            'drop_passing': self.drop_passing,
            'max_basis_size': self.max_basis_size,
        }

    def find_config(self):
        if not os.path.isfile(self.config_file):
            if os.path.isfile(self.config_file + '.ini'):
                shutil.move(self.config_file + '.ini', self.config_file)
                log.info("Moving {0} to {1}, you should probably turn file extensions on.".format(
                    self.config_file + '.ini', self.config_file
                ))

            elif os.path.isfile(ConfigDefaults.example_file):
                os.makedirs(os.path.dirname(os.path.abspath(self.config_file)), exist_ok=True)
                shutil.copy(ConfigDefaults.example_file, self.config_file)
                log.warning('Options file not found, copying example_options.ini')

            else:
                raise HelpfulError(
                    "Your config files are missing. Neither options.ini nor example_options.ini were found.",
                    "Grab the files back from the repository or remake them yourself from the "
                    "sections documented in the README."
                )


class ConfigDefaults:
    family = 'rgc'
    d = 2
    genus = '0'
    boundaries = '3'
    edges = ''
    hairs = '0, 0'
    degree_window = ''
    max_edges = 6
    seed = 0

    prime = DEFAULT_PRIME
    samples = 200
    exhaustive_edges = 4
    pcy_max_hairs = 6
    pcy_max_vertices = 2
    pcy_max_edges = 4
    drop_passing = False

    output_format = 'json'
    report_dir = REPORT_PATH
    embed_timing = False

    workers = 1
    cache_dir = CACHE_PATH
    max_basis_size = 0
    debug_level = 'INFO'

    options_file = 'config/options.ini'
    example_file = 'config/example_options.ini'
