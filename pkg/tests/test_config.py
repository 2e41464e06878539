import logging

import pytest

from rgcbench.config import ConfigDefaults, JobConfig
from rgcbench.exceptions import HelpfulError
from rgcbench.families import Family

BASE = """
[Job]
Family = {family}
D = 3
Genus = 1
Boundaries = 2
DegreeWindow = {window}
MaxEdges = 5
Seed = 7

[Checks]
Prime = {prime}

[Output]
Format = table

[Runtime]
Workers = 1
DebugLevel = DEBUG
"""


@pytest.fixture
def write_config(tmp_path):
    def write(family='orgc', window='-3..-1', prime=32003, text=None):
        path = tmp_path / 'options.ini'
        path.write_text(text if text is not None else BASE.format(family=family, window=window, prime=prime))
        return str(path)
    return write


def test_reads_values(write_config):
    config = JobConfig(write_config(), environ={})
    assert config.family is Family.ORGC
    assert (config.d, config.genus, config.boundaries) == (3, 1, 2)
    assert config.degree_window == range(-3, 0)
    assert config.max_edges == 5
    assert config.seed == 7
    assert config.output_format == 'table'
    assert config.debug_level == logging.DEBUG
    assert config.debug_mode


def test_fallbacks(write_config):
    config = JobConfig(write_config(window=''), environ={})
    assert config.degree_window is None
    assert config.samples == ConfigDefaults.samples
    assert config.exhaustive_edges == 4
    assert config.pcy_max_hairs == ConfigDefaults.pcy_max_hairs
    assert config.hairs == (0, 0)
    assert config.edges is None
    assert not config.embed_timing


def test_precedence(write_config):
    environ = {'RGCBENCH_WORKERS': '4', 'RGCBENCH_CACHE_DIR': '/tmp/from-env'}
    config = JobConfig(write_config(), {'workers': 2, 'family': 'rgc', 'seed': None}, environ=environ)
    assert config.workers == 2
    assert config.cache_dir == '/tmp/from-env'
    assert config.family is Family.RGC
    assert config.seed == 7


@pytest.mark.parametrize('kwargs', [
    dict(family='nope'),
    dict(window='3..1'),
    dict(prime=32004),
    dict(text='[Job]\nFamily = rgc\n'),
])
def test_invalid(write_config, kwargs):
    with pytest.raises(HelpfulError):
        JobConfig(write_config(**kwargs), environ={})


def test_unknown_override(write_config):
    with pytest.raises(HelpfulError):
        JobConfig(write_config(), {'colour': 'blue'}, environ={})


def test_spec_follows_family(write_config):
    config = JobConfig(write_config(), environ={})
    spec = config.spec()
    assert spec.name == 'orgc_d3_g1_m2'
    assert config.spec(Family.ORGC1).m == 1
    assert config.spec(Family.RGC, 2).name == 'rgc_d2_g1_m2'
    assert config.spec(Family.MIXED).edges == 5


def test_pcy_hairs(write_config):
    config = JobConfig(write_config(family='pcy'), {'hairs': '2, 1', 'genus': 'none', 'boundaries': 'none'},
                       environ={})
    spec = config.spec()
    assert spec.hairs == (2, 1)
    assert spec.g is None and spec.m is None


def test_as_dict_is_plain(write_config):
    data = JobConfig(write_config(), environ={}).as_dict()
    assert data['family'] == 'orgc'
    assert data['degree_window'] == [-3, -1]
    assert 'cache_dir' not in data


def test_negative_exhaustive_edges(write_config):
    text = BASE.format(family='rgc', window='', prime=32003).replace('[Checks]\n', '[Checks]\nExhaustiveEdges = -1\n')
    with pytest.raises(HelpfulError):
        JobConfig(write_config(text=text), environ={})
