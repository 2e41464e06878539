import random

import pytest

from rgcbench.canonical import CanonicalCache
from rgcbench.ribbon import RibbonGraph


@pytest.fixture
def planar_theta():
    '''sigma0 = (0 1 2)(3 5 4): three boundaries, genus 0'''
    return RibbonGraph((1, 2, 0, 5, 3, 4), (3, 4, 5, 0, 1, 2))


@pytest.fixture
def torus_theta():
    '''sigma0 = (0 1 2)(3 4 5): one boundary, genus 1'''
    return RibbonGraph((1, 2, 0, 4, 5, 3), (3, 4, 5, 0, 1, 2))


@pytest.fixture
def cache():
    return CanonicalCache()


@pytest.fixture
def rng():
    return random.Random(0)
