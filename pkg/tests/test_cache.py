import os

from rgcbench.cache import BasisStore
from rgcbench.enumeration import basis
from rgcbench.families import Family, FamilySpec

SPEC = FamilySpec(Family.RGC, 2, 0, 3)


def test_round_trip(tmp_path, cache):
    store = BasisStore(str(tmp_path))
    cold = basis(SPEC, -1, store=store, cache=cache)
    assert store.misses == 1
    assert os.path.isfile(store.path(SPEC, -1))

    warm = basis(SPEC, -1, store=store, cache=cache)
    assert store.hits == 1
    assert warm.elements == cold.elements
    assert set(warm.representatives) == set(cold.elements)


def test_tampered_file_is_rebuilt(tmp_path, cache):
    store = BasisStore(str(tmp_path))
    cold = basis(SPEC, -2, store=store, cache=cache)
    path = store.path(SPEC, -2)
    with open(path, 'a', encoding='utf8') as f:
        f.write('"junk"\n')
    assert store.load(SPEC, -2) is None
    assert basis(SPEC, -2, store=store, cache=cache).elements == cold.elements
    assert store.load(SPEC, -2) is not None


def test_other_spec_does_not_match(tmp_path, cache):
    store = BasisStore(str(tmp_path))
    basis(SPEC, -2, store=store, cache=cache)
    assert store.load(FamilySpec(Family.RGC, 2, 0, 3, drop_passing=True), -2) is None


def test_clear(tmp_path, cache):
    store = BasisStore(str(tmp_path))
    basis(SPEC, -2, store=store, cache=cache)
    store.clear(SPEC)
    assert store.load(SPEC, -2) is None
