import pytest

from rgcbench.chaincx import basis_provider, split_vertex_terms
from rgcbench.enumeration import default_window
from rgcbench.exceptions import WrongFamily
from rgcbench.families import Family, FamilySpec, degree
from rgcbench.liealg import (InsertionTable, bracket, check_axioms, insert_boundary, lie_normalisation,
                             module_action, one_edge, placements, pre_lie, rgc1_delta)

RGC1 = FamilySpec(Family.RGC1, 2, 1, 1)
ORGC1 = FamilySpec(Family.ORGC1, 3, 1, 1)


def generators(spec, max_edges, cache):
    provider = basis_provider(cache=cache)
    gens = []
    for k in default_window(spec, max_edges):
        result = provider(spec, k)
        gens.extend(result.representative(key) for key in result)
    return gens


@pytest.mark.parametrize('spec', [RGC1, ORGC1, FamilySpec(Family.RGC1, 3, 1, 1)])
def test_one_edge(spec):
    tau = one_edge(spec)
    assert degree(spec, tau) == 1
    assert len(tau.graph.boundaries) == 1
    assert not bracket(tau, tau, spec)


def test_one_edge_needs_one_boundary_family():
    with pytest.raises(WrongFamily):
        one_edge(FamilySpec(Family.RGC, 2, 0, 3))


@pytest.mark.parametrize('k, corners, count', [(1, 1, 1), (1, 3, 3), (2, 2, 6), (3, 2, 12)])
def test_placements(k, corners, count):
    found = list(placements(tuple(range(k)), corners))
    assert len(found) == count
    for per in found:
        assert sorted(h for landed in per for h in landed) == list(range(k))


def test_insertion_keeps_one_boundary(cache):
    tau = one_edge(RGC1)
    for host in generators(RGC1, 3, cache):
        for cycle in host.internal_vertices:
            for term in insert_boundary(host, cycle, tau):
                assert len(term.graph.boundaries) == 1
                assert term.graph.genus == host.graph.genus
                assert len(term.graph.edges) == len(host.graph.edges) + 1


def test_insertion_needs_one_boundary(planar_theta, torus_theta):
    from rgcbench.canonical import bare
    with pytest.raises(WrongFamily):
        insert_boundary(bare(torus_theta), (0, 1, 2), bare(planar_theta))


@pytest.mark.parametrize('spec, parity, expected', [
    (RGC1, 0, -2), (RGC1, 1, 2),
    (FamilySpec(Family.RGC1, 3, 1, 1), 0, -2),
    (ORGC1, 1, -1),
    (FamilySpec(Family.ORGC1, 2, 1, 1), 0, -1), (FamilySpec(Family.ORGC1, 2, 1, 1), 1, 1),
])
def test_lie_normalisation(spec, parity, expected):
    assert lie_normalisation(spec, parity) == expected


@pytest.mark.parametrize('spec', [RGC1, ORGC1])
def test_bracket_with_tau_is_splitting(spec, cache):
    for x in generators(spec, 4, cache):
        scaled = split_vertex_terms(x, spec, cache) * lie_normalisation(spec, degree(spec, x))
        assert rgc1_delta(x, spec, cache) == scaled


@pytest.mark.parametrize('spec', [RGC1, ORGC1])
def test_axioms_small(spec, cache):
    report = check_axioms(spec, generators(spec, 3, cache), samples=20, seed=1, cache=cache)
    assert report.ok, report.table()


def test_pre_lie_degree(cache):
    gens = generators(RGC1, 3, cache)
    for x in gens:
        for y in gens:
            for rep, _ in pre_lie(x, y, RGC1, cache).terms():
                assert degree(RGC1, rep) == degree(RGC1, x) + degree(RGC1, y)
                assert rep.graph.genus == x.graph.genus + y.graph.genus


def test_module_action_shape(cache):
    host_spec = FamilySpec(Family.RGC, 2, 0, 3)
    provider = basis_provider(cache=cache)
    tau = one_edge(RGC1)
    for key in provider(host_spec, -2):
        host = provider(host_spec, -2).representative(key)
        for rep, _ in module_action(host, tau, host_spec, cache).terms():
            assert degree(host_spec, rep) == -1
            assert len(rep.graph.boundaries) == 3
            assert rep.graph.genus == 0
            assert sorted(set(rep.labels)) == [1, 2, 3]


def test_insertion_table_reuses_products(cache):
    gens = generators(RGC1, 3, cache)
    table = InsertionTable(RGC1, cache)
    for x in gens:
        for y in gens:
            assert pre_lie(x, y, RGC1, cache, table) == pre_lie(x, y, RGC1, cache)
    stored = len(table)
    assert stored == len(gens) ** 2
    for x in gens:
        for y in gens:
            pre_lie(x, y, RGC1, cache, table)
    assert len(table) == stored
    assert table.hits >= stored


def test_table_is_bilinear(cache):
    x, y = generators(RGC1, 4, cache)[:2]
    table = InsertionTable(RGC1, cache)
    total = pre_lie(x, y, RGC1, cache, table) * 2 + pre_lie(y, y, RGC1, cache, table)
    combined = table.vector(x) * 2 + table.vector(y)
    assert pre_lie(combined, y, RGC1, cache, table) == total


def test_axioms_exhaustive_scope(cache):
    gens = generators(RGC1, 3, cache)
    small = [g for g in gens if len(g.internal_edges) <= 2]
    report = check_axioms(RGC1, gens, exhaustive_edges=2, samples=0, cache=cache)
    assert report.ok, report.table()
    pairs = len(small) * (len(small) + 1) // 2
    names = [a.name for a in report.assertions]
    assert any('antisymmetry (%d pairs' % pairs in name for name in names)
    assert any('Jacobi (' in name and 'E <= 2' in name for name in names)


@pytest.mark.slow
def test_axioms_sampled(cache):
    for spec in (RGC1, ORGC1):
        report = check_axioms(spec, generators(spec, 6, cache), samples=200, seed=0, cache=cache)
        assert report.ok, report.table()
