import pytest

from rgcbench.canonical import canonical_class
from rgcbench.enumeration import (basis, classes, default_window, enumerate_supports, naive_ribbon_graphs,
                                  one_vertex_graphs, perfect_matchings, ribbon_graphs, valency_profiles)
from rgcbench.exceptions import InfiniteDegreePiece, ResourceLimit
from rgcbench.families import Family, FamilySpec, degree


@pytest.mark.parametrize('slots, count', [(0, 1), (2, 1), (4, 3), (6, 15), (8, 105)])
def test_perfect_matchings(slots, count):
    assert len(list(perfect_matchings(list(range(slots))))) == count


def test_valency_profiles():
    assert list(valency_profiles(2, 6)) == [(4, 2), (3, 3)]
    assert list(valency_profiles(3, 6)) == [(2, 2, 2)]
    assert list(valency_profiles(3, 6, least=3)) == []


@pytest.mark.parametrize('chords, count', [(1, 1), (2, 2), (3, 5)])
def test_chord_diagrams_up_to_rotation(chords, count):
    assert len(one_vertex_graphs(chords)) == count


@pytest.mark.parametrize('vertices, edges', [
    (1, 2), (2, 2), (2, 3), (3, 3), (3, 4),
    pytest.param(2, 5, marks=pytest.mark.slow),
    pytest.param(4, 5, marks=pytest.mark.slow),
    pytest.param(5, 5, marks=pytest.mark.slow),
    pytest.param(1, 6, marks=pytest.mark.slow),
    pytest.param(3, 6, marks=pytest.mark.slow),
    pytest.param(4, 6, marks=pytest.mark.slow),
    pytest.param(6, 6, marks=pytest.mark.slow),
])
def test_splitting_reaches_every_graph(vertices, edges, cache):
    grown = [canonical_class(d, cache).key for d in ribbon_graphs(vertices, edges, cache=cache)]
    naive = [canonical_class(d, cache).key for d in naive_ribbon_graphs(vertices, edges, cache=cache)]
    assert grown == naive


def test_genus_and_boundary_filters(cache):
    graphs = ribbon_graphs(2, 3, g=0, m=3, cache=cache)
    assert graphs
    for diagram in graphs:
        assert diagram.graph.genus == 0
        assert len(diagram.graph.boundaries) == 3


def test_supports():
    spec = FamilySpec(Family.RGC, 2, 0, 3)
    assert enumerate_supports(spec, 3) == [(1, 2, -2), (2, 3, -1)]
    assert default_window(spec, 3) == [-2, -1]
    oriented = FamilySpec(Family.ORGC, 3, 0, 3)
    assert enumerate_supports(oriented, 3) == [(2, 3, -3)]
    with pytest.raises(InfiniteDegreePiece):
        enumerate_supports(FamilySpec(Family.RGC, 1, 0, 3), 3)


def test_labelled_one_vertex_basis(cache):
    spec = FamilySpec(Family.RGC, 2, 0, 3)
    result = basis(spec, -2, cache=cache)
    assert len(result) == 3
    assert list(result) == sorted(result)
    for key in result:
        rep = result.representative(key)
        assert degree(spec, rep) == -2
        cls = canonical_class(rep, cache)
        assert cls.key == key and not cls.is_zero and cls.sign == 1


def test_basis_is_deterministic():
    spec = FamilySpec(Family.RGC, 2, 0, 3)
    assert basis(spec, -1).elements == basis(spec, -1).elements


def test_empty_degree_piece():
    assert len(basis(FamilySpec(Family.RGC, 2, 0, 3), -5)) == 0


def test_basis_limit(cache):
    with pytest.raises(ResourceLimit):
        basis(FamilySpec(Family.RGC, 2, 0, 3), -2, cache=cache, max_size=2)


def test_mixed_whites_are_sinks(cache):
    spec = FamilySpec(Family.MIXED, 2, 1, 1, edges=4)
    for whites in range(4):
        for rep in classes(spec, 3, 4, whites, cache).values():
            assert len(rep.white_vertices) == whites
            for cycle in rep.white_vertices:
                assert rep.flow(cycle)[1] == 0
