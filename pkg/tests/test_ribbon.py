import pytest

from rgcbench.checks.canonical import random_graph
from rgcbench.exceptions import HasFixedPoint, InvariantViolation, NotInvolution, NotPermutation
from rgcbench.ribbon import (DirectionData, OrientationData, arc_splits, build, cycles_of,
                             from_cycles, invert)


def test_cycles_and_inverse():
    perm = from_cycles(5, [(0, 2, 4), (1, 3)])
    assert perm == (2, 3, 4, 1, 0)
    assert cycles_of(perm) == [(0, 2, 4), (1, 3)]
    assert invert(perm) == (4, 3, 0, 1, 2)


@pytest.mark.parametrize('sigma0, sigma1, error', [
    ((0, 1, 1), (1, 0, 2), NotPermutation),
    ((0, 1), (0, 1), HasFixedPoint),
    ((0, 1, 2), (1, 2, 0), NotInvolution),
])
def test_build_rejects(sigma0, sigma1, error):
    with pytest.raises(error):
        build(len(sigma0), sigma0, sigma1)


def test_planar_theta(planar_theta):
    assert planar_theta.boundaries == [(0, 4), (1, 5), (2, 3)]
    assert planar_theta.genus == 0
    assert planar_theta.is_connected


def test_torus_theta(torus_theta):
    assert len(torus_theta.boundaries) == 1
    assert torus_theta.genus == 1


@pytest.mark.parametrize('name', ['planar_theta', 'torus_theta'])
def test_euler_characteristic(name, request):
    graph = request.getfixturevalue(name)
    V, E, B = len(graph.vertices), len(graph.edges), len(graph.boundaries)
    assert V - E + B == 2 - 2 * graph.genus


def test_corners_partition(planar_theta):
    by_vertex, by_boundary = planar_theta.corners()
    flat_vertex = sorted(c for cycle in by_vertex for c in cycle)
    flat_boundary = sorted(c for cycle in by_boundary for c in cycle)
    assert flat_vertex == flat_boundary
    assert len(flat_vertex) == planar_theta.n_half
    # corner (h, sigma0 h) lies on the boundary of h
    for index, cycle in enumerate(by_boundary):
        for h, _ in cycle:
            assert planar_theta.boundary_of[h] == index


@pytest.mark.parametrize('k, unordered', [(2, 1), (3, 3), (4, 6), (5, 10)])
def test_arc_splits_counts(k, unordered):
    cycle = tuple(range(k))
    assert len(arc_splits(cycle, ordered=False)) == unordered
    assert len(arc_splits(cycle, ordered=True)) == 2 * unordered
    for x, y in arc_splits(cycle, ordered=True):
        assert x and y
        assert sorted(x + y) == list(cycle)


@pytest.mark.parametrize('name', ['planar_theta', 'torus_theta'])
def test_split_keeps_surface(name, request):
    graph = request.getfixturevalue(name)
    for x, y in arc_splits(graph.vertices[0], ordered=False):
        child, a, b = graph.split(x, y)
        assert (a, b) == (graph.n_half, graph.n_half + 1)
        assert child.sigma1[a] == b
        assert len(child.vertices) == len(graph.vertices) + 1
        assert len(child.boundaries) == len(graph.boundaries)
        assert child.genus == graph.genus


def test_direction_validation(planar_theta):
    DirectionData(frozenset({0, 1, 2})).validate(planar_theta)
    with pytest.raises(InvariantViolation):
        DirectionData(frozenset({0, 3, 1, 2})).validate(planar_theta)


def test_orientation_moves():
    orientation = OrientationData(False, (('e', 0), ('e', 1), ('e', 2)))
    assert orientation.swapped(0, 2).order == (('e', 2), ('e', 1), ('e', 0))
    assert orientation.swapped(0, 2).sign == 1
    assert orientation.swapped(1, 1) == orientation
    assert orientation.removed(1).sign == -1
    assert orientation.removed(2).order == (('e', 0), ('e', 1))
    assert orientation.removed(2).sign == 1
    assert orientation.shifted(10).order == (('e', 10), ('e', 11), ('e', 12))


def test_surface_invariants_survive_relabeling(rng):
    def renamed(groups, perm):
        return sorted(sorted((perm[h], perm[k]) for h, k in group) for group in groups)

    done = 0
    while done < 50:
        graph = random_graph(rng, 2 * rng.randint(1, 7))
        if not graph.is_connected:
            continue
        done += 1
        perm = list(range(graph.n_half))
        rng.shuffle(perm)
        moved = graph.relabel(perm)
        assert moved.genus == graph.genus
        assert sorted(map(len, moved.boundaries)) == sorted(map(len, graph.boundaries))
        by_vertex, by_boundary = graph.corners()
        moved_vertex, moved_boundary = moved.corners()
        assert renamed(by_vertex, perm) == sorted(sorted(group) for group in moved_vertex)
        assert renamed(by_boundary, perm) == sorted(sorted(group) for group in moved_boundary)
