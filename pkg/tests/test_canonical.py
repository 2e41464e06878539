import pytest

from rgcbench.canonical import (HAIR_IN, HAIR_OUT, Diagram, automorphism_count, bare,
                                canonical_class, diagram_from_key, hair_code, hair_kind, hair_label)
from rgcbench.checks.canonical import planted_zero, random_graph, random_orientation
from rgcbench.exceptions import Disconnected
from rgcbench.ribbon import OrientationData, RibbonGraph
from rgcbench.utils import sign_of_permutation


def edge_orientation(graph):
    return OrientationData(False, tuple(('e', a) for a, _ in graph.edges))


def test_hair_codes():
    for kind in (HAIR_IN, HAIR_OUT):
        for label in range(1, 5):
            code = hair_code(kind, label)
            assert code > 0
            assert hair_kind(code) == kind
            assert hair_label(code) == label


def test_key_ignores_naming(planar_theta):
    perm = [4, 2, 0, 5, 1, 3]
    first = canonical_class(bare(planar_theta))
    second = canonical_class(bare(planar_theta).relabel(perm))
    assert first.key == second.key


def test_planar_and_torus_differ(planar_theta, torus_theta):
    assert canonical_class(bare(planar_theta)).key != canonical_class(bare(torus_theta)).key


def test_automorphisms_of_thetas(planar_theta, torus_theta):
    # rotations of the two vertices together with the vertex swap
    assert automorphism_count(bare(planar_theta)) == 6
    assert automorphism_count(bare(torus_theta)) == 6


def test_vertex_swap_reverses_edge_order(planar_theta):
    # swapping the vertices fixes one edge and swaps the other two
    diagram = Diagram(planar_theta, edge_orientation(planar_theta))
    assert canonical_class(diagram).is_zero


def test_planted_zero():
    assert canonical_class(planted_zero()).is_zero


def test_disconnected_has_no_key():
    graph = RibbonGraph((0, 1, 2, 3), (1, 0, 3, 2))
    with pytest.raises(Disconnected):
        canonical_class(bare(graph))


def test_representative_is_fixed_point(rng, cache):
    done = 0
    while done < 50:
        graph = random_graph(rng, 2 * rng.randint(1, 5))
        if not graph.is_connected:
            continue
        done += 1
        cls = canonical_class(Diagram(graph, random_orientation(rng, graph, done % 2 == 1)), cache)
        again = canonical_class(cls.representative, cache)
        assert again.key == cls.key
        assert again.is_zero == cls.is_zero
        if not cls.is_zero:
            assert again.sign == 1


def test_relabel_keeps_sign_and_swap_flips(rng, cache):
    done = 0
    while done < 100:
        n_half = 2 * rng.randint(1, 8)
        graph = random_graph(rng, n_half)
        if not graph.is_connected:
            continue
        done += 1
        diagram = Diagram(graph, random_orientation(rng, graph, rng.random() < 0.5))
        perm = list(range(n_half))
        rng.shuffle(perm)
        before = canonical_class(diagram, cache)
        after = canonical_class(diagram.relabel(perm), cache)
        assert before.key == after.key
        assert before.is_zero == after.is_zero
        if before.is_zero:
            continue
        assert before.sign == after.sign
        if len(diagram.orientation.order) >= 2:
            swapped = diagram.with_orientation(diagram.orientation.swapped(0, 1))
            assert canonical_class(swapped, cache).sign == -before.sign


def test_key_decodes_to_same_class(torus_theta):
    cls = canonical_class(bare(torus_theta))
    assert canonical_class(diagram_from_key(cls.key)).key == cls.key


def moved_items(orientation, perm):
    '''item i goes to position perm[i]'''
    order = [None] * len(orientation.order)
    for i, item in enumerate(orientation.order):
        order[perm[i]] = item
    return OrientationData(orientation.odd, tuple(order), orientation.edge_dirs, orientation.sign)


def test_reordering_signs_multiply(rng, cache):
    done = 0
    while done < 60:
        graph = random_graph(rng, 2 * rng.randint(2, 7))
        if not graph.is_connected:
            continue
        diagram = Diagram(graph, random_orientation(rng, graph, rng.random() < 0.5))
        before = canonical_class(diagram, cache)
        if before.is_zero:
            continue
        done += 1
        k = len(diagram.orientation.order)
        r, s = list(range(k)), list(range(k))
        rng.shuffle(r)
        rng.shuffle(s)
        composite = [s[r[i]] for i in range(k)]
        assert sign_of_permutation(composite) == sign_of_permutation(r) * sign_of_permutation(s)

        once = diagram.with_orientation(moved_items(diagram.orientation, r))
        twice = once.with_orientation(moved_items(once.orientation, s))
        assert canonical_class(once, cache).sign == sign_of_permutation(r) * before.sign
        assert canonical_class(twice, cache).sign == sign_of_permutation(composite) * before.sign
