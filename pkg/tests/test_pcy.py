import pytest

from rgcbench.canonical import HAIR_IN, HAIR_OUT, canonical_class
from rgcbench.exceptions import BadMatching, NotAGenerator, TypeMismatch, WrongFamily
from rgcbench.chain import ChainVector
from rgcbench.pcy import (PcyTable, compose, compose_vectors, corolla, generators, hair_counts, is_pcy_generator,
                          pcy_degree, pcy_delta, pcy_spec, relabel_hairs)


@pytest.mark.parametrize('d, p, q, expected', [(2, 1, 2, 0), (3, 1, 2, 0), (2, 2, 2, 0), (3, 2, 2, -1)])
def test_corolla(d, p, q, expected):
    star = corolla(d, p, q)
    assert is_pcy_generator(star)
    assert hair_counts(star) == (p, q)
    assert pcy_degree(star, d) == expected
    assert len(star.internal_vertices) == 1
    assert not star.internal_edges


def test_corolla_layout_must_list_every_hair():
    with pytest.raises(BadMatching):
        corolla(2, 1, 2, layout=[(HAIR_IN, 1), (HAIR_OUT, 1)])


def test_sources_and_targets_are_not_generators():
    assert not is_pcy_generator(corolla(2, 0, 3))
    assert not is_pcy_generator(corolla(2, 3, 0))


def test_trivalent_corolla_is_closed():
    # a split of a trivalent vertex leaves a bivalent vertex
    d = 2
    assert not pcy_delta(corolla(d, 1, 2), pcy_spec(d, 1, 2))


@pytest.mark.parametrize('d', [2, 3])
def test_delta_of_corollas(d):
    for p, q in [(2, 2), (1, 3), (3, 1), (2, 3)]:
        spec = pcy_spec(d, p, q)
        star = corolla(d, p, q)
        delta = pcy_delta(star, spec)
        for rep, _ in delta.terms():
            assert is_pcy_generator(rep)
            assert hair_counts(rep) == (p, q)
            assert pcy_degree(rep, d) == pcy_degree(star, d) + 1
        assert not delta.map(lambda rep: pcy_delta(rep, spec))


def test_delta_rejects_non_generators():
    with pytest.raises(NotAGenerator):
        pcy_delta(corolla(2, 0, 3), pcy_spec(2, 0, 3))


def test_compose_glues_one_edge():
    d = 2
    first, second = corolla(d, 1, 2), corolla(d, 2, 1)
    glued = compose(first, [(1, 1)], second, d)
    assert is_pcy_generator(glued)
    assert len(glued.internal_vertices) == 2
    assert len(glued.internal_edges) == 1
    assert hair_counts(glued) == (2, 2)
    assert pcy_degree(glued, d) == pcy_degree(first, d) + pcy_degree(second, d)
    assert sorted(glued.hairs_of_kind(HAIR_IN)) == [1, 2]
    assert sorted(glued.hairs_of_kind(HAIR_OUT)) == [1, 2]


@pytest.mark.parametrize('matching, error', [
    ([], BadMatching),
    ([(1, 1), (1, 2)], BadMatching),
    ([(3, 1)], BadMatching),
    ([(2, 1)], TypeMismatch),
])
def test_compose_errors(matching, error):
    with pytest.raises(error):
        compose(corolla(2, 2, 2), matching, corolla(2, 1, 2), 2)


def test_compose_needs_quivers(planar_theta):
    from rgcbench.canonical import bare
    with pytest.raises(WrongFamily):
        compose(bare(planar_theta), [(1, 1)], corolla(2, 1, 2), 2)


@pytest.mark.parametrize('d', [2, 3])
def test_leibniz_on_corollas(d):
    x, y = corolla(d, 2, 2), corolla(d, 2, 2)
    glued_spec = pcy_spec(d, 3, 3)
    left = pcy_delta(compose(x, [(1, 1)], y, d), glued_spec)
    sign = -1 if pcy_degree(x, d) % 2 else 1
    right = compose_vectors(pcy_delta(x, pcy_spec(d, 2, 2)), [(1, 1)], y, d)
    right.add_vector(compose_vectors(x, [(1, 1)], pcy_delta(y, pcy_spec(d, 2, 2)), d), sign)
    assert left == right


def test_relabel_hairs():
    star = corolla(2, 2, 2)
    swapped = relabel_hairs(star, ins={1: 2, 2: 1})
    assert sorted(swapped.hairs_of_kind(HAIR_IN)) == [1, 2]
    assert swapped.hairs_of_kind(HAIR_IN)[1] == star.hairs_of_kind(HAIR_IN)[2]
    with pytest.raises(BadMatching):
        relabel_hairs(star, outs={1: 2})


def test_generators_are_canonical():
    gens = generators(2, 1, 2, max_vertices=2, max_edges=2)
    assert gens
    keys = [canonical_class(g).key for g in gens]
    assert keys == sorted(keys)
    for g in gens:
        assert is_pcy_generator(g)
        assert hair_counts(g) == (1, 2)
    assert canonical_class(corolla(2, 1, 2)).key in keys


@pytest.mark.parametrize('d', [2, 3])
def test_delta_commutes_with_hair_relabeling(d, cache):
    ins, outs = {1: 2, 2: 1}, {1: 2, 2: 1}
    spec = pcy_spec(d, 2, 2)
    for gen in generators(d, 2, 2, max_vertices=2, max_edges=2, cache=cache):
        moved = pcy_delta(relabel_hairs(gen, ins, outs), spec, cache)
        expected = ChainVector()
        for rep, coeff in pcy_delta(gen, spec, cache).terms():
            expected.add_diagram(relabel_hairs(rep, ins, outs), coeff, cache)
        assert moved == expected


@pytest.mark.parametrize('d', [2, 3])
def test_table_matches_direct_evaluation(d, cache):
    table = PcyTable(d, cache)
    x, y = corolla(d, 2, 2), corolla(d, 2, 1)
    spec = pcy_spec(d, 2, 2)
    assert table.delta(x) == pcy_delta(x, spec, cache)
    assert table.compose(x, [(1, 1)], y) == compose_vectors(x, [(1, 1)], y, d, cache)
    dx = pcy_delta(x, spec, cache)
    assert compose_vectors(dx, [(1, 1)], y, d, cache, table) == compose_vectors(dx, [(1, 1)], y, d, cache)

    stored, misses = len(table), table.misses
    table.delta(x)
    table.compose(x, [(1, 1)], y)
    assert len(table) == stored
    assert table.misses == misses
    assert table.hits >= 2


def test_shapes_are_shared_across_hair_counts(cache):
    shapes = {}
    first = generators(2, 1, 2, max_vertices=2, max_edges=2, cache=cache, shapes=shapes)
    memo = dict(shapes)
    assert memo
    second = generators(2, 2, 1, max_vertices=2, max_edges=2, cache=cache, shapes=shapes)
    assert shapes == memo

    def keys(gens):
        return [canonical_class(g, cache).key for g in gens]

    assert keys(first) == keys(generators(2, 1, 2, max_vertices=2, max_edges=2, cache=cache))
    assert keys(second) == keys(generators(2, 2, 1, max_vertices=2, max_edges=2, cache=cache))


def test_single_vertex_generators_are_corollas(cache):
    # one per cyclic order of the four labelled hairs
    gens = generators(2, 2, 2, max_vertices=1, max_edges=3, cache=cache)
    assert len(gens) == 6
    assert all(not g.internal_edges and len(g.internal_vertices) == 1 for g in gens)
    assert canonical_class(corolla(2, 2, 2), cache).key in [canonical_class(g, cache).key for g in gens]
