import pytest

from rgcbench.canonical import bare
from rgcbench.chain import ChainVector
from rgcbench.chaincx import (assemble, basis_provider, check_dsquared, cohomology, compare_rgc_orgc,
                              differential, recolor_delta, relabel_boundaries, relabel_vector,
                              split_vertex_terms)
from rgcbench.exceptions import InfiniteDegreePiece, WrongFamily
from rgcbench.families import Family, FamilySpec, degree
from rgcbench.linalg import SparseMatrix, rank, rank_q

RGC2 = FamilySpec(Family.RGC, 2, 0, 3)


@pytest.fixture
def provider(cache):
    return basis_provider(cache=cache)


def test_split_lands_in_next_degree(provider, cache):
    target = provider(RGC2, -1)
    for key in provider(RGC2, -2):
        terms = split_vertex_terms(provider(RGC2, -2).representative(key), RGC2, cache)
        assert terms
        for rep, _ in terms.terms():
            assert degree(RGC2, rep) == -1
            assert rep.graph.genus == 0
        assert set(terms.keys()) <= set(target)


def test_wrong_family_rejected(planar_theta):
    with pytest.raises(WrongFamily):
        split_vertex_terms(bare(planar_theta), RGC2)
    with pytest.raises(WrongFamily):
        recolor_delta(bare(planar_theta), RGC2)


def test_matrix_shape(provider, cache):
    matrix = assemble(RGC2, -2, provider, cache=cache)
    assert matrix.shape == (len(provider(RGC2, -1)), 3)
    assert matrix.col_basis == 'rgc_d2_g0_m3:-2'


@pytest.mark.parametrize('spec, window', [
    (RGC2, [-2, -1]),
    (FamilySpec(Family.RGC, 3, 0, 3), [-4, -3]),
    (FamilySpec(Family.RGC1, 2, 1, 1), [-2, -1]),
    (FamilySpec(Family.RGC1, 3, 1, 1), [-4, -3]),
    (FamilySpec(Family.ORGC1, 3, 1, 1), [-3]),
    (FamilySpec(Family.MIXED, 2, 1, 1, edges=4), [-1, 0]),
    (FamilySpec(Family.MIXED, 3, 1, 1, edges=4), [-1, 0]),
])
def test_square_zero(spec, window, provider, cache):
    report = check_dsquared(spec, window, provider, cache=cache)
    assert report.ok, report.table()


def test_three_holed_sphere(provider, cache):
    report = cohomology(RGC2, [-2, -1], provider, cache=cache)
    assert report.dims()[-2] == 3
    assert report.betti()[-1] == 1
    assert report.ok


def test_once_punctured_torus(provider, cache):
    report = cohomology(FamilySpec(Family.RGC1, 2, 1, 1), [-2, -1, 0], provider, cache=cache)
    assert report.betti() == {-2: 0, -1: 1, 0: 0}


def test_d1_rejected(provider):
    with pytest.raises(InfiniteDegreePiece):
        cohomology(FamilySpec(Family.RGC, 1, 0, 3), [0], provider)


def test_recolouring_is_acyclic(provider, cache):
    spec = FamilySpec(Family.MIXED, 2, 1, 1, edges=4)
    report = cohomology(spec, [-2, -1, 0, 1], provider, cache=cache)
    assert report.total_betti == 0


def test_differential_dispatch(provider, cache):
    rep = provider(RGC2, -2).representative(next(iter(provider(RGC2, -2))))
    assert differential(RGC2, rep, cache) == split_vertex_terms(rep, RGC2, cache)


def test_boundary_relabeling_commutes_with_differential(provider, cache):
    swap = {1: 2, 2: 1}
    for key in provider(RGC2, -2):
        rep = provider(RGC2, -2).representative(key)
        moved = relabel_boundaries(rep, swap)
        assert split_vertex_terms(moved, RGC2, cache) == relabel_vector(split_vertex_terms(rep, RGC2, cache), swap, cache)


def test_relabeling_needs_labels(planar_theta):
    with pytest.raises(WrongFamily):
        relabel_boundaries(bare(planar_theta), {1: 2, 2: 1})


@pytest.mark.slow
@pytest.mark.parametrize('d, g, m, window', [
    (2, 0, 3, [-1]),
    (2, 1, 1, [-1]),
    (2, 0, 4, [-4]),
    (2, 1, 2, [-4]),
    (3, 0, 3, [-4, -3]),
    (3, 1, 1, [-4, -3]),
])
def test_rgc_matches_orgc(d, g, m, window, provider, cache):
    report = compare_rgc_orgc(d, g, m, window, provider, cache=cache)
    assert report.ok, report.table()


def shuffled(matrix, rng):
    rows = list(range(matrix.n_rows))
    cols = list(range(matrix.n_cols))
    rng.shuffle(rows)
    rng.shuffle(cols)
    return SparseMatrix.from_triplets(matrix.n_rows, matrix.n_cols,
                                      [(rows[r], cols[c], value) for r, c, value in matrix.triplets()])


@pytest.mark.parametrize('spec, window', [
    (RGC2, [-2, -1]),
    (FamilySpec(Family.RGC1, 2, 1, 1), [-2, -1]),
    (FamilySpec(Family.ORGC1, 3, 1, 1), [-3]),
])
def test_betti_ignores_basis_order(spec, window, provider, cache, rng):
    report = cohomology(spec, window, provider, cache=cache)
    ranks = {}
    for k in range(min(window) - 1, max(window) + 1):
        if not len(provider(spec, k)) or not len(provider(spec, k + 1)):
            ranks[k] = 0
            continue
        matrix = assemble(spec, k, provider, cache=cache)
        ranks[k] = rank(matrix)
        for _ in range(3):
            moved = shuffled(matrix, rng)
            assert rank(moved) == ranks[k]
            assert rank_q(moved) == ranks[k]
    for k in window:
        assert len(provider(spec, k)) - ranks[k - 1] - ranks[k] == report.betti()[k]
