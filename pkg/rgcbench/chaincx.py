'''
Differentials of the complex families, their matrices and cohomology.

A differential term is built on the representative diagram of a basis
element, then canonicalized; matrices are assembled column by column in the
deterministic basis order.
'''
from __future__ import annotations

import logging
from dataclasses import replace
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Tuple

from .canonical import CanonicalCache, Diagram, GraphClass
from .chain import ChainVector
from .constants import DEFAULT_PRIME
from .enumeration import GradedBasis, basis
from .exceptions import InvariantViolation, WrongFamily
from .families import Family, FamilySpec, has_passing_vertex
from .linalg import SparseMatrix, rank
from .quiver import is_acyclic
from .reports import CheckReport, ComparisonReport, DegreeRow, RankReport
from .ribbon import OrientationData, arc_splits

log = logging.getLogger(__name__)

Provider = Callable[[FamilySpec, int], GradedBasis]


def basis_provider(store=None, cache: Optional[CanonicalCache] = None,
                   max_size: Optional[int] = None) -> Provider:
    '''Memoizing (spec, degree) -> GradedBasis'''
    memo: Dict[Tuple[FamilySpec, int], GradedBasis] = {}

    def provide(spec: FamilySpec, degree: int) -> GradedBasis:
        token = (spec, degree)
        if token not in memo:
            memo[token] = basis(spec, degree, store=store, cache=cache, max_size=max_size)
        return memo[token]

    return provide


def _unpack(item) -> Tuple[Diagram, int]:
    if isinstance(item, GraphClass):
        if item.is_zero:
            return None, 0
        return item.representative, item.sign
    return item, 1


def _check_family(spec: FamilySpec, diagram: Diagram, allowed: Iterable[Family]):
    if spec.family not in allowed:
        raise WrongFamily("%s has no such differential" % spec.family.value)
    if diagram.tag != spec.tag:
        raise WrongFamily("graph tagged %r handed to %s" % (diagram.tag, spec.name))


def transport_split(orientation: OrientationData, cycle: Sequence[int], a: int, b: int) -> OrientationData:
    """
    Orientation of a splitting of the vertex `cycle` along the new edge (a, b).
    Even: the new edge goes last. Odd: the split vertex keeps its slot as the
    vertex of a, the vertex of b goes last, and a marks the edge direction.
    """
    if not orientation.odd:
        return orientation.appended(('e', a))
    index = orientation.index_of('v', cycle)
    return orientation.replaced(index, ('v', a)).appended(('v', b)).with_edge_dir(a)


def splittings(diagram: Diagram, *, directed: bool):
    '''(child diagram, split vertex, a, b) for every vertex splitting, orientation transported'''
    for cycle in diagram.internal_vertices:
        for arc_x, arc_y in arc_splits(cycle, ordered=directed):
            child, a, b = diagram.split(arc_x, arc_y, directed=directed)
            child = child.with_orientation(transport_split(diagram.orientation, cycle, a, b))
            if directed and not is_acyclic(child.graph, child.dirs):
                raise InvariantViolation("splitting produced a directed cycle")
            yield child, cycle, a, b


def split_vertex_terms(item, spec: FamilySpec, cache: Optional[CanonicalCache] = None) -> ChainVector:
    """
    Vertex-splitting differential. Unordered cuts for undirected families,
    ordered cuts (both directions of the new edge) for directed ones.
    """
    diagram, sign = _unpack(item)
    out = ChainVector()
    if diagram is None:
        return out
    _check_family(spec, diagram, (Family.RGC, Family.ORGC, Family.RGC1, Family.ORGC1))

    for child, _, _, _ in splittings(diagram, directed=spec.family.directed):
        if spec.drop_passing and has_passing_vertex(child):
            continue
        out.add_diagram(child, sign, cache)
    log.noise("split %s: %d terms", spec.name, len(out))
    return out


def recolor_delta(item, spec: FamilySpec, cache: Optional[CanonicalCache] = None) -> ChainVector:
    '''Minus the sum over white vertices of the graph with that vertex made black'''
    diagram, sign = _unpack(item)
    out = ChainVector()
    if diagram is None:
        return out
    _check_family(spec, diagram, (Family.MIXED,))

    for cycle in diagram.white_vertices:
        colors = list(diagram.colors)
        for h in cycle:
            colors[h] = 0
        orientation = diagram.orientation
        if spec.odd:
            orientation = orientation.removed(orientation.index_of('v', cycle))
        else:
            orientation = orientation.appended(('v', cycle[0]))
        child = replace(diagram, colors=tuple(colors), orientation=orientation)
        out.add_diagram(child, -sign, cache)
    return out


def differential(spec: FamilySpec, item, cache: Optional[CanonicalCache] = None) -> ChainVector:
    if spec.family.splits:
        return split_vertex_terms(item, spec, cache)
    if spec.family is Family.MIXED:
        return recolor_delta(item, spec, cache)
    from .pcy import pcy_delta
    return pcy_delta(item, spec, cache)


def _column(job) -> List[Tuple[bytes, object]]:
    spec, diagram = job
    return list(differential(spec, diagram).items())


def assemble(spec: FamilySpec, degree: int, provider: Optional[Provider] = None, pool=None,
             cache: Optional[CanonicalCache] = None) -> SparseMatrix:
    '''Matrix of the differential from the degree piece to the next one'''
    provider = provider or basis_provider(cache=cache)
    source = provider(spec, degree)
    target = provider(spec, degree + 1)

    jobs = [(spec, source.representative(key)) for key in source]
    if pool is not None:
        columns = pool.map(_column, jobs)
    else:
        columns = (list(differential(spec, diagram, cache).items()) for _, diagram in jobs)

    triplets = []
    for col, column in enumerate(columns):
        for key, value in column:
            if key not in target:
                raise InvariantViolation(
                    "differential of %s element %d in degree %d leaves the basis of degree %d"
                    % (spec.name, col, degree, degree + 1)
                )
            triplets.append((target.position(key), col, value))

    matrix = SparseMatrix.from_triplets(
        len(target), len(source), triplets,
        row_basis='%s:%d' % (spec.name, degree + 1), col_basis='%s:%d' % (spec.name, degree),
    )
    log.debug("D_%d of %s: %r", degree, spec.name, matrix)
    return matrix


def spec_summary(spec: FamilySpec) -> dict:
    return dict(spec.as_dict(), name=spec.name)


def cohomology(spec: FamilySpec, window: Iterable[int], provider: Optional[Provider] = None,
               prime: int = DEFAULT_PRIME, pool=None, cache: Optional[CanonicalCache] = None) -> RankReport:
    """
    Betti numbers on the window from exact ranks of the differentials into,
    inside and out of it.
    """
    spec.check_grading()
    degrees = sorted(window)
    provider = provider or basis_provider(cache=cache)
    if not degrees:
        return RankReport(spec_summary(spec), prime, [], complete=True)

    lo, hi = degrees[0], degrees[-1]
    dims = {k: len(provider(spec, k)) for k in range(lo - 1, hi + 2)}
    ranks = {}
    for k in range(lo - 1, hi + 1):
        if not dims[k] or not dims[k + 1]:
            ranks[k] = 0
            continue
        ranks[k] = rank(assemble(spec, k, provider, pool, cache), prime)

    rows = [DegreeRow(k, dims[k], ranks[k - 1], ranks[k]) for k in degrees]
    report = RankReport(spec_summary(spec), prime, rows,
                        complete=ranks[lo - 1] == 0 and ranks[hi] == 0)
    for row in rows:
        if row.betti < 0:
            raise InvariantViolation("negative Betti number in degree %d of %s" % (row.degree, spec.name))
        log.info("%s degree %d: dim %d, betti %d", spec.name, row.degree, row.dim, row.betti)
    return report


def check_dsquared(spec: FamilySpec, window: Iterable[int], provider: Optional[Provider] = None,
                   pool=None, cache: Optional[CanonicalCache] = None, report: Optional[CheckReport] = None) -> CheckReport:
    '''D_{k+1} D_k = 0 exactly for every k in the window'''
    report = report or CheckReport('dsquared')
    provider = provider or basis_provider(cache=cache)
    for k in sorted(window):
        first = assemble(spec, k, provider, pool, cache)
        second = assemble(spec, k + 1, provider, pool, cache)
        product = second @ first
        report.expect('%s D%d.D%d = 0' % (spec.name, k + 1, k), product.is_zero(),
                      '' if product.is_zero() else '%d non-zero entries' % product.nnz)
    return report


def compare_rgc_orgc(d: int, g: int, m: int, window: Iterable[int], provider: Optional[Provider] = None,
                     prime: int = DEFAULT_PRIME, pool=None, cache: Optional[CanonicalCache] = None,
                     drop_passing: bool = False) -> ComparisonReport:
    '''Betti numbers of RGC_d and ORGC_(d+1) at the same genus and boundary count'''
    window = list(window)
    left = cohomology(FamilySpec(Family.RGC, d, g, m), window, provider, prime, pool, cache)
    right = cohomology(FamilySpec(Family.ORGC, d + 1, g, m, drop_passing=drop_passing),
                       window, provider, prime, pool, cache)
    report = ComparisonReport(left, right)
    log.info("RGC_%d vs ORGC_%d at (g, m) = (%d, %d): %s", d, d + 1, g, m, 'equal' if report.ok else 'different')
    return report


def relabel_boundaries(diagram: Diagram, perm: Dict[int, int]) -> Diagram:
    '''Renames boundary labels by perm (label -> label)'''
    if diagram.labels is None:
        raise WrongFamily("graph carries no boundary labels")
    if sorted(perm) != sorted(perm.values()):
        raise ValueError("boundary relabeling is not a permutation")
    return replace(diagram, labels=tuple(perm.get(label, label) for label in diagram.labels))


def relabel_vector(vector: ChainVector, perm: Dict[int, int], cache: Optional[CanonicalCache] = None) -> ChainVector:
    out = ChainVector()
    for rep, value in vector.terms():
        out.add_diagram(relabel_boundaries(rep, perm), value, cache)
    return out
