'''
Insertion of one-boundary graphs into vertices, the induced pre-Lie product
and Lie bracket, and verifiers for their axioms.
'''
from __future__ import annotations

import itertools
import logging
import random
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .canonical import CanonicalCache, Diagram, GraphClass
from .chain import ChainVector
from .exceptions import InvariantViolation, WrongFamily
from .families import Family, FamilySpec, degree
from .quiver import is_acyclic
from .reports import CheckReport
from .ribbon import DirectionData, OrientationData, RibbonGraph

log = logging.getLogger(__name__)

ONE_BOUNDARY = (Family.RGC1, Family.ORGC1)


def one_edge(spec: FamilySpec) -> Diagram:
    '''The single edge 0 - 1 between two univalent vertices, directed 0 -> 1 when needed'''
    if spec.family not in ONE_BOUNDARY:
        raise WrongFamily("the one-edge graph lives in rgc1 and orgc1")
    graph = RibbonGraph((0, 1), (1, 0))
    dirs = DirectionData(frozenset({0})) if spec.family.directed else None
    if spec.odd:
        edge_dirs = None if spec.family.directed else frozenset({0})
        orientation = OrientationData(True, (('v', 0), ('v', 1)), edge_dirs, 1)
    else:
        orientation = OrientationData(False, (('e', 0),), None, 1)
    return Diagram(graph, orientation, spec.tag, dirs)


def placements(cycle: Sequence[int], corners: int) -> Iterator[List[List[int]]]:
    """
    Cyclic-order-preserving maps of the half-edges of a vertex into a cycle
    of corners, as the ordered half-edges landing in each corner.
    """
    first, rest = cycle[0], list(cycle[1:])
    for j in range(corners):
        for offsets in itertools.combinations_with_replacement(range(corners + 1), len(rest)):
            per = [[] for _ in range(corners)]
            before = []
            for h, t in zip(rest, offsets):
                if t == corners:
                    before.append(h)
                else:
                    per[(j + t) % corners].append(h)
            per[j] = before + [first] + per[j]
            yield per


def _glued_orientation(host: OrientationData, vertex: Sequence[int], guest: OrientationData) -> OrientationData:
    sign = host.sign * guest.sign
    if not host.odd:
        return OrientationData(False, host.order + guest.order, None, sign)
    position = host.index_of('v', vertex)
    rest = host.order[:position] + host.order[position + 1:]
    if position % 2:
        sign = -sign
    edge_dirs = None
    if host.edge_dirs is not None and guest.edge_dirs is not None:
        edge_dirs = host.edge_dirs | guest.edge_dirs
    return OrientationData(True, guest.order + rest, edge_dirs, sign)


def insert_boundary(host: Diagram, vertex: Sequence[int], guest: Diagram, *, tag: Optional[str] = None) -> List[Diagram]:
    """
    Every way of replacing `vertex` of host by the unique boundary of guest.
    Guest half-edges are renamed h + host.n_half.
    """
    if len(guest.graph.boundaries) != 1:
        raise WrongFamily("only a one-boundary graph can be inserted")
    if tuple(vertex) not in host.graph.vertices or host.is_phantom(vertex[0]):
        raise InvariantViolation("%s is not an internal vertex" % (tuple(vertex),))

    n = host.n_half
    shift = lambda h: h + n
    corners = [shift(h) for h in reversed(guest.graph.boundaries[0])]
    base0 = list(host.graph.sigma0) + [shift(h) for h in guest.graph.sigma0]
    sigma1 = tuple(host.graph.sigma1) + tuple(shift(h) for h in guest.graph.sigma1)

    dirs = None
    if host.dirs is not None or guest.dirs is not None:
        sources = set(host.dirs.sources if host.dirs else ())
        sources |= {shift(h) for h in (guest.dirs.sources if guest.dirs else ())}
        dirs = DirectionData(frozenset(sources))

    orientation = _glued_orientation(host.orientation, vertex, guest.orientation.shifted(n))
    terms = []
    for per_corner in placements(vertex, len(corners)):
        sigma0 = list(base0)
        for corner, landed in zip(corners, per_corner):
            if not landed:
                continue
            chain = [corner] + landed + [base0[corner]]
            for here, there in zip(chain, chain[1:]):
                sigma0[here] = there
        graph = RibbonGraph(tuple(sigma0), sigma1)
        if dirs is not None and not is_acyclic(graph, dirs):
            raise InvariantViolation("insertion produced a directed cycle")
        terms.append(Diagram(graph, orientation, tag or host.tag, dirs))
    return terms


def _terms(item) -> List[Tuple[Diagram, object]]:
    if isinstance(item, ChainVector):
        return list(item.terms())
    if isinstance(item, GraphClass):
        return [] if item.is_zero else [(item.representative, item.sign)]
    return [(item, 1)]


def _check(spec: FamilySpec, *items):
    if spec.family not in ONE_BOUNDARY:
        raise WrongFamily("the bracket lives on rgc1 and orgc1, not %s" % spec.family.value)
    for item in items:
        for diagram, _ in _terms(item):
            if diagram.tag != spec.tag:
                raise WrongFamily("graph tagged %r handed to %s" % (diagram.tag, spec.name))


class InsertionTable:
    """
    Memo of pre-Lie products of canonical representatives, keyed by the
    pair of canonical keys. Products are bilinear, so a product of
    arbitrary vectors is a combination of stored entries.
    """

    def __init__(self, spec: FamilySpec, cache: Optional[CanonicalCache] = None):
        self.spec = spec
        self.cache = cache if cache is not None else CanonicalCache()
        self._products: Dict[Tuple[bytes, bytes], ChainVector] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._products)

    def vector(self, item) -> ChainVector:
        if isinstance(item, ChainVector):
            return item
        return ChainVector.of(item, 1, self.cache)

    def product(self, x_key: bytes, x_rep: Diagram, y_key: bytes, y_rep: Diagram) -> ChainVector:
        '''x_rep o y_rep; the stored vector must not be mutated'''
        token = (x_key, y_key)
        found = self._products.get(token)
        if found is not None:
            self.hits += 1
            return found
        self.misses += 1
        out = ChainVector()
        for cycle in x_rep.internal_vertices:
            for term in insert_boundary(x_rep, cycle, y_rep):
                out.add_diagram(term, 1, self.cache)
        self._products[token] = out
        log.noise("%s: %d terms in product %d", self.spec.name, len(out), len(self._products))
        return out


def _table(spec: FamilySpec, cache: Optional[CanonicalCache], table: Optional[InsertionTable]) -> InsertionTable:
    if table is not None:
        return table
    return InsertionTable(spec, cache)


def pre_lie(x, y, spec: FamilySpec, cache: Optional[CanonicalCache] = None,
            table: Optional[InsertionTable] = None) -> ChainVector:
    '''x o y: sum over vertices of x of the insertion of y'''
    _check(spec, x, y)
    table = _table(spec, cache, table)
    vx, vy = table.vector(x), table.vector(y)
    out = ChainVector()
    for kx, a in vx.items():
        rx = vx.representative(kx)
        for ky, b in vy.items():
            out.add_vector(table.product(kx, rx, ky, vy.representative(ky)), a * b)
    return out


def bracket(x, y, spec: FamilySpec, cache: Optional[CanonicalCache] = None,
            table: Optional[InsertionTable] = None) -> ChainVector:
    '''[x, y] = x o y - (-1)^(|x||y|) y o x, extended bilinearly over homogeneous terms'''
    _check(spec, x, y)
    table = _table(spec, cache, table)
    vx, vy = table.vector(x), table.vector(y)
    out = ChainVector()
    for kx, a in vx.items():
        rx = vx.representative(kx)
        dx = degree(spec, rx)
        for ky, b in vy.items():
            ry = vy.representative(ky)
            sign = -1 if dx * degree(spec, ry) % 2 else 1
            out.add_vector(table.product(kx, rx, ky, ry), a * b)
            out.add_vector(table.product(ky, ry, kx, rx), -sign * a * b)
    return out


def rgc1_delta(item, spec: FamilySpec, cache: Optional[CanonicalCache] = None,
               table: Optional[InsertionTable] = None) -> ChainVector:
    '''The differential [one_edge, -]'''
    return bracket(one_edge(spec), item, spec, cache, table)


def lie_normalisation(spec: FamilySpec, graph_degree: int) -> int:
    '''c with [one_edge, x] = c * (vertex splitting of x) for x of the given degree'''
    parity = -1 if graph_degree % 2 else 1
    if spec.family.directed:
        return -1 if spec.odd else -parity
    return -2 if spec.odd else -2 * parity


def module_action(host, guest, host_spec: FamilySpec, cache: Optional[CanonicalCache] = None) -> ChainVector:
    """
    Right action of a one-boundary graph on a labelled RGC/ORGC graph by
    insertion into each vertex. Boundary labels follow the host boundary
    each new boundary grows from.
    """
    if host_spec.family not in (Family.RGC, Family.ORGC):
        raise WrongFamily("module action is defined on rgc and orgc")
    out = ChainVector()
    for base, a in _terms(host):
        for inserted, b in _terms(guest):
            if len(inserted.graph.boundaries) != 1:
                raise WrongFamily("only a one-boundary graph can act")
            for cycle in base.internal_vertices:
                for term in insert_boundary(base, cycle, inserted, tag=host_spec.tag):
                    out.add_diagram(_inherit_labels(term, base), a * b, cache)
    return out


def _inherit_labels(term: Diagram, host: Diagram) -> Diagram:
    graph = term.graph
    by_boundary = {}
    for h in range(host.n_half):
        by_boundary.setdefault(graph.boundary_of[h], host.labels[h])
    labels = tuple(by_boundary[graph.boundary_of[h]] for h in range(graph.n_half))
    return Diagram(graph, term.orientation, term.tag, term.dirs, labels)


def _tuples(graded, small, k, samples, rng):
    """
    Every multiset of k generators from `small`, then `samples` seeded draws
    of k generators from all of `graded`. Multisets suffice for identities
    that are symmetric up to sign once antisymmetry holds.
    """
    chosen = list(itertools.combinations_with_replacement(small, k))
    if graded:
        chosen.extend(tuple(rng.choice(graded) for _ in range(k)) for _ in range(samples))
    return chosen


def check_axioms(spec: FamilySpec, generators: Sequence[Diagram], *, exhaustive_edges: int = 4,
                 samples: int = 200, seed: int = 0, cache: Optional[CanonicalCache] = None,
                 report: Optional[CheckReport] = None, table: Optional[InsertionTable] = None) -> CheckReport:
    """
    Antisymmetry, graded Jacobi, square-zero and Leibniz for [one_edge, -],
    and agreement of [one_edge, -] with the scaled vertex splitting.

    Pairs and triples run over every multiset of generators with at most
    exhaustive_edges edges, plus `samples` seeded draws from all generators.
    """
    from .chaincx import split_vertex_terms

    report = report or CheckReport('axioms', seed=seed)
    table = _table(spec, cache, table)
    cache = table.cache
    rng = random.Random(seed)

    graded = [(i, g, degree(spec, g)) for i, g in enumerate(generators)]
    small = [entry for entry in graded if len(entry[1].internal_edges) <= exhaustive_edges]
    scope = 'E <= %d: %d generators, plus %d sampled' % (exhaustive_edges, len(small), samples if graded else 0)

    inner: Dict[Tuple[int, int], ChainVector] = {}

    def bracket_of(x, y):
        token = (x[0], y[0])
        if token not in inner:
            inner[token] = bracket(x[1], y[1], spec, cache, table)
        return inner[token]

    tau = one_edge(spec)
    report.expect('%s [tau, tau] = 0' % spec.name, not bracket(tau, tau, spec, cache, table))

    pairs = _tuples(graded, small, 2, samples, rng)
    bad = 0
    for x, y in pairs:
        sign = -1 if x[2] * y[2] % 2 else 1
        if bracket_of(x, y) + bracket_of(y, x) * sign:
            bad += 1
    report.expect('%s antisymmetry (%d pairs, %s)' % (spec.name, len(pairs), scope), not bad,
                  '%d failures' % bad if bad else '')

    triples = _tuples(graded, small, 3, samples, rng)
    bad = 0
    for x, y, z in triples:
        total = ChainVector()
        for a, b, c in ((x, y, z), (y, z, x), (z, x, y)):
            sign = -1 if a[2] * c[2] % 2 else 1
            total.add_vector(bracket(a[1], bracket_of(b, c), spec, cache, table), sign)
        if total:
            bad += 1
    report.expect('%s graded Jacobi (%d triples, %s)' % (spec.name, len(triples), scope), not bad,
                  '%d failures' % bad if bad else '')

    bad_square = bad_split = 0
    deltas: Dict[int, ChainVector] = {}
    for i, x, dx in graded:
        delta = rgc1_delta(x, spec, cache, table)
        deltas[i] = delta
        if rgc1_delta(delta, spec, cache, table):
            bad_square += 1
        scaled = split_vertex_terms(x, spec, cache) * lie_normalisation(spec, dx)
        if delta != scaled:
            bad_split += 1
    report.expect('%s delta^2 = 0' % spec.name, not bad_square, '%d failures' % bad_square if bad_square else '')
    report.expect('%s delta = c * splitting' % spec.name, not bad_split, '%d failures' % bad_split if bad_split else '')

    bad = 0
    for x, y in pairs:
        left = rgc1_delta(bracket_of(x, y), spec, cache, table)
        sign = -1 if x[2] % 2 else 1
        right = bracket(deltas[x[0]], y[1], spec, cache, table) + bracket(x[1], deltas[y[0]], spec, cache, table) * sign
        if left != right:
            bad += 1
    report.expect('%s Leibniz (%d pairs, %s)' % (spec.name, len(pairs), scope), not bad,
                  '%d failures' % bad if bad else '')

    log.info("axioms for %s on %d generators (%d products, %d reused): %s",
             spec.name, len(graded), len(table), table.hits, 'pass' if report.ok else 'FAIL')
    return report

