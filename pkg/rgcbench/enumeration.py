'''
Generators of the complex families at a fixed degree.

Bare ribbon graphs are grown from one-vertex chord diagrams by vertex
splitting (splits preserve genus and boundary count), deduplicated at every
level, then decorated per family and canonicalized.
'''
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .canonical import (BARE_HAIR, HAIR_IN, HAIR_OUT, CanonicalCache, Diagram,
                        bare, canonical_class, hair_code, hair_kind)
from .exceptions import ResourceLimit
from .families import Family, FamilySpec, oriented, passes
from .quiver import acyclic_orientations, sinks
from .ribbon import RibbonGraph, arc_splits, from_cycles

log = logging.getLogger(__name__)


def perfect_matchings(slots: Sequence[int]) -> Iterator[List[Tuple[int, int]]]:
    if not slots:
        yield []
        return
    first = slots[0]
    for i in range(1, len(slots)):
        rest = list(slots[1:i]) + list(slots[i + 1:])
        for matching in perfect_matchings(rest):
            yield [(first, slots[i])] + matching


def _dedup(diagrams, cache) -> List[Diagram]:
    found = {}
    for diagram in diagrams:
        cls = canonical_class(diagram, cache)
        found.setdefault(cls.key, cls.representative)
    return [found[key] for key in sorted(found)]


def _matches(graph: RibbonGraph, g: Optional[int], m: Optional[int]) -> bool:
    if not graph.is_connected:
        return False
    if m is not None and len(graph.boundaries) != m:
        return False
    return g is None or graph.genus == g


def one_vertex_graphs(chords: int, hairs: int = 0, cache: Optional[CanonicalCache] = None) -> List[Diagram]:
    """
    Bare one-vertex graphs: a single rotation carrying 2*chords loop ends
    and `hairs` hair attachments, each hair closed by a phantom half-edge.
    """
    if chords < 0:
        return []
    width = 2 * chords + hairs
    if width == 0:
        return []
    n = width + hairs
    sigma0 = from_cycles(n, [range(width)])
    found = []
    for attach in itertools.combinations(range(width), hairs):
        rest = [h for h in range(width) if h not in attach]
        for matching in perfect_matchings(rest):
            sigma1 = list(range(n))
            for a, b in matching:
                sigma1[a], sigma1[b] = b, a
            for offset, h in enumerate(attach):
                phantom = width + offset
                sigma1[h], sigma1[phantom] = phantom, h
            marks = tuple([0] * width + [BARE_HAIR] * hairs) if hairs else None
            found.append(bare(RibbonGraph(sigma0, tuple(sigma1)), marks))
    return _dedup(found, cache)


def split_all(diagram: Diagram) -> Iterator[Diagram]:
    for cycle in diagram.internal_vertices:
        for arc_x, arc_y in arc_splits(cycle, ordered=False):
            yield diagram.split(arc_x, arc_y, directed=False)[0]


def ribbon_graphs(vertices: int, edges: int, g: Optional[int] = None, m: Optional[int] = None,
                  hairs: int = 0, cache: Optional[CanonicalCache] = None) -> List[Diagram]:
    """
    Connected bare ribbon graphs with the given numbers of internal vertices
    and internal edges, all internal valencies >= 2, optionally fixing genus
    and boundary count. Returned in canonical form, sorted by key.
    """
    if vertices < 1 or edges - vertices + 1 < 0:
        return []
    level = [diagram for diagram in one_vertex_graphs(edges - vertices + 1, hairs, cache)
             if _matches(diagram.graph, g, m)]
    for step in range(vertices - 1):
        level = _dedup((child for diagram in level for child in split_all(diagram)), cache)
        log.noise("ribbon_graphs(V=%d, E=%d): %d graphs at level %d", vertices, edges, len(level), step + 2)
    return level


def valency_profiles(vertices: int, half_edges: int, least: int = 2) -> Iterator[Tuple[int, ...]]:
    '''Non-increasing valency sequences summing to half_edges'''
    def rec(remaining, parts, cap):
        if parts == 0:
            if remaining == 0:
                yield ()
            return
        for value in range(min(cap, remaining - least * (parts - 1)), least - 1, -1):
            for tail in rec(remaining - value, parts - 1, value):
                yield (value,) + tail
    yield from rec(half_edges, vertices, half_edges)


def naive_ribbon_graphs(vertices: int, edges: int, g: Optional[int] = None, m: Optional[int] = None,
                        cache: Optional[CanonicalCache] = None) -> List[Diagram]:
    '''Same set as ribbon_graphs (no hairs), by brute force over all gluings'''
    n = 2 * edges
    found = []
    for profile in valency_profiles(vertices, n):
        cycles = []
        start = 0
        for size in profile:
            cycles.append(range(start, start + size))
            start += size
        sigma0 = from_cycles(n, cycles)
        for matching in perfect_matchings(list(range(n))):
            sigma1 = [0] * n
            for a, b in matching:
                sigma1[a], sigma1[b] = b, a
            graph = RibbonGraph(sigma0, tuple(sigma1))
            if _matches(graph, g, m):
                found.append(bare(graph))
    return _dedup(found, cache)


def _labelings(spec: FamilySpec, diagram: Diagram) -> Iterator[Optional[Tuple[int, ...]]]:
    if not spec.family.labeled:
        yield None
        return
    graph = diagram.graph
    for perm in itertools.permutations(range(1, len(graph.boundaries) + 1)):
        yield tuple(perm[graph.boundary_of[h]] for h in range(graph.n_half))


def _hair_assignments(spec: FamilySpec, diagram: Diagram):
    """
    (hair codes, fixed hair sources) for every way to put labelled in/out
    hairs on the phantom slots. In-hairs start at the phantom, out-hairs
    at the internal end.
    """
    if spec.family is not Family.PCY:
        yield diagram.hairs, frozenset()
        return
    p, q = spec.hairs
    slots = [h for h, _ in diagram.hair_slots]
    if len(slots) != p + q:
        return
    codes = [hair_code(HAIR_IN, label) for label in range(1, q + 1)]
    codes += [hair_code(HAIR_OUT, label) for label in range(1, p + 1)]
    graph = diagram.graph
    for perm in itertools.permutations(codes):
        hairs = [0] * graph.n_half
        sources = set()
        for phantom, code in zip(slots, perm):
            hairs[phantom] = code
            if hair_kind(code) == HAIR_IN:
                sources.add(phantom)
            else:
                sources.add(graph.sigma1[phantom])
        yield tuple(hairs), frozenset(sources)


def decorations(spec: FamilySpec, diagram: Diagram, whites: int = 0) -> Iterator[Diagram]:
    '''Every decoration of a bare graph the family allows, with reference orientation'''
    graph = diagram.graph
    for hairs, fixed in _hair_assignments(spec, diagram):
        base = Diagram(graph, diagram.orientation, spec.tag, hairs=hairs)
        if spec.family.directed:
            options = acyclic_orientations(graph, base.internal_edges, fixed)
        else:
            options = [None]
        for dirs in options:
            if spec.family is Family.MIXED:
                colourings = []
                for chosen in itertools.combinations(sinks(graph, dirs), whites):
                    colors = [0] * graph.n_half
                    for index in chosen:
                        for h in graph.vertices[index]:
                            colors[h] = 1
                    colourings.append(tuple(colors))
            else:
                colourings = [None]
            for colors in colourings:
                for labels in _labelings(spec, diagram):
                    yield oriented(spec, Diagram(graph, diagram.orientation, spec.tag,
                                                 dirs, labels, colors, hairs))


def _has_loop(diagram: Diagram) -> bool:
    vertex_of = diagram.graph.vertex_of
    return any(vertex_of[a] == vertex_of[b] for a, b in diagram.internal_edges)


def classes(spec: FamilySpec, vertices: int, edges: int, whites: int = 0,
            cache: Optional[CanonicalCache] = None,
            shapes: Optional[Dict[tuple, List[Diagram]]] = None) -> Dict[bytes, Diagram]:
    """
    key -> representative for every non-zero class of the family of this
    size. shapes, when given, memoizes the bare graphs per size across calls.
    """
    p, q = spec.hairs
    token = (vertices, edges, spec.g, spec.m, p + q)
    if shapes is None:
        shapes = {}
    if token not in shapes:
        shapes[token] = ribbon_graphs(vertices, edges, spec.g, spec.m, p + q, cache)
    found = {}
    zero = 0
    for shape in shapes[token]:
        valencies = [len(cycle) for cycle in shape.internal_vertices]
        least = 3 if spec.family is Family.PCY else 2
        if min(valencies) < least or max(valencies) < 3:
            continue
        # loops admit no acyclic direction
        if spec.family.directed and _has_loop(shape):
            continue
        for diagram in decorations(spec, shape, whites):
            if not passes(spec, diagram):
                continue
            cls = canonical_class(diagram, cache)
            if cls.is_zero:
                zero += 1
                continue
            found.setdefault(cls.key, cls.representative)
    log.debug("%s V=%d E=%d whites=%d: %d classes (%d zero hits)",
              spec.name, vertices, edges, whites, len(found), zero)
    return found


@dataclass
class GradedBasis:
    spec: FamilySpec
    degree: int
    elements: Tuple[bytes, ...]
    representatives: Dict[bytes, Diagram]
    index: Dict[bytes, int] = field(init=False, repr=False)

    def __post_init__(self):
        self.index = {key: position for position, key in enumerate(self.elements)}

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, key):
        return key in self.index

    def position(self, key: bytes) -> int:
        return self.index[key]

    def representative(self, key: bytes) -> Diagram:
        return self.representatives[key]

    @classmethod
    def empty(cls, spec: FamilySpec, degree: int) -> GradedBasis:
        return cls(spec, degree, (), {})


def basis(spec: FamilySpec, degree: int, store=None, cache: Optional[CanonicalCache] = None,
          max_size: Optional[int] = None) -> GradedBasis:
    """
    The deterministic basis of the degree piece of a family. store, when
    given, is a BasisStore consulted before and filled after enumeration.
    """
    sizes = spec.sizes(degree)
    if sizes is None:
        return GradedBasis.empty(spec, degree)

    if store is not None:
        cached = store.load(spec, degree)
        if cached is not None:
            return cached

    vertices, edges, whites = sizes
    found = classes(spec, vertices, edges, whites, cache)
    if max_size is not None and len(found) > max_size:
        raise ResourceLimit("basis of %s in degree %d has %d elements (limit %d)"
                            % (spec.name, degree, len(found), max_size))

    keys = tuple(sorted(found))
    result = GradedBasis(spec, degree, keys, found)
    if store is not None:
        store.save(result)
    return result


def enumerate_supports(spec: FamilySpec, max_edges: int) -> List[Tuple[int, int, int]]:
    """
    (V, E, degree) for every size the family can populate with E <= max_edges,
    ordered by E then degree.
    """
    spec.check_grading()
    c = spec.excess
    supports = []
    if spec.family is Family.MIXED:
        edges = spec.edges
        vertices = edges - c
        if edges <= max_edges and vertices >= 2 and 2 * edges >= 2 * vertices + 1:
            for whites in range(vertices + 1):
                supports.append((vertices, edges, spec.degree_of(vertices, edges, whites)))
    elif spec.family is Family.PCY:
        p, q = spec.hairs
        for edges in range(0, max_edges + 1):
            vertices = edges - c
            if vertices >= 1 and 2 * edges + p + q >= 3 * vertices:
                supports.append((vertices, edges, spec.degree_of(vertices, edges)))
    else:
        least = 2 if spec.family.directed else 1
        for edges in range(1, max_edges + 1):
            vertices = edges - c
            if vertices >= least and 2 * edges >= 2 * vertices + 1:
                supports.append((vertices, edges, spec.degree_of(vertices, edges)))
    return sorted(supports, key=lambda s: (s[1], s[2]))


def default_window(spec: FamilySpec, max_edges: int) -> List[int]:
    '''Degrees supported with E <= max_edges, in increasing order'''
    return sorted({degree for _, _, degree in enumerate_supports(spec, max_edges)})
