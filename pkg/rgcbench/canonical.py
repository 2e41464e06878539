'''Decorated ribbon graphs and their canonical forms'''
from __future__ import annotations

import json
import logging
from dataclasses import dataclass, replace
from typing import Dict, List, Optional, Sequence, Tuple

from .constants import TAG_PLAIN
from .exceptions import Disconnected, InvariantViolation
from .ribbon import DirectionData, OrientationData, RibbonGraph
from .utils import sign_of_sorting

log = logging.getLogger(__name__)

HAIR_IN = 0
HAIR_OUT = 1
BARE_HAIR = 1


def hair_code(kind: int, label: int) -> int:
    return ((label << 1) | kind) + 1


def hair_kind(code: int) -> int:
    return (code - 1) & 1


def hair_label(code: int) -> int:
    return (code - 1) >> 1


@dataclass(frozen=True)
class Diagram:
    """
    A ribbon graph with everything a complex family decorates it with.

    labels, colors and hairs are per half-edge: the label of the boundary
    the half-edge lies on, 1 on half-edges of white vertices, and a hair code
    on the phantom half-edge closing each hair (0 elsewhere).
    """
    graph: RibbonGraph
    orientation: OrientationData
    tag: str = TAG_PLAIN
    dirs: Optional[DirectionData] = None
    labels: Optional[Tuple[int, ...]] = None
    colors: Optional[Tuple[int, ...]] = None
    hairs: Optional[Tuple[int, ...]] = None

    @property
    def n_half(self) -> int:
        return self.graph.n_half

    def is_phantom(self, h: int) -> bool:
        return bool(self.hairs) and self.hairs[h] != 0

    @property
    def internal_vertices(self) -> List[Tuple[int, ...]]:
        return [cycle for cycle in self.graph.vertices if not self.is_phantom(cycle[0])]

    @property
    def internal_edges(self) -> List[Tuple[int, int]]:
        return [(a, b) for a, b in self.graph.edges
                if not self.is_phantom(a) and not self.is_phantom(b)]

    @property
    def hair_slots(self) -> List[Tuple[int, int]]:
        '''(phantom half-edge, code) for every hair'''
        if not self.hairs:
            return []
        return [(h, code) for h, code in enumerate(self.hairs) if code]

    def hairs_of_kind(self, kind: int) -> Dict[int, int]:
        '''label -> phantom half-edge'''
        return {hair_label(code): h for h, code in self.hair_slots if hair_kind(code) == kind}

    @property
    def white_vertices(self) -> List[Tuple[int, ...]]:
        if not self.colors:
            return []
        return [cycle for cycle in self.internal_vertices if self.colors[cycle[0]]]

    def is_source(self, h: int) -> bool:
        return self.dirs is not None and h in self.dirs.sources

    def flow(self, cycle: Sequence[int]) -> Tuple[int, int]:
        '''(incoming, outgoing) half-edge counts at a vertex'''
        outgoing = sum(1 for h in cycle if self.is_source(h))
        return len(cycle) - outgoing, outgoing

    def marks(self) -> Tuple[int, ...]:
        marks = []
        for h in range(self.n_half):
            mark = 1 if self.is_source(h) else 0
            if self.colors:
                mark |= self.colors[h] << 1
            if self.labels:
                mark |= self.labels[h] << 2
            if self.hairs:
                mark |= self.hairs[h] << 8
            marks.append(mark)
        return tuple(marks)

    def with_orientation(self, orientation: OrientationData) -> Diagram:
        return replace(self, orientation=orientation)

    def negated(self) -> Diagram:
        return replace(self, orientation=self.orientation.negated())

    def relabel(self, perm: Sequence[int]) -> Diagram:
        def moved(values):
            if values is None:
                return None
            out = [0] * len(values)
            for h, value in enumerate(values):
                out[perm[h]] = value
            return tuple(out)

        return Diagram(
            graph=self.graph.relabel(perm),
            orientation=self.orientation.relabel(perm),
            tag=self.tag,
            dirs=None if self.dirs is None else self.dirs.relabel(perm),
            labels=moved(self.labels),
            colors=moved(self.colors),
            hairs=moved(self.hairs),
        )

    def split(self, arc_x: Sequence[int], arc_y: Sequence[int], *, directed: bool) -> Tuple[Diagram, int, int]:
        """
        Splits the vertex arc_x + arc_y, carrying decorations over. The
        orientation is left untouched; the new edge is a -> b when directed.
        """
        graph, a, b = self.graph.split(arc_x, arc_y)
        labels = None
        if self.labels is not None:
            labels = self.labels + (self.labels[arc_y[-1]], self.labels[arc_x[-1]])
        colors = None
        if self.colors is not None:
            colors = self.colors + (self.colors[arc_x[0]],) * 2
        hairs = None if self.hairs is None else self.hairs + (0, 0)
        dirs = self.dirs
        if directed:
            dirs = DirectionData((dirs.sources if dirs else frozenset()) | {a})
        return Diagram(graph, self.orientation, self.tag, dirs, labels, colors, hairs), a, b

    def to_json(self) -> dict:
        labels = {}
        if self.labels is not None:
            labels['boundary'] = list(self.labels)
        if self.colors is not None:
            labels['colors'] = list(self.colors)
        if self.hairs is not None:
            labels['hairs'] = list(self.hairs)
        return {
            'n_half': self.n_half,
            'sigma0': list(self.graph.sigma0),
            'sigma1': list(self.graph.sigma1),
            'dirs': None if self.dirs is None else sorted(self.dirs.sources),
            'labels': labels or None,
        }


def bare(graph: RibbonGraph, hairs: Optional[Tuple[int, ...]] = None) -> Diagram:
    return Diagram(graph, OrientationData(False), TAG_PLAIN, hairs=hairs)


def key_of(diagram: Diagram) -> bytes:
    body = json.dumps(diagram.to_json(), separators=(',', ':'), sort_keys=True)
    return diagram.tag.encode('ascii') + body.encode('ascii')


def diagram_from_key(key: bytes) -> Diagram:
    '''Canonical representative of a key, with an empty orientation'''
    tag = key[:1].decode('ascii')
    data = json.loads(key[1:].decode('ascii'))
    labels = data.get('labels') or {}

    def tupled(name):
        values = labels.get(name)
        return None if values is None else tuple(values)

    return Diagram(
        graph=RibbonGraph(tuple(data['sigma0']), tuple(data['sigma1'])),
        orientation=OrientationData(False),
        tag=tag,
        dirs=None if data['dirs'] is None else DirectionData(frozenset(data['dirs'])),
        labels=tupled('boundary'),
        colors=tupled('colors'),
        hairs=tupled('hairs'),
    )


@dataclass(frozen=True)
class GraphClass:
    key: bytes
    sign: int
    is_zero: bool
    representative: Diagram

    @property
    def tag(self) -> str:
        return self.key[:1].decode('ascii')


@dataclass(frozen=True)
class _Structure:
    key: bytes
    graph: RibbonGraph
    relabelings: Tuple[Tuple[int, ...], ...]
    dirs: Optional[DirectionData]
    labels: Optional[Tuple[int, ...]]
    colors: Optional[Tuple[int, ...]]
    hairs: Optional[Tuple[int, ...]]


class CanonicalCache:
    """
    Memo of canonical structures keyed on the raw permutations and marks.
    Entries are pure functions of their key, so concurrent writers agree.
    """

    def __init__(self, limit: int = 200000):
        self._entries: Dict[tuple, _Structure] = {}
        self.limit = limit
        self.hits = 0
        self.misses = 0

    def get(self, token):
        entry = self._entries.get(token)
        if entry is None:
            self.misses += 1
        else:
            self.hits += 1
        return entry

    def put(self, token, entry):
        if len(self._entries) >= self.limit:
            self._entries.clear()
        self._entries[token] = entry

    def __len__(self):
        return len(self._entries)


_default_cache = CanonicalCache()


def _bfs_order(graph: RibbonGraph, root: int) -> Tuple[List[int], List[int]]:
    n = graph.n_half
    new = [-1] * n
    order = [root]
    new[root] = 0
    head = 0
    while head < len(order):
        h = order[head]
        head += 1
        for nxt in (graph.sigma0[h], graph.sigma1[h]):
            if new[nxt] < 0:
                new[nxt] = len(order)
                order.append(nxt)
    return order, new


def _structure(diagram: Diagram) -> _Structure:
    graph = diagram.graph
    n = graph.n_half
    if not graph.is_connected:
        raise Disconnected("canonical forms need a connected graph")

    marks = diagram.marks()
    vertex_len = [graph.valency(h) for h in range(n)]
    boundary_len = [len(graph.boundaries[graph.boundary_of[h]]) for h in range(n)]
    invariant = [(marks[h], vertex_len[h], boundary_len[h], vertex_len[graph.sigma1[h]])
                 for h in range(n)]
    least = min(invariant)
    roots = [h for h in range(n) if invariant[h] == least]

    best_code = None
    best = []
    for root in roots:
        order, new = _bfs_order(graph, root)
        code = tuple(
            value
            for h in order
            for value in (new[graph.sigma0[h]], new[graph.sigma1[h]], marks[h])
        )
        if best_code is None or code < best_code:
            best_code = code
            best = [(order, new)]
        elif code == best_code:
            best.append((order, new))

    order, new = best[0]
    canon = Diagram(
        graph=graph.relabel(new),
        orientation=OrientationData(False),
        tag=diagram.tag,
        dirs=None if diagram.dirs is None else diagram.dirs.relabel(new),
        labels=None if diagram.labels is None else tuple(diagram.labels[h] for h in order),
        colors=None if diagram.colors is None else tuple(diagram.colors[h] for h in order),
        hairs=None if diagram.hairs is None else tuple(diagram.hairs[h] for h in order),
    )
    return _Structure(
        key=key_of(canon),
        graph=canon.graph,
        relabelings=tuple(tuple(relabel) for _, relabel in best),
        dirs=canon.dirs,
        labels=canon.labels,
        colors=canon.colors,
        hairs=canon.hairs,
    )


def _orbit_min(graph: RibbonGraph, kind: str, h: int) -> int:
    if kind == 'e':
        return min(h, graph.sigma1[h])
    if kind == 'v':
        return graph.vertices[graph.vertex_of[h]][0]
    return h


def _transport(orientation: OrientationData, graph: RibbonGraph, new: Sequence[int]):
    mapped = [(kind, _orbit_min(graph, kind, new[rep])) for kind, rep in orientation.order]
    if len(set(mapped)) != len(mapped):
        raise InvariantViolation("orientation names an object twice: %s" % (orientation.order,))
    sign = orientation.sign * sign_of_sorting(mapped)
    dirs = None
    if orientation.edge_dirs is not None:
        chosen = []
        for h in orientation.edge_dirs:
            image = new[h]
            lower = min(image, graph.sigma1[image])
            if image != lower:
                sign = -sign
            chosen.append(lower)
        dirs = frozenset(chosen)
    return sign, tuple(sorted(mapped)), dirs


def canonical_class(diagram: Diagram, cache: Optional[CanonicalCache] = None) -> GraphClass:
    """
    Canonical key of the isomorphism class of diagram, the sign of its
    orientation relative to the stored representative, and whether an
    automorphism reverses the orientation.
    """
    cache = _default_cache if cache is None else cache
    token = (diagram.tag, diagram.graph.sigma0, diagram.graph.sigma1, diagram.marks())
    structure = cache.get(token)
    if structure is None:
        structure = _structure(diagram)
        cache.put(token, structure)

    signs = set()
    reference = None
    for relabel in structure.relabelings:
        sign, order, dirs = _transport(diagram.orientation, structure.graph, relabel)
        signs.add(sign)
        if reference is None:
            reference = (sign, order, dirs)

    sign, order, dirs = reference
    is_zero = len(signs) > 1
    if is_zero:
        log.noise("zero class %s", structure.key[:40])

    representative = Diagram(
        graph=structure.graph,
        orientation=OrientationData(diagram.orientation.odd, order, dirs, 1),
        tag=diagram.tag,
        dirs=structure.dirs,
        labels=structure.labels,
        colors=structure.colors,
        hairs=structure.hairs,
    )
    return GraphClass(structure.key, sign, is_zero, representative)


def automorphism_count(diagram: Diagram, cache: Optional[CanonicalCache] = None) -> int:
    cache = _default_cache if cache is None else cache
    token = (diagram.tag, diagram.graph.sigma0, diagram.graph.sigma1, diagram.marks())
    structure = cache.get(token)
    if structure is None:
        structure = _structure(diagram)
        cache.put(token, structure)
    return len(structure.relabelings)
