'''
Haired ribbon quivers: corollas, the generator predicate, the splitting
differential and gluing of out-hairs to in-hairs.

A hair is a univalent phantom vertex hanging off a corner of an internal
vertex; its phantom half-edge carries the hair code (direction and label).
'''
from __future__ import annotations

import logging
from dataclasses import replace
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .canonical import (HAIR_IN, HAIR_OUT, CanonicalCache, Diagram, GraphClass,
                        hair_code, hair_kind, hair_label)
from .chain import ChainVector
from .enumeration import classes
from .exceptions import BadMatching, InvariantViolation, NotAGenerator, TypeMismatch, WrongFamily
from .families import Family, FamilySpec, oriented
from .quiver import is_acyclic
from .ribbon import DirectionData, OrientationData, RibbonGraph

log = logging.getLogger(__name__)


def pcy_spec(d: int, p: int, q: int, g: Optional[int] = None, m: Optional[int] = None) -> FamilySpec:
    '''p out-hairs, q in-hairs'''
    return FamilySpec(Family.PCY, d, g, m, hairs=(p, q))


def corolla(d: int, p: int, q: int, layout: Optional[Sequence[Tuple[int, int]]] = None) -> Diagram:
    """
    One internal vertex carrying p out-hairs and q in-hairs. layout lists
    (kind, label) in cyclic order; default is the in-hairs then the out-hairs.
    """
    if layout is None:
        layout = [(HAIR_IN, label) for label in range(1, q + 1)]
        layout += [(HAIR_OUT, label) for label in range(1, p + 1)]
    layout = list(layout)
    if sorted(layout) != sorted([(HAIR_IN, l) for l in range(1, q + 1)] + [(HAIR_OUT, l) for l in range(1, p + 1)]):
        raise BadMatching("corolla layout does not list every hair exactly once")

    k = len(layout)
    sigma0 = tuple(list(range(1, k)) + [0] + list(range(k, 2 * k)))
    sigma1 = tuple(list(range(k, 2 * k)) + list(range(k)))
    hairs = [0] * (2 * k)
    sources = set()
    for i, (kind, label) in enumerate(layout):
        hairs[k + i] = hair_code(kind, label)
        sources.add(k + i if kind == HAIR_IN else i)
    diagram = Diagram(RibbonGraph(sigma0, sigma1), OrientationData(d % 2 == 1), Family.PCY.tag,
                      DirectionData(frozenset(sources)), hairs=tuple(hairs))
    return oriented(pcy_spec(d, p, q), diagram)


def is_pcy_generator(diagram: Diagram) -> bool:
    """
    Connected and acyclic, every internal vertex at least trivalent with an
    incoming and an outgoing half-edge (edges and hairs both count).
    """
    graph = diagram.graph
    if diagram.dirs is None or not graph.is_connected:
        return False
    if not diagram.internal_vertices:
        return False
    for cycle in diagram.internal_vertices:
        incoming, outgoing = diagram.flow(cycle)
        if len(cycle) < 3 or not incoming or not outgoing:
            return False
    return is_acyclic(graph, diagram.dirs)


def hair_counts(diagram: Diagram) -> Tuple[int, int]:
    '''(out-hairs, in-hairs)'''
    kinds = [hair_kind(code) for _, code in diagram.hair_slots]
    return kinds.count(HAIR_OUT), kinds.count(HAIR_IN)


def pcy_degree(diagram: Diagram, d: int) -> int:
    outs, ins = hair_counts(diagram)
    vertices = len(diagram.internal_vertices)
    edges = len(diagram.internal_edges)
    return d * vertices + (1 - d) * edges + (2 - d) * outs - ins


def _unpack(item):
    if isinstance(item, GraphClass):
        return (None, 0) if item.is_zero else (item.representative, item.sign)
    return item, 1


def pcy_delta(item, spec: FamilySpec, cache: Optional[CanonicalCache] = None) -> ChainVector:
    """
    (-1)^|G| times the sum of directed vertex splittings, keeping only terms
    that are generators.
    """
    from .chaincx import splittings

    diagram, sign = _unpack(item)
    out = ChainVector()
    if diagram is None:
        return out
    if spec.family is not Family.PCY or diagram.tag != spec.tag:
        raise WrongFamily("pcy_delta needs a haired quiver")
    if not is_pcy_generator(diagram):
        raise NotAGenerator("input is not a pcy generator")

    if pcy_degree(diagram, spec.d) % 2:
        sign = -sign
    dropped = 0
    for child, _, _, _ in splittings(diagram, directed=True):
        if not is_pcy_generator(child):
            dropped += 1
            continue
        out.add_diagram(child, sign, cache)
    log.noise("pcy_delta: %d terms, %d dropped", len(out), dropped)
    return out


def _hair_index(diagram: Diagram) -> Dict[Tuple[int, int], int]:
    return {(hair_kind(code), hair_label(code)): h for h, code in diagram.hair_slots}


def _find(hairs: Dict[Tuple[int, int], int], kind: int, label: int, side: str) -> int:
    if (kind, label) in hairs:
        return hairs[(kind, label)]
    if (1 - kind, label) in hairs:
        raise TypeMismatch("%s hair %d has the wrong direction" % (side, label))
    raise BadMatching("%s has no hair labelled %d" % (side, label))


def compose(first: Diagram, matching: Iterable[Tuple[int, int]], second: Diagram, d: int) -> Diagram:
    """
    Glues out-hairs of second to in-hairs of first. matching lists
    (out-hair label of second, in-hair label of first); each pair becomes an
    internal edge directed from second into first.
    """
    matching = list(matching)
    if not matching:
        raise BadMatching("empty matching")
    outs = [pair[0] for pair in matching]
    ins = [pair[1] for pair in matching]
    if len(set(outs)) != len(outs) or len(set(ins)) != len(ins):
        raise BadMatching("matching is not injective")
    for diagram in (first, second):
        if diagram.tag != Family.PCY.tag or diagram.dirs is None:
            raise WrongFamily("compose needs haired quivers")

    n1 = first.n_half
    n = n1 + second.n_half
    shift = lambda h: h + n1
    sigma0 = list(first.graph.sigma0) + [shift(h) for h in second.graph.sigma0]
    sigma1 = list(first.graph.sigma1) + [shift(h) for h in second.graph.sigma1]
    hairs = list(first.hairs or (0,) * n1) + list(second.hairs or (0,) * second.n_half)
    sources = set(first.dirs.sources) | {shift(h) for h in second.dirs.sources}

    first_hairs = _hair_index(first)
    second_hairs = {key: h + n1 for key, h in _hair_index(second).items()}
    order = first.orientation.order + second.orientation.shifted(n1).order
    orientation = OrientationData(first.orientation.odd, order, None,
                                  first.orientation.sign * second.orientation.sign)

    deleted = set()
    for out_label, in_label in matching:
        p2 = _find(second_hairs, HAIR_OUT, out_label, 'second')
        p1 = _find(first_hairs, HAIR_IN, in_label, 'first')
        u1, u2 = sigma1[p1], sigma1[p2]
        sigma1[u1], sigma1[u2] = u2, u1
        sources.discard(p1)
        sources.add(u2)
        deleted |= {p1, p2}
        if orientation.odd:
            orientation = orientation.removed(orientation.index_of('h', (p1,)))
            orientation = orientation.removed(orientation.index_of('h', (p2,)))
        else:
            orientation = orientation.replaced(orientation.index_of('h', (p1,)), ('e', u1))

    kept = [h for h in range(n) if h not in deleted]
    new = {h: i for i, h in enumerate(kept)}
    graph = RibbonGraph(tuple(new[sigma0[h]] for h in kept), tuple(new[sigma1[h]] for h in kept))
    result = Diagram(
        graph=graph,
        orientation=orientation.relabel(new.__getitem__),
        tag=first.tag,
        dirs=DirectionData(frozenset(new[h] for h in sources if h in new)),
        hairs=tuple(_relabeled_hairs([hairs[h] for h in kept], [h < n1 for h in kept])),
    )
    if not is_acyclic(result.graph, result.dirs):
        raise InvariantViolation("composition produced a directed cycle")
    expected = pcy_degree(first, d) + pcy_degree(second, d)
    if pcy_degree(result, d) != expected:
        raise InvariantViolation("composition changed the total degree")
    return result


def _relabeled_hairs(codes: List[int], from_first: List[bool]) -> List[int]:
    '''Surviving in-hairs: first's then second's; out-hairs likewise, each by old label'''
    out = list(codes)
    for kind in (HAIR_IN, HAIR_OUT):
        slots = [(not first, hair_label(code), i)
                 for i, (code, first) in enumerate(zip(codes, from_first))
                 if code and hair_kind(code) == kind]
        for label, (_, _, i) in enumerate(sorted(slots), start=1):
            out[i] = hair_code(kind, label)
    return out


def compose_vectors(x, matching, y, d: int, cache: Optional[CanonicalCache] = None,
                    table: Optional[PcyTable] = None) -> ChainVector:
    '''Bilinear extension of compose to chain vectors and classes'''
    if table is not None:
        return table.compose(x, matching, y)

    def terms(item):
        if isinstance(item, ChainVector):
            return list(item.terms())
        diagram, sign = _unpack(item)
        return [] if diagram is None else [(diagram, sign)]

    out = ChainVector()
    for first, a in terms(x):
        for second, b in terms(y):
            out.add_diagram(compose(first, matching, second, d), a * b, cache)
    return out


def relabel_hairs(diagram: Diagram, ins: Optional[Dict[int, int]] = None,
                  outs: Optional[Dict[int, int]] = None) -> Diagram:
    '''Renames in-hair and out-hair labels by the given permutations'''
    perms = {HAIR_IN: ins or {}, HAIR_OUT: outs or {}}
    for perm in perms.values():
        if sorted(perm) != sorted(perm.values()):
            raise BadMatching("hair relabeling is not a permutation")
    codes = []
    for code in diagram.hairs or ():
        if code:
            kind = hair_kind(code)
            label = hair_label(code)
            code = hair_code(kind, perms[kind].get(label, label))
        codes.append(code)
    return replace(diagram, hairs=tuple(codes) if diagram.hairs is not None else None)


def generators(d: int, p: int, q: int, max_vertices: int, max_edges: Optional[int] = None,
               cache: Optional[CanonicalCache] = None,
               shapes: Optional[Dict[tuple, List[Diagram]]] = None) -> List[Diagram]:
    """
    Canonical representatives of every non-zero generator with p out-hairs
    and q in-hairs, at most max_vertices internal vertices and max_edges
    internal edges, in key order. Pass one shapes dict across hair counts
    with the same total to enumerate the bare graphs once.
    """
    spec = pcy_spec(d, p, q)
    if max_edges is None:
        max_edges = 3 * max_vertices + p + q
    found = {}
    for vertices in range(1, max_vertices + 1):
        # a single vertex carries only loops
        top = 0 if vertices == 1 else max_edges
        for edges in range(vertices - 1, top + 1):
            found.update(classes(spec, vertices, edges, cache=cache, shapes=shapes))
    return [found[key] for key in sorted(found)]


class PcyTable:
    """
    Memo of pcy_delta and compose on canonical representatives, keyed by
    canonical keys. Both are linear in each argument, so their values on
    chain vectors are combinations of stored entries.
    """

    def __init__(self, d: int, cache: Optional[CanonicalCache] = None):
        self.d = d
        self.cache = cache if cache is not None else CanonicalCache()
        self._deltas: Dict[bytes, ChainVector] = {}
        self._glued: Dict[tuple, ChainVector] = {}
        self.hits = 0
        self.misses = 0

    def __len__(self):
        return len(self._deltas) + len(self._glued)

    def vector(self, item) -> ChainVector:
        if isinstance(item, ChainVector):
            return item
        return ChainVector.of(item, 1, self.cache)

    def delta(self, item) -> ChainVector:
        vector = self.vector(item)
        out = ChainVector()
        for key, coeff in vector.items():
            found = self._deltas.get(key)
            if found is None:
                self.misses += 1
                rep = vector.representative(key)
                found = pcy_delta(rep, pcy_spec(self.d, *hair_counts(rep)), self.cache)
                self._deltas[key] = found
            else:
                self.hits += 1
            out.add_vector(found, coeff)
        return out

    def compose(self, x, matching: Iterable[Tuple[int, int]], y) -> ChainVector:
        matching = tuple(tuple(pair) for pair in matching)
        vx, vy = self.vector(x), self.vector(y)
        out = ChainVector()
        for kx, a in vx.items():
            for ky, b in vy.items():
                token = (kx, matching, ky)
                found = self._glued.get(token)
                if found is None:
                    self.misses += 1
                    glued = compose(vx.representative(kx), matching, vy.representative(ky), self.d)
                    found = ChainVector.of(glued, 1, self.cache)
                    self._glued[token] = found
                else:
                    self.hits += 1
                out.add_vector(found, a * b)
        return out
