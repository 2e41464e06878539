'''
Ribbon graphs as a pair of permutations on half-edges.

sigma0 rotates the half-edges around their vertex, sigma1 swaps the two
ends of every edge. Boundaries are the orbits of sigma_inf = sigma0^-1 o sigma1.
'''
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .exceptions import (Disconnected, HasFixedPoint, InvariantViolation,
                         NotInvolution, NotPermutation)

log = logging.getLogger(__name__)

Perm = Tuple[int, ...]
Corner = Tuple[int, int]
Item = Tuple[str, int]


def cycles_of(perm: Sequence[int]) -> List[Tuple[int, ...]]:
    '''Cycles of perm, each starting at its least element, ordered by that element'''
    seen = [False] * len(perm)
    cycles = []
    for start in range(len(perm)):
        if seen[start]:
            continue
        cycle = []
        h = start
        while not seen[h]:
            seen[h] = True
            cycle.append(h)
            h = perm[h]
        cycles.append(tuple(cycle))
    return cycles


def invert(perm: Sequence[int]) -> Perm:
    inverse = [0] * len(perm)
    for i, image in enumerate(perm):
        inverse[image] = i
    return tuple(inverse)


def from_cycles(n_half: int, cycles: Iterable[Sequence[int]]) -> Perm:
    '''Permutation of {0..n_half-1} from cycle notation; unlisted points are fixed'''
    perm = list(range(n_half))
    for cycle in cycles:
        for i, h in enumerate(cycle):
            perm[h] = cycle[(i + 1) % len(cycle)]
    return tuple(perm)


def _check_permutation(name: str, perm: Sequence[int], n_half: int):
    if len(perm) != n_half or sorted(perm) != list(range(n_half)):
        raise NotPermutation("%s is not a permutation of {0..%d}" % (name, n_half - 1))


@dataclass(frozen=True)
class RibbonGraph:
    sigma0: Perm
    sigma1: Perm

    @property
    def n_half(self) -> int:
        return len(self.sigma0)

    @cached_property
    def vertices(self) -> List[Tuple[int, ...]]:
        return cycles_of(self.sigma0)

    @cached_property
    def vertex_of(self) -> Tuple[int, ...]:
        owner = [0] * self.n_half
        for index, cycle in enumerate(self.vertices):
            for h in cycle:
                owner[h] = index
        return tuple(owner)

    @cached_property
    def edges(self) -> List[Tuple[int, int]]:
        return [(h, self.sigma1[h]) for h in range(self.n_half) if h < self.sigma1[h]]

    @cached_property
    def sigma_inf(self) -> Perm:
        inverse0 = invert(self.sigma0)
        return tuple(inverse0[self.sigma1[h]] for h in range(self.n_half))

    @cached_property
    def boundaries(self) -> List[Tuple[int, ...]]:
        return cycles_of(self.sigma_inf)

    @cached_property
    def boundary_of(self) -> Tuple[int, ...]:
        owner = [0] * self.n_half
        for index, cycle in enumerate(self.boundaries):
            for h in cycle:
                owner[h] = index
        return tuple(owner)

    @cached_property
    def is_connected(self) -> bool:
        if not self.n_half:
            return True
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for nxt in (self.sigma0[h], self.sigma1[h]):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        return len(seen) == self.n_half

    @property
    def genus(self) -> int:
        if not self.is_connected:
            raise Disconnected("genus is only defined for connected ribbon graphs")
        twice = 2 + len(self.edges) - len(self.vertices) - len(self.boundaries)
        if twice % 2:
            raise InvariantViolation("odd Euler defect %d" % twice)
        return twice // 2

    def valency(self, h: int) -> int:
        return len(self.vertices[self.vertex_of[h]])

    def corners(self) -> Tuple[List[List[Corner]], List[List[Corner]]]:
        '''Corners (h, sigma0 h), grouped by vertex and by boundary, in cyclic order'''
        by_vertex = [[(h, self.sigma0[h]) for h in cycle] for cycle in self.vertices]
        by_boundary = [[(h, self.sigma0[h]) for h in cycle] for cycle in self.boundaries]
        return by_vertex, by_boundary

    def relabel(self, perm: Sequence[int]) -> RibbonGraph:
        '''Graph with half-edge h renamed perm[h]'''
        sigma0 = [0] * self.n_half
        sigma1 = [0] * self.n_half
        for h in range(self.n_half):
            sigma0[perm[h]] = perm[self.sigma0[h]]
            sigma1[perm[h]] = perm[self.sigma1[h]]
        return RibbonGraph(tuple(sigma0), tuple(sigma1))

    def split(self, arc_x: Sequence[int], arc_y: Sequence[int]) -> Tuple[RibbonGraph, int, int]:
        """
        Replaces the vertex whose rotation is arc_x followed by arc_y with two
        vertices joined by a new edge (a, b). a = n_half sits after arc_x at the
        new vertex x, b = n_half + 1 sits after arc_y at y.
        """
        a, b = self.n_half, self.n_half + 1
        sigma0 = list(self.sigma0) + [a, b]
        sigma1 = list(self.sigma1) + [b, a]
        for new, arc in ((a, arc_x), (b, arc_y)):
            rotation = [new] + list(arc)
            for i, h in enumerate(rotation):
                sigma0[h] = rotation[(i + 1) % len(rotation)]
        return RibbonGraph(tuple(sigma0), tuple(sigma1)), a, b


def build(n_half: int, sigma0: Sequence[int], sigma1: Sequence[int]) -> RibbonGraph:
    _check_permutation('sigma0', sigma0, n_half)
    _check_permutation('sigma1', sigma1, n_half)

    for h in range(n_half):
        if sigma1[h] == h:
            raise HasFixedPoint("sigma1 fixes half-edge %d" % h)
        if sigma1[sigma1[h]] != h:
            raise NotInvolution("sigma1 is not an involution at half-edge %d" % h)

    return RibbonGraph(tuple(sigma0), tuple(sigma1))


def boundaries(graph: RibbonGraph) -> List[Tuple[int, ...]]:
    return graph.boundaries


def genus(graph: RibbonGraph) -> int:
    return graph.genus


def corners(graph: RibbonGraph) -> Tuple[List[List[Corner]], List[List[Corner]]]:
    return graph.corners()


def arc_splits(cycle: Sequence[int], *, ordered: bool) -> List[Tuple[Tuple[int, ...], Tuple[int, ...]]]:
    """
    Ways to cut a vertex rotation into two non-empty consecutive arcs.
    Unordered cuts are listed once; ordered cuts list both (x, y) and (y, x).
    """
    k = len(cycle)
    cuts = []
    for s in range(k):
        for t in range(s + 1, k):
            inner = tuple(cycle[s:t])
            outer = tuple(cycle[t:]) + tuple(cycle[:s])
            cuts.append((inner, outer))
            if ordered:
                cuts.append((outer, inner))
    return cuts


@dataclass(frozen=True)
class DirectionData:
    '''The source half-edge of every directed edge'''
    sources: FrozenSet[int]

    def validate(self, graph: RibbonGraph, edges: Optional[Iterable[Tuple[int, int]]] = None):
        for a, b in (graph.edges if edges is None else edges):
            if (a in self.sources) == (b in self.sources):
                raise InvariantViolation("edge (%d, %d) needs exactly one source" % (a, b))

    def is_source(self, h: int) -> bool:
        return h in self.sources

    def reversed(self, graph: RibbonGraph) -> DirectionData:
        return DirectionData(frozenset(graph.sigma1[h] for h in self.sources))

    def relabel(self, perm: Sequence[int]) -> DirectionData:
        return DirectionData(frozenset(perm[h] for h in self.sources))

    def as_list(self, graph: RibbonGraph) -> List[int]:
        '''Source ids, one per edge, in least-half-edge order'''
        return [a if a in self.sources else b for a, b in graph.edges]


@dataclass(frozen=True)
class OrientationData:
    """
    Ordering of the odd-degree objects of a generator.

    Items are ('e', h), ('v', h) or ('h', h) naming an edge, vertex or hair
    by any of its half-edges. edge_dirs holds one chosen half-edge per edge
    when edge directions carry a sign (odd undirected families).
    """
    odd: bool
    order: Tuple[Item, ...] = ()
    edge_dirs: Optional[FrozenSet[int]] = None
    sign: int = 1

    @property
    def parity_mode(self) -> str:
        return 'odd' if self.odd else 'even'

    @property
    def edge_order(self) -> Tuple[int, ...]:
        return tuple(rep for kind, rep in self.order if kind == 'e')

    @property
    def vertex_order(self) -> Tuple[int, ...]:
        return tuple(rep for kind, rep in self.order if kind == 'v')

    def with_sign(self, sign: int) -> OrientationData:
        return OrientationData(self.odd, self.order, self.edge_dirs, sign)

    def negated(self) -> OrientationData:
        return self.with_sign(-self.sign)

    def swapped(self, i: int, j: int) -> OrientationData:
        '''Exchange two items; the orientation class is negated when i != j'''
        order = list(self.order)
        order[i], order[j] = order[j], order[i]
        return OrientationData(self.odd, tuple(order), self.edge_dirs, self.sign)

    def flipped(self, h: int, graph: RibbonGraph) -> OrientationData:
        '''Reverse the chosen direction of the edge through h'''
        if self.edge_dirs is None:
            return self
        partner = graph.sigma1[h]
        dirs = set(self.edge_dirs)
        if h in dirs:
            dirs.remove(h)
            dirs.add(partner)
        else:
            dirs.discard(partner)
            dirs.add(h)
        return OrientationData(self.odd, self.order, frozenset(dirs), -self.sign)

    def appended(self, item: Item) -> OrientationData:
        return OrientationData(self.odd, self.order + (item,), self.edge_dirs, self.sign)

    def replaced(self, index: int, item: Item) -> OrientationData:
        order = list(self.order)
        order[index] = item
        return OrientationData(self.odd, tuple(order), self.edge_dirs, self.sign)

    def removed(self, index: int) -> OrientationData:
        '''Contract the item at index, moving it to the front first'''
        order = self.order[:index] + self.order[index + 1:]
        sign = -self.sign if index % 2 else self.sign
        return OrientationData(self.odd, order, self.edge_dirs, sign)

    def index_of(self, kind: str, reps: Iterable[int]) -> int:
        reps = set(reps)
        for index, (k, rep) in enumerate(self.order):
            if k == kind and rep in reps:
                return index
        raise InvariantViolation("no %r item among half-edges %s" % (kind, sorted(reps)))

    def with_edge_dir(self, h: int) -> OrientationData:
        if self.edge_dirs is None:
            return self
        return OrientationData(self.odd, self.order, self.edge_dirs | {h}, self.sign)

    def shifted(self, offset: int) -> OrientationData:
        return self.relabel(lambda h: h + offset)

    def relabel(self, perm) -> OrientationData:
        '''perm may be a sequence or a callable'''
        image = perm if callable(perm) else perm.__getitem__
        order = tuple((kind, image(rep)) for kind, rep in self.order)
        dirs = None if self.edge_dirs is None else frozenset(image(h) for h in self.edge_dirs)
        return OrientationData(self.odd, order, dirs, self.sign)

