'''Directed edges on ribbon graphs and ribbon quivers'''
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional, Sequence, Tuple

import networkx as nx

from .exceptions import InvariantViolation
from .ribbon import DirectionData, RibbonGraph

log = logging.getLogger(__name__)


def vertex_digraph(graph: RibbonGraph, dirs: DirectionData) -> nx.DiGraph:
    '''Directed graph on vertex indices; parallel edges collapse'''
    digraph = nx.DiGraph()
    digraph.add_nodes_from(range(len(graph.vertices)))
    for a, b in graph.edges:
        source, target = (a, b) if a in dirs.sources else (b, a)
        digraph.add_edge(graph.vertex_of[source], graph.vertex_of[target])
    return digraph


def is_acyclic(graph: RibbonGraph, dirs: DirectionData) -> bool:
    return nx.is_directed_acyclic_graph(vertex_digraph(graph, dirs))


def acyclic_orientations(graph: RibbonGraph,
                         edges: Optional[Sequence[Tuple[int, int]]] = None,
                         fixed: Iterable[int] = ()) -> List[DirectionData]:
    """
    All acyclic choices of direction on edges (default: every edge), with
    the sources in fixed kept for the remaining edges. Automorphisms are
    not quotiented here.
    """
    edges = list(graph.edges if edges is None else edges)
    fixed = frozenset(fixed)
    if any(graph.vertex_of[a] == graph.vertex_of[b] for a, b in edges):
        return []

    found = []
    for choice in itertools.product((0, 1), repeat=len(edges)):
        sources = set(fixed)
        for (a, b), flip in zip(edges, choice):
            sources.add(b if flip else a)
        dirs = DirectionData(frozenset(sources))
        if is_acyclic(graph, dirs):
            found.append(dirs)
    return found


def out_degrees(graph: RibbonGraph, dirs: DirectionData) -> List[int]:
    return [sum(1 for h in cycle if h in dirs.sources) for cycle in graph.vertices]


def sinks(graph: RibbonGraph, dirs: DirectionData) -> List[int]:
    '''Indices of vertices with no outgoing edge'''
    return [index for index, degree in enumerate(out_degrees(graph, dirs)) if degree == 0]


def is_passing(graph: RibbonGraph, dirs: DirectionData, cycle: Sequence[int]) -> bool:
    '''Bivalent with one incoming and one outgoing half-edge'''
    if len(cycle) != 2:
        return False
    return sum(1 for h in cycle if h in dirs.sources) == 1


@dataclass(frozen=True)
class RibbonQuiver:
    graph: RibbonGraph
    dirs: DirectionData

    def __post_init__(self):
        self.dirs.validate(self.graph)
        if not is_acyclic(self.graph, self.dirs):
            raise InvariantViolation("ribbon quiver has a directed cycle")

    def reversed(self) -> RibbonQuiver:
        return RibbonQuiver(self.graph, self.dirs.reversed(self.graph))

    @property
    def sinks(self) -> List[int]:
        return sinks(self.graph, self.dirs)

    def topological_order(self) -> List[int]:
        return list(nx.topological_sort(vertex_digraph(self.graph, self.dirs)))
