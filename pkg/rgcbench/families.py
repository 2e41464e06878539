'''Complex families, their gradings and orientation conventions'''
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from enum import Enum
from typing import Optional, Tuple

from . import constants
from .canonical import HAIR_IN, Diagram, diagram_from_key, hair_kind
from .exceptions import InfiniteDegreePiece, UnsupportedFamilyParam
from .quiver import is_acyclic, is_passing
from .ribbon import OrientationData

log = logging.getLogger(__name__)


class Family(Enum):
    RGC = 'rgc'
    ORGC = 'orgc'
    RGC1 = 'rgc1'
    ORGC1 = 'orgc1'
    MIXED = 'mixed'
    PCY = 'pcy'

    @classmethod
    def parse(cls, name: str) -> Family:
        try:
            return cls(str(name).strip().lower())
        except ValueError:
            raise UnsupportedFamilyParam(
                "unknown family %r (expected one of %s)" % (name, ', '.join(f.value for f in cls))
            ) from None

    @property
    def directed(self) -> bool:
        return self in (Family.ORGC, Family.ORGC1, Family.MIXED, Family.PCY)

    @property
    def one_boundary(self) -> bool:
        return self in (Family.RGC1, Family.ORGC1)

    @property
    def labeled(self) -> bool:
        '''Boundaries carry labels 1..m'''
        return self in (Family.RGC, Family.ORGC, Family.MIXED)

    @property
    def splits(self) -> bool:
        '''Differential is vertex splitting'''
        return self in (Family.RGC, Family.ORGC, Family.RGC1, Family.ORGC1)

    @property
    def tag(self) -> str:
        return _TAGS[self]


_TAGS = {
    Family.RGC: constants.TAG_RGC,
    Family.ORGC: constants.TAG_ORGC,
    Family.RGC1: constants.TAG_RGC1,
    Family.ORGC1: constants.TAG_ORGC1,
    Family.MIXED: constants.TAG_MIXED,
    Family.PCY: constants.TAG_PCY,
}


@dataclass(frozen=True)
class FamilySpec:
    family: Family
    d: int
    g: Optional[int] = 0
    m: Optional[int] = 1
    edges: Optional[int] = None
    hairs: Tuple[int, int] = (0, 0)
    drop_passing: bool = False

    def __post_init__(self):
        if self.family.one_boundary and self.m != 1:
            raise UnsupportedFamilyParam("%s has exactly one boundary, got m=%s" % (self.family.value, self.m))
        if self.g is not None and self.g < 0:
            raise UnsupportedFamilyParam("genus must be non-negative")
        if self.m is not None and self.m < 1:
            raise UnsupportedFamilyParam("boundary count must be positive")
        if self.family is Family.MIXED and self.edges is None:
            raise UnsupportedFamilyParam("the mixed family is graded at a fixed edge count")
        if self.family is Family.PCY:
            if min(self.hairs) < 0:
                raise UnsupportedFamilyParam("hair counts must be non-negative")
        elif self.hairs != (0, 0):
            raise UnsupportedFamilyParam("only pcy graphs carry hairs")
        if self.m is not None and self.m > 63:
            raise UnsupportedFamilyParam("at most 63 labelled boundaries")

    @property
    def odd(self) -> bool:
        return self.d % 2 == 1

    @property
    def tag(self) -> str:
        return self.family.tag

    @property
    def excess(self) -> int:
        '''E - V, fixed by genus and boundary count'''
        if self.g is None or self.m is None:
            raise UnsupportedFamilyParam("genus and boundary count are needed to grade %s" % self.family.value)
        return 2 * self.g - 2 + self.m

    @property
    def name(self) -> str:
        parts = [self.family.value, 'd%d' % self.d]
        if self.g is not None:
            parts.append('g%d' % self.g)
        if self.m is not None:
            parts.append('m%d' % self.m)
        if self.edges is not None:
            parts.append('e%d' % self.edges)
        if self.family is Family.PCY:
            parts.append('p%dq%d' % self.hairs)
        if self.drop_passing:
            parts.append('np')
        return '_'.join(parts)

    def as_dict(self) -> dict:
        data = asdict(self)
        data['family'] = self.family.value
        data['hairs'] = list(self.hairs)
        return data

    def check_grading(self):
        if self.family in (Family.RGC, Family.ORGC) and self.d == 1:
            raise InfiniteDegreePiece(
                "%s at d=1: the degree does not bound the graph size" % self.family.value, d=self.d
            )

    def degree_of(self, vertices: int, edges: int, whites: int = 0) -> int:
        d = self.d
        if self.family is Family.MIXED:
            return (d + 1) * vertices - whites - d * edges
        if self.family is Family.PCY:
            p, q = self.hairs
            return d * vertices + (1 - d) * edges + (2 - d) * p - q
        return d * (vertices - 1) + (1 - d) * edges

    def sizes(self, degree: int) -> Optional[Tuple[int, int, int]]:
        """
        (vertices, edges, white vertices) of the degree piece, or None when
        the piece is empty for size reasons.
        """
        self.check_grading()
        c = self.excess
        d = self.d
        whites = 0
        if self.family is Family.MIXED:
            edges = self.edges
            vertices = edges - c
            whites = (d + 1) * vertices - d * edges - degree
            if not 0 <= whites <= vertices:
                return None
        elif self.family is Family.PCY:
            p, q = self.hairs
            vertices = degree - (1 - d) * c - (2 - d) * p + q
            edges = vertices + c
        else:
            vertices = degree + d - (1 - d) * c
            edges = vertices + c

        min_vertices = 2 if self.family.directed and self.family is not Family.PCY else 1
        if vertices < min_vertices or edges < 0:
            return None
        if self.degree_of(vertices, edges, whites) != degree:
            return None
        return vertices, edges, whites


def degree(spec: FamilySpec, diagram: Diagram) -> int:
    vertices = diagram.internal_vertices
    edges = len(diagram.internal_edges)
    whites = len(diagram.white_vertices)
    return spec.degree_of(len(vertices), edges, whites)


def orientation_items(spec: FamilySpec, diagram: Diagram):
    """
    The odd-degree objects of a generator, each named by its least half-edge,
    and the edge-direction data when directions carry a sign.
    """
    family = spec.family
    vertices = [('v', cycle[0]) for cycle in diagram.internal_vertices]
    edges = [('e', a) for a, _ in diagram.internal_edges]
    edge_dirs = None

    if family in (Family.RGC, Family.RGC1):
        if spec.odd:
            items = vertices
            edge_dirs = frozenset(a for a, _ in diagram.internal_edges)
        else:
            items = edges
    elif family in (Family.ORGC, Family.ORGC1):
        items = vertices if spec.odd else edges
    elif family is Family.MIXED:
        whites = {cycle[0] for cycle in diagram.white_vertices}
        if spec.odd:
            items = [item for item in vertices if item[1] in whites] + edges
        else:
            items = [item for item in vertices if item[1] not in whites]
    else:
        hairs = diagram.hair_slots
        if spec.odd:
            items = vertices + [('h', h) for h, _ in hairs]
        else:
            items = edges + [('h', h) for h, code in hairs if hair_kind(code) == HAIR_IN]
    return sorted(items), edge_dirs


def reference_orientation(spec: FamilySpec, diagram: Diagram) -> OrientationData:
    items, edge_dirs = orientation_items(spec, diagram)
    return OrientationData(spec.odd, tuple(items), edge_dirs, 1)


def oriented(spec: FamilySpec, diagram: Diagram) -> Diagram:
    return diagram.with_orientation(reference_orientation(spec, diagram))


def decode(spec: FamilySpec, key: bytes) -> Diagram:
    '''Canonical representative of a basis key with its reference orientation'''
    return oriented(spec, diagram_from_key(key))


def has_passing_vertex(diagram: Diagram) -> bool:
    if diagram.dirs is None:
        return False
    return any(is_passing(diagram.graph, diagram.dirs, cycle) for cycle in diagram.internal_vertices)


def passes(spec: FamilySpec, diagram: Diagram) -> bool:
    '''Family membership of a decorated graph'''
    graph = diagram.graph
    if not graph.is_connected:
        return False
    if spec.g is not None and graph.genus != spec.g:
        return False
    if spec.m is not None and len(graph.boundaries) != spec.m:
        return False

    if spec.family is Family.PCY:
        from .pcy import is_pcy_generator
        return is_pcy_generator(diagram)

    valencies = [len(cycle) for cycle in diagram.internal_vertices]
    if min(valencies) < 2 or max(valencies) < 3:
        return False
    if spec.family.directed:
        if diagram.dirs is None or not is_acyclic(graph, diagram.dirs):
            return False
        if spec.drop_passing and has_passing_vertex(diagram):
            return False
    if spec.family is Family.MIXED:
        for cycle in diagram.white_vertices:
            if diagram.flow(cycle)[1]:
                return False
    return True
