'''Finite rational combinations of graph classes'''
from __future__ import annotations

import logging
from fractions import Fraction
from typing import Callable, Dict, Iterator, Optional, Tuple

from .canonical import CanonicalCache, Diagram, GraphClass, canonical_class

log = logging.getLogger(__name__)


class ChainVector:
    """
    Map canonical key -> coefficient, together with the canonical
    representative of every key. A coefficient c on key k stands for
    c times the representative with its stored orientation.
    """
    __slots__ = ('_coeffs', '_reps')

    def __init__(self):
        self._coeffs: Dict[bytes, Fraction] = {}
        self._reps: Dict[bytes, Diagram] = {}

    @classmethod
    def of(cls, item, coeff=1, cache: Optional[CanonicalCache] = None) -> ChainVector:
        vector = cls()
        if isinstance(item, GraphClass):
            vector.add(item, coeff)
        else:
            vector.add_diagram(item, coeff, cache)
        return vector

    def add(self, graph_class: GraphClass, coeff=1) -> ChainVector:
        if graph_class.is_zero or not coeff:
            return self
        key = graph_class.key
        value = self._coeffs.get(key, 0) + Fraction(coeff) * graph_class.sign
        if value:
            self._coeffs[key] = value
            self._reps.setdefault(key, graph_class.representative)
        else:
            self._coeffs.pop(key, None)
            self._reps.pop(key, None)
        return self

    def add_diagram(self, diagram: Diagram, coeff=1, cache: Optional[CanonicalCache] = None) -> ChainVector:
        return self.add(canonical_class(diagram, cache), coeff)

    def add_vector(self, other: ChainVector, coeff=1) -> ChainVector:
        if not coeff:
            return self
        for key, value in other._coeffs.items():
            total = self._coeffs.get(key, 0) + value * coeff
            if total:
                self._coeffs[key] = total
                self._reps.setdefault(key, other._reps[key])
            else:
                self._coeffs.pop(key, None)
                self._reps.pop(key, None)
        return self

    def coefficient(self, key: bytes) -> Fraction:
        return self._coeffs.get(key, Fraction(0))

    def representative(self, key: bytes) -> Diagram:
        return self._reps[key]

    def items(self) -> Iterator[Tuple[bytes, Fraction]]:
        for key in sorted(self._coeffs):
            yield key, self._coeffs[key]

    def terms(self) -> Iterator[Tuple[Diagram, Fraction]]:
        '''(representative, coefficient) pairs in key order'''
        for key, value in self.items():
            yield self._reps[key], value

    def keys(self):
        return sorted(self._coeffs)

    def map(self, fn: Callable[[Diagram], ChainVector]) -> ChainVector:
        '''Linear extension of fn from representatives'''
        out = ChainVector()
        for rep, value in self.terms():
            out.add_vector(fn(rep), value)
        return out

    def copy(self) -> ChainVector:
        out = ChainVector()
        out._coeffs = dict(self._coeffs)
        out._reps = dict(self._reps)
        return out

    def __add__(self, other: ChainVector) -> ChainVector:
        return self.copy().add_vector(other)

    def __sub__(self, other: ChainVector) -> ChainVector:
        return self.copy().add_vector(other, -1)

    def __neg__(self) -> ChainVector:
        return ChainVector().add_vector(self, -1)

    def __mul__(self, scalar) -> ChainVector:
        return ChainVector().add_vector(self, Fraction(scalar))

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, ChainVector):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __len__(self) -> int:
        return len(self._coeffs)

    def __iter__(self):
        return iter(self.keys())

    def __contains__(self, key) -> bool:
        return key in self._coeffs

    def __repr__(self) -> str:
        return '<ChainVector %d terms>' % len(self)

    def is_zero(self) -> bool:
        return not self._coeffs
