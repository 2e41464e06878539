'''Persistent store of enumerated bases'''
from __future__ import annotations

import json
import logging
import os
from typing import Dict, Optional

from .constants import CACHE_PATH
from .constructs import Serializable
from .enumeration import GradedBasis
from .families import FamilySpec, decode
from .utils import md5sum, write_file

log = logging.getLogger(__name__)


class BasisHeader(Serializable):
    def __init__(self, spec: dict, degree: int, size: int):
        self.spec = spec
        self.degree = degree
        self.size = size

    def __json__(self):
        return self._enclose_json({
            'version': 1,
            'spec': self.spec,
            'degree': self.degree,
            'size': self.size,
        })

    @classmethod
    def _deserialize(cls, data, **kwargs):
        return cls(data['spec'], data['degree'], data['size'])


class BasisStore:
    """
    One JSON-lines file per family spec and degree: a header, then one
    canonical key per line in basis order. index.json keeps the md5 of every
    file; a file whose hash does not match is ignored and rebuilt.
    """

    def __init__(self, root: Optional[str] = None):
        self.root = root or CACHE_PATH
        self.hits = 0
        self.misses = 0

    def _folder(self, spec: FamilySpec) -> str:
        return os.path.join(self.root, spec.name)

    def path(self, spec: FamilySpec, degree: int) -> str:
        return os.path.join(self._folder(spec), 'deg_%d.jsonl' % degree)

    def _index_path(self, spec: FamilySpec) -> str:
        return os.path.join(self._folder(spec), 'index.json')

    def _index(self, spec: FamilySpec) -> Dict[str, str]:
        try:
            with open(self._index_path(spec), encoding='utf8') as f:
                return json.load(f)
        except (IOError, ValueError):
            return {}

    def load(self, spec: FamilySpec, degree: int) -> Optional[GradedBasis]:
        path = self.path(spec, degree)
        name = os.path.basename(path)
        if not os.path.isfile(path):
            self.misses += 1
            return None

        expected = self._index(spec).get(name)
        if expected is None or expected != md5sum(path):
            log.warning("Ignoring stale basis cache %s", path)
            self.misses += 1
            return None

        with open(path, encoding='utf8') as f:
            lines = [line for line in f.read().splitlines() if line]
        header = BasisHeader.from_json(lines[0])
        if not isinstance(header, BasisHeader) or header.spec != spec.as_dict() or header.degree != degree:
            log.warning("Basis cache %s belongs to another spec", path)
            self.misses += 1
            return None

        keys = tuple(json.loads(line).encode('ascii') for line in lines[1:])
        if len(keys) != header.size:
            log.warning("Basis cache %s is truncated", path)
            self.misses += 1
            return None

        self.hits += 1
        log.debug("Loaded %d basis elements of %s degree %d from cache", len(keys), spec.name, degree)
        return GradedBasis(spec, degree, keys, {key: decode(spec, key) for key in keys})

    def save(self, basis: GradedBasis):
        spec, degree = basis.spec, basis.degree
        path = self.path(spec, degree)
        header = BasisHeader(spec.as_dict(), degree, len(basis)).serialize(sort_keys=True)
        write_file(path, [header] + [json.dumps(key.decode('ascii')) for key in basis.elements])

        index = self._index(spec)
        index[os.path.basename(path)] = md5sum(path)
        write_file(self._index_path(spec), [json.dumps(index, sort_keys=True, indent=2)])
        log.debug("Saved %d basis elements of %s degree %d", len(basis), spec.name, degree)

    def clear(self, spec: FamilySpec):
        folder = self._folder(spec)
        if not os.path.isdir(folder):
            return
        for name in os.listdir(folder):
            os.unlink(os.path.join(folder, name))
