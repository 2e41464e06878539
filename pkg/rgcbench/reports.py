'''Reports produced by cohomology runs and checks'''
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Any, Dict, List, Optional

from .constants import VERSION
from .constructs import Serializable, Serializer

log = logging.getLogger(__name__)


@dataclass
class DegreeRow:
    degree: int
    dim: int
    rank_in: int
    rank_out: int

    @property
    def betti(self) -> int:
        return self.dim - self.rank_in - self.rank_out


class Report(Serializable):
    '''Common header: version, config, seed and optional timing'''

    def __init__(self, *, config: Optional[dict] = None, seed: Optional[int] = None):
        self.version = VERSION
        self.config = dict(config or {})
        self.seed = seed
        self.timing: Optional[float] = None

    def _header(self) -> dict:
        header = {'version': self.version, 'config': self.config, 'seed': self.seed}
        if self.timing is not None:
            header['timing'] = round(self.timing, 3)
        return header

    def _restore_header(self, data):
        self.version = data.get('version', VERSION)
        self.config = data.get('config') or {}
        self.seed = data.get('seed')
        self.timing = data.get('timing')
        return self

    @property
    def ok(self) -> bool:
        return True

    def to_json(self) -> str:
        return self.serialize(cls=Serializer, sort_keys=True, indent=2) + '\n'

    def table(self) -> str:
        raise NotImplementedError

    def render(self, fmt: str) -> str:
        if fmt == 'table':
            return self.table()
        return self.to_json()


class RankReport(Report):
    def __init__(self, spec: dict, prime: int, rows: List[DegreeRow], *, complete: bool = False, **kwargs):
        super().__init__(**kwargs)
        self.spec = spec
        self.prime = prime
        self.rows = sorted(rows, key=lambda row: row.degree)
        self.complete = complete

    @property
    def degrees(self) -> List[int]:
        return [row.degree for row in self.rows]

    def betti(self) -> Dict[int, int]:
        return {row.degree: row.betti for row in self.rows}

    def dims(self) -> Dict[int, int]:
        return {row.degree: row.dim for row in self.rows}

    @property
    def euler_dims(self) -> int:
        return sum((-1) ** (row.degree % 2) * row.dim for row in self.rows)

    @property
    def euler_betti(self) -> int:
        return sum((-1) ** (row.degree % 2) * row.betti for row in self.rows)

    @property
    def total_betti(self) -> int:
        return sum(row.betti for row in self.rows)

    @property
    def ok(self) -> bool:
        if any(row.betti < 0 for row in self.rows):
            return False
        return not self.complete or self.euler_dims == self.euler_betti

    def table(self) -> str:
        headers = ('degree', 'dim', 'rank in', 'rank out', 'betti')
        body = [(row.degree, row.dim, row.rank_in, row.rank_out, row.betti) for row in self.rows]
        widths = [max(len(str(x)) for x in column) for column in zip(headers, *body)]
        lines = ['%s  (prime %d)' % (self.spec.get('name', '?'), self.prime)]
        lines.append('  '.join(str(h).rjust(w) for h, w in zip(headers, widths)))
        for values in body:
            lines.append('  '.join(str(v).rjust(w) for v, w in zip(values, widths)))
        lines.append('euler characteristic: %d (dims) / %d (betti)' % (self.euler_dims, self.euler_betti))
        return '\n'.join(lines) + '\n'

    def __json__(self):
        data = self._header()
        data.update({
            'spec': self.spec,
            'prime': self.prime,
            'complete': self.complete,
            'degrees': [dict(asdict(row), betti=row.betti) for row in self.rows],
            'euler': {'dims': self.euler_dims, 'betti': self.euler_betti},
        })
        return self._enclose_json(data)

    @classmethod
    def _deserialize(cls, data, **kwargs):
        rows = [DegreeRow(r['degree'], r['dim'], r['rank_in'], r['rank_out']) for r in data['degrees']]
        report = cls(data['spec'], data['prime'], rows, complete=data.get('complete', False))
        return report._restore_header(data)


class ComparisonReport(Report):
    """
    Degree-by-degree comparison of two Betti vectors. Degrees missing on one
    side count as zero.
    """

    def __init__(self, left: RankReport, right: RankReport, **kwargs):
        super().__init__(**kwargs)
        self.left = left
        self.right = right

    def rows(self):
        left, right = self.left.betti(), self.right.betti()
        for degree in sorted(set(left) | set(right)):
            yield degree, left.get(degree, 0), right.get(degree, 0)

    @property
    def ok(self) -> bool:
        return self.left.ok and self.right.ok and all(a == b for _, a, b in self.rows())

    def table(self) -> str:
        lines = ['%s vs %s' % (self.left.spec.get('name'), self.right.spec.get('name'))]
        lines.append('%8s %8s %8s' % ('degree', 'left', 'right'))
        for degree, a, b in self.rows():
            lines.append('%8d %8d %8d%s' % (degree, a, b, '' if a == b else '  <-'))
        lines.append('equal' if self.ok else 'DIFFERENT')
        return '\n'.join(lines) + '\n'

    def __json__(self):
        data = self._header()
        data.update({
            'left': self.left,
            'right': self.right,
            'equal': self.ok,
        })
        return self._enclose_json(data)

    @classmethod
    def _deserialize(cls, data, **kwargs):
        return cls(data['left'], data['right'])._restore_header(data)


@dataclass
class Assertion:
    name: str
    passed: bool
    detail: str = ''


class CheckReport(Report):
    '''Named pass/fail assertions of one verifier, with free-form details'''

    def __init__(self, check: str, **kwargs):
        super().__init__(**kwargs)
        self.check = check
        self.assertions: List[Assertion] = []
        self.details: Dict[str, Any] = {}
        self.children: List[Report] = []

    def expect(self, name: str, passed: bool, detail: str = '') -> bool:
        passed = bool(passed)
        self.assertions.append(Assertion(name, passed, detail))
        if not passed:
            log.warning("[%s] %s failed%s", self.check, name, ': ' + detail if detail else '')
        else:
            log.debug("[%s] %s passed", self.check, name)
        return passed

    def attach(self, report: Report):
        self.children.append(report)
        return report

    @property
    def failures(self) -> List[Assertion]:
        return [a for a in self.assertions if not a.passed]

    @property
    def ok(self) -> bool:
        return not self.failures and all(child.ok for child in self.children)

    def table(self) -> str:
        lines = ['check %s: %s' % (self.check, 'PASS' if self.ok else 'FAIL')]
        for assertion in self.assertions:
            mark = 'ok  ' if assertion.passed else 'FAIL'
            lines.append('  [%s] %s%s' % (mark, assertion.name, '  ' + assertion.detail if assertion.detail else ''))
        for child in self.children:
            lines.extend('  ' + line for line in child.table().splitlines())
        return '\n'.join(lines) + '\n'

    def __json__(self):
        data = self._header()
        data.update({
            'check': self.check,
            'ok': self.ok,
            'assertions': [asdict(a) for a in self.assertions],
            'details': self.details,
            'children': self.children,
        })
        return self._enclose_json(data)

    @classmethod
    def _deserialize(cls, data, **kwargs):
        report = cls(data['check'])
        report.assertions = [Assertion(**a) for a in data['assertions']]
        report.details = data.get('details') or {}
        report.children = list(data.get('children') or [])
        return report._restore_header(data)


class BasisReport(Report):
    '''Basis sizes of one family over a degree window'''

    def __init__(self, spec: dict, sizes: Dict[int, int], **kwargs):
        super().__init__(**kwargs)
        self.spec = spec
        self.sizes = dict(sorted(sizes.items()))

    @property
    def total(self) -> int:
        return sum(self.sizes.values())

    def table(self) -> str:
        lines = [self.spec.get('name', '?')]
        lines.append('%8s %10s' % ('degree', 'generators'))
        for degree, size in self.sizes.items():
            lines.append('%8d %10d' % (degree, size))
        return '\n'.join(lines) + '\n'

    def __json__(self):
        data = self._header()
        data.update({
            'spec': self.spec,
            'sizes': {str(degree): size for degree, size in self.sizes.items()},
            'total': self.total,
        })
        return self._enclose_json(data)

    @classmethod
    def _deserialize(cls, data, **kwargs):
        sizes = {int(degree): size for degree, size in data['sizes'].items()}
        return cls(data['spec'], sizes)._restore_header(data)
