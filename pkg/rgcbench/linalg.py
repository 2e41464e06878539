'''Exact sparse matrices and their ranks over Q and over a prime field'''
from __future__ import annotations

import logging
from collections import defaultdict
from fractions import Fraction
from math import lcm
from typing import Dict, Iterable, List, Tuple

import numpy as np

from .constants import DEFAULT_PRIME, DENSE_RANK_LIMIT
from .exceptions import RankMismatch

log = logging.getLogger(__name__)

Entry = Tuple[int, int]


class SparseMatrix:
    """
    Matrix of a map from a column basis to a row basis. Entries are kept
    pre-summed with zeros dropped.
    """

    def __init__(self, n_rows: int, n_cols: int, entries: Dict[Entry, Fraction] = None,
                 *, row_basis: str = '', col_basis: str = ''):
        self.n_rows = n_rows
        self.n_cols = n_cols
        self.row_basis = row_basis
        self.col_basis = col_basis
        self.entries: Dict[Entry, Fraction] = {}
        for (row, col), value in (entries or {}).items():
            self._check(row, col)
            if value:
                self.entries[(row, col)] = Fraction(value)

    def _check(self, row, col):
        if not (0 <= row < self.n_rows and 0 <= col < self.n_cols):
            raise IndexError("entry (%d, %d) outside a %dx%d matrix" % (row, col, self.n_rows, self.n_cols))

    @classmethod
    def from_triplets(cls, n_rows: int, n_cols: int, triplets: Iterable[Tuple[int, int, object]], **kwargs) -> SparseMatrix:
        summed: Dict[Entry, Fraction] = defaultdict(Fraction)
        for row, col, value in triplets:
            summed[(row, col)] += Fraction(value)
        return cls(n_rows, n_cols, summed, **kwargs)

    @property
    def shape(self) -> Tuple[int, int]:
        return self.n_rows, self.n_cols

    @property
    def nnz(self) -> int:
        return len(self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def triplets(self) -> List[Tuple[int, int, Fraction]]:
        return [(row, col, value) for (row, col), value in sorted(self.entries.items())]

    def rows(self) -> List[Dict[int, Fraction]]:
        rows = [dict() for _ in range(self.n_rows)]
        for (row, col), value in self.entries.items():
            rows[row][col] = value
        return rows

    def to_dense(self) -> List[List[Fraction]]:
        dense = [[Fraction(0)] * self.n_cols for _ in range(self.n_rows)]
        for (row, col), value in self.entries.items():
            dense[row][col] = value
        return dense

    def __matmul__(self, other: SparseMatrix) -> SparseMatrix:
        if self.n_cols != other.n_rows:
            raise ValueError("shape mismatch %s @ %s" % (self.shape, other.shape))
        by_row = defaultdict(list)
        for (row, col), value in other.entries.items():
            by_row[row].append((col, value))
        product: Dict[Entry, Fraction] = defaultdict(Fraction)
        for (row, mid), value in self.entries.items():
            for col, other_value in by_row.get(mid, ()):
                product[(row, col)] += value * other_value
        return SparseMatrix(self.n_rows, other.n_cols, product,
                            row_basis=self.row_basis, col_basis=other.col_basis)

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return self.shape == other.shape and self.entries == other.entries

    def __repr__(self) -> str:
        return '<SparseMatrix %dx%d nnz=%d>' % (self.n_rows, self.n_cols, self.nnz)

    def to_matrix_market(self) -> str:
        """
        Coordinate format with 1-based indices. The field "rational" is an
        extension: values are integers or p/q strings.
        """
        lines = ['%%MatrixMarket matrix coordinate rational general']
        if self.row_basis or self.col_basis:
            lines.append('%% rows: %s' % self.row_basis)
            lines.append('%% cols: %s' % self.col_basis)
        lines.append('%d %d %d' % (self.n_rows, self.n_cols, self.nnz))
        for row, col, value in self.triplets():
            lines.append('%d %d %s' % (row + 1, col + 1, value))
        return '\n'.join(lines) + '\n'

    @classmethod
    def from_matrix_market(cls, text: str) -> SparseMatrix:
        body = [line for line in text.splitlines() if line and not line.startswith('%')]
        n_rows, n_cols, _ = (int(x) for x in body[0].split())
        triplets = []
        for line in body[1:]:
            row, col, value = line.split()
            triplets.append((int(row) - 1, int(col) - 1, Fraction(value)))
        return cls.from_triplets(n_rows, n_cols, triplets)

    def rank(self, prime: int = DEFAULT_PRIME) -> int:
        return rank(self, prime)


def _integer_rows(matrix: SparseMatrix) -> List[List[int]]:
    dense = matrix.to_dense()
    rows = []
    for row in dense:
        scale = 1
        for value in row:
            if value.denominator != 1:
                scale = lcm(scale, value.denominator)
        rows.append([int(value * scale) for value in row])
    return rows


def bareiss_rank(rows: List[List[int]]) -> int:
    '''Fraction-free elimination on an integer matrix, skipping zero columns'''
    rows = [list(row) for row in rows if any(row)]
    if not rows:
        return 0
    n_rows, n_cols = len(rows), len(rows[0])
    rank = 0
    previous = 1
    for col in range(n_cols):
        pivot = next((r for r in range(rank, n_rows) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        head = rows[rank]
        for r in range(rank + 1, n_rows):
            row = rows[r]
            factor = row[col]
            for c in range(col + 1, n_cols):
                row[c] = (head[col] * row[c] - factor * head[c]) // previous
            row[col] = 0
        previous = head[col]
        rank += 1
        if rank == n_rows:
            break
    return rank


def markowitz_rank(rows: List[Dict[int, Fraction]]) -> int:
    '''Sparse Gaussian elimination over Q with Markowitz-style pivot choice'''
    rows = [dict(row) for row in rows if row]
    column_rows = defaultdict(set)
    for index, row in enumerate(rows):
        for col in row:
            column_rows[col].add(index)
    active = set(range(len(rows)))
    rank = 0
    while active:
        best = None
        for index in active:
            row = rows[index]
            row_cost = len(row) - 1
            for col in row:
                cost = row_cost * (len(column_rows[col]) - 1)
                if best is None or cost < best[0]:
                    best = (cost, index, col)
            if best is not None and best[0] == 0:
                break
        _, pivot_index, pivot_col = best
        pivot_row = rows[pivot_index]
        pivot_value = pivot_row[pivot_col]
        for other in list(column_rows[pivot_col]):
            if other == pivot_index:
                continue
            row = rows[other]
            factor = row[pivot_col] / pivot_value
            for col, value in pivot_row.items():
                updated = row.get(col, 0) - factor * value
                if updated:
                    if col not in row:
                        column_rows[col].add(other)
                    row[col] = updated
                else:
                    row.pop(col, None)
                    column_rows[col].discard(other)
            if not row:
                active.discard(other)
        for col in pivot_row:
            column_rows[col].discard(pivot_index)
        active.discard(pivot_index)
        rank += 1
    return rank


def rank_q(matrix: SparseMatrix) -> int:
    if matrix.is_zero():
        return 0
    if matrix.n_cols < DENSE_RANK_LIMIT:
        return bareiss_rank(_integer_rows(matrix))
    return markowitz_rank(matrix.rows())


def rank_mod_p(matrix: SparseMatrix, prime: int = DEFAULT_PRIME) -> int:
    if matrix.is_zero():
        return 0
    reduced = np.zeros(matrix.shape, dtype=np.int64)
    for (row, col), value in matrix.entries.items():
        if value.denominator % prime == 0:
            raise RankMismatch("denominator of %s vanishes modulo %d" % (value, prime), prime=prime)
        reduced[row, col] = (value.numerator % prime) * pow(value.denominator, -1, prime) % prime

    n_rows, n_cols = reduced.shape
    rank = 0
    for col in range(n_cols):
        if rank == n_rows:
            break
        candidates = np.nonzero(reduced[rank:, col])[0]
        if candidates.size == 0:
            continue
        pivot = rank + int(candidates[0])
        if pivot != rank:
            reduced[[rank, pivot]] = reduced[[pivot, rank]]
        inverse = pow(int(reduced[rank, col]), prime - 2, prime)
        reduced[rank] = (reduced[rank] * inverse) % prime
        below = reduced[rank + 1:, col]
        targets = np.nonzero(below)[0]
        if targets.size:
            factors = below[targets].copy()
            reduced[rank + 1 + targets] = (reduced[rank + 1 + targets] - np.outer(factors, reduced[rank])) % prime
        rank += 1
    return rank


def rank(matrix: SparseMatrix, prime: int = DEFAULT_PRIME) -> int:
    '''Exact rank over Q, confirmed modulo prime'''
    exact = rank_q(matrix)
    modular = rank_mod_p(matrix, prime)
    if exact != modular:
        raise RankMismatch(
            "rank over Q is %d but %d modulo %d for %r" % (exact, modular, prime, matrix),
            rank_q=exact, rank_p=modular, prime=prime,
        )
    log.noise("rank %d for %r", exact, matrix)
    return exact
