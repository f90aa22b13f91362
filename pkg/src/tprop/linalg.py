"""Exact linear algebra over Q on sparse vectors.

Vectors are ``dict`` objects mapping hashable coordinates to nonzero rationals.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping, Sequence

Vector = dict


def clean(vec: Mapping) -> Vector:
    return {k: v for k, v in vec.items() if v != 0}


def axpy(a, x: Mapping, y: Vector) -> None:
    """In place ``y += a * x``, dropping zeros."""
    for k, v in x.items():
        s = y.get(k, 0) + a * v
        if s == 0:
            y.pop(k, None)
        else:
            y[k] = s


class Echelon:
    """Incrementally maintained echelon basis of a subspace.

    Each stored row has a pivot coordinate with coefficient 1 that no other
    stored row contains (reduced form), so reduction is a single pass.
    """

    def __init__(self, order: Sequence[Hashable] | None = None):
        self._rows: dict[Hashable, Vector] = {}
        self._rank_of = None if order is None else {k: i for i, k in enumerate(order)}

    def _pick(self, vec: Vector) -> Hashable:
        if self._rank_of is None:
            return min(vec, key=repr)
        return min(vec, key=self._rank_of.__getitem__)

    def __len__(self) -> int:
        return len(self._rows)

    @property
    def rank(self) -> int:
        return len(self._rows)

    def reduce(self, vec: Mapping) -> Vector:
        out = clean(vec)
        for p in [k for k in out if k in self._rows]:
            c = out.get(p, 0)
            if c:
                axpy(-c, self._rows[p], out)
        return out

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return ``True`` if it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        p = self._pick(r)
        inv = Fraction(1) / r[p]
        r = {k: v * inv for k, v in r.items()}
        for q, row in self._rows.items():
            c = row.get(p, 0)
            if c:
                axpy(-c, r, row)
        self._rows[p] = r
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)

    def pivots(self) -> list:
        return list(self._rows)


def rank(rows: Iterable[Mapping]) -> int:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.rank


def matrix_rank(matrix: Sequence[Sequence]) -> int:
    return rank({j: v for j, v in enumerate(row) if v != 0} for row in matrix)


def in_span(vec: Mapping, rows: Iterable[Mapping]) -> bool:
    ech = Echelon()
    for r in rows:
        ech.add(r)
    return ech.contains(vec)


def inverse(matrix: Sequence[Sequence]) -> list[list[Fraction]]:
    """Inverse of a square matrix by Gauss-Jordan elimination."""
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        a[col], a[piv] = a[piv], a[col]
        inv = 1 / a[col][col]
        a[col] = [x * inv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return [row[n:] for row in a]


def nullspace(matrix: Sequence[Sequence], ncols: int) -> list[list[Fraction]]:
    """Basis of ``{x : matrix @ x = 0}`` for a matrix with ``ncols`` columns."""
    rows = [[Fraction(x) for x in row] for row in matrix]
    pivots = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        x = [Fraction(0)] * ncols
        x[f] = Fraction(1)
        for i, p in enumerate(pivots):
            x[p] = -rows[i][f]
        basis.append(x)
    return basis
