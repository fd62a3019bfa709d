"""Exact integer linear algebra by fraction-free (Bareiss) elimination."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .algebra import Element
from .combinat import Forest

Matrix = list[list[int]]


def _copy(m: Sequence[Sequence[int]]) -> Matrix:
    return [list(map(int, row)) for row in m]


def _eliminate(m: Matrix) -> tuple[int, int]:
    """In-place Bareiss elimination; returns (rank, sign of the row permutation)."""
    rows = len(m)
    cols = len(m[0]) if rows else 0
    prev = 1
    r = 0
    sign = 1
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        if pivot != r:
            m[r], m[pivot] = m[pivot], m[r]
            sign = -sign
        p = m[r][c]
        for i in range(r + 1, rows):
            a = m[i][c]
            row_i, row_r = m[i], m[r]
            for j in range(c + 1, cols):
                # exact: Bareiss guarantees divisibility
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
            row_i[c] = 0
        prev = p
        r += 1
    return r, sign


def rank(m: Sequence[Sequence[int]]) -> int:
    if not m or not m[0]:
        return 0
    return _eliminate(_copy(m))[0]


def determinant(m: Sequence[Sequence[int]]) -> int:
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    a = _copy(m)
    r, sign = _eliminate(a)
    if r < n:
        return 0
    return sign * a[n - 1][n - 1]


def vectors_to_matrix(vectors: Sequence[Element], basis: Sequence[Forest]) -> Matrix:
    """Rows are coordinate vectors of ``vectors`` on ``basis``."""
    index = {F: i for i, F in enumerate(basis)}
    out = []
    for v in vectors:
        row = [0] * len(basis)
        for F, c in v.terms.items():
            if F not in index:
                raise ValueError("vector has support outside the basis")
            row[index[F]] = c
        out.append(row)
    return out


def solve(a: Sequence[Sequence[int]], b: Sequence[int]) -> list[Fraction] | None:
    """Some solution of ``a x = b`` over the rationals, or ``None``."""
    rows = len(a)
    cols = len(a[0]) if rows else 0
    m = [[Fraction(v) for v in row] + [Fraction(bi)] for row, bi in zip(a, b)]
    pivots = []
    r = 0
    for c in range(cols):
        pivot = next((i for i in range(r, rows) if m[i][c]), None)
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        inv = 1 / m[r][c]
        m[r] = [v * inv for v in m[r]]
        for i in range(rows):
            if i != r and m[i][c]:
                f = m[i][c]
                m[i] = [vi - f * vr for vi, vr in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
        if r == rows:
            break
    if any(all(v == 0 for v in row[:-1]) and row[-1] != 0 for row in m):
        return None
    x = [Fraction(0)] * cols
    for i, c in enumerate(pivots):
        x[c] = m[i][-1]
    return x


def express(target: Element, family: Sequence[Element], basis: Sequence[Forest]) -> list[Fraction] | None:
    """Coefficients ``c`` with ``Σ c_i family_i = target``, or ``None`` if not in the span."""
    rows = vectors_to_matrix(family, basis)
    a = [list(col) for col in zip(*rows)] if rows else [[] for _ in basis]
    b = vectors_to_matrix([target], basis)[0]
    if not family:
        return [] if not any(b) else None
    return solve(a, b)


def in_span(target: Element, family: Sequence[Element], basis: Sequence[Forest]) -> bool:
    return express(target, family, basis) is not None
