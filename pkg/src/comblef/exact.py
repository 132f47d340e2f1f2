"""Exact integer/rational linear algebra for desk-scale matrices.

Matrices are lists of rows.  Integer routines use fraction-free (Bareiss)
elimination so intermediate values stay integral; rational routines work on
:class:`fractions.Fraction` entries.
"""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Matrix = list


def _rows(a) -> list[list]:
    if hasattr(a, "tolist"):
        a = a.tolist()
    return [list(r) for r in a]


def bareiss_det(a) -> int:
    """Determinant of a square integer matrix by Bareiss elimination."""
    m = [[int(x) for x in row] for row in _rows(a)]
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(a) -> int:
    """Rank over the rationals, computed fraction-free on integer input."""
    m = [[int(x) if not isinstance(x, Fraction) else x for x in row] for row in _rows(a)]
    if any(isinstance(x, Fraction) for row in m for x in row):
        return len(rref(m)[1])
    rows = len(m)
    cols = len(m[0]) if m else 0
    r = 0
    prev = 1
    for c in range(cols):
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        pivot = m[r][c]
        for i in range(r + 1, rows):
            for j in range(c + 1, cols):
                m[i][j] = (m[i][j] * pivot - m[i][c] * m[r][j]) // prev
            m[i][c] = 0
        prev = pivot
        r += 1
        if r == rows:
            break
    return r


def rref(a) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form over Q and the pivot columns."""
    m = [[Fraction(x) for x in row] for row in _rows(a)]
    rows = len(m)
    cols = len(m[0]) if m else 0
    pivots = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot_row = next((i for i in range(r, rows) if m[i][c] != 0), None)
        if pivot_row is None:
            continue
        m[r], m[pivot_row] = m[pivot_row], m[r]
        inv = 1 / m[r][c]
        m[r] = [x * inv for x in m[r]]
        for i in range(rows):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [x - f * y for x, y in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m, pivots


def nullspace(a, ncols: int | None = None) -> list[list[Fraction]]:
    """Basis of the kernel, one vector per free column."""
    rows = _rows(a)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    if not rows:
        return [[Fraction(int(i == j)) for i in range(ncols)] for j in range(ncols)]
    r, pivots = rref(rows)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * ncols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -r[i][f]
        basis.append(v)
    return basis


def column_space(a) -> list[list[Fraction]]:
    """Basis of the column space made of original (pivot) columns."""
    rows = _rows(a)
    if not rows or not rows[0]:
        return []
    _, pivots = rref(rows)
    return [[Fraction(rows[i][c]) for i in range(len(rows))] for c in pivots]


def coordinates(basis: Sequence[Sequence], vectors: Sequence[Sequence]) -> list[list[Fraction]]:
    """Coordinates of each vector in a linearly independent ``basis``.

    Raises ``ValueError`` when a vector is outside the span.
    """
    k = len(basis)
    if k == 0:
        for v in vectors:
            if any(x != 0 for x in v):
                raise ValueError("vector outside the span of an empty basis")
        return [[] for _ in vectors]
    n = len(basis[0])
    # augmented system [B | v_1 ... v_m] with B having the basis as columns
    aug = [[basis[j][i] for j in range(k)] + [v[i] for v in vectors] for i in range(n)]
    r, pivots = rref(aug)
    if pivots[:k] != list(range(k)):
        raise ValueError("basis is not linearly independent")
    if any(p >= k for p in pivots):
        raise ValueError("vector outside the span of the basis")
    return [[r[i][k + j] for i in range(k)] for j in range(len(vectors))]


def matmul(a, b) -> list[list]:
    a, b = _rows(a), _rows(b)
    if not a or not b:
        return [[0] * (len(b[0]) if b else 0) for _ in a]
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def matvec(a, v) -> list:
    return [sum(x * y for x, y in zip(row, v)) for row in _rows(a)]
