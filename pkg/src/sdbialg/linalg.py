"""Exact Gauss-Jordan elimination over any :class:`~sdbialg.scalars.Field`."""

from __future__ import annotations


class SingularMatrixError(ValueError):
    pass


def _rref(rows, ncols):
    """Row-reduce in place; returns the pivot columns."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [x * inv for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def solve(field, matrix, rhs):
    """One solution of ``matrix @ x = rhs`` (free variables set to 0), or None."""
    if not matrix:
        return []
    ncols = len(matrix[0])
    rows = [[field(a) for a in row] + [field(b)] for row, b in zip(matrix, rhs)]
    pivots = _rref(rows, ncols + 1)
    if ncols in pivots:
        return None
    x = [field.zero] * ncols
    for r, c in enumerate(pivots):
        x[c] = rows[r][ncols]
    return x


def inverse(field, matrix):
    n = len(matrix)
    rows = [
        [field(a) for a in row] + [field.one if i == j else field.zero for j in range(n)]
        for i, row in enumerate(matrix)
    ]
    pivots = _rref(rows, n)
    if pivots != list(range(n)):
        raise SingularMatrixError("matrix is not invertible")
    return [row[n:] for row in rows]


def matmul(a, b):
    return [
        [sum((a[i][k] * b[k][j] for k in range(len(b))), a[0][0] * 0) for j in range(len(b[0]))]
        for i in range(len(a))
    ]
