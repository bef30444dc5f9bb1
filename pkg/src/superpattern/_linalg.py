"""Exact dense linear algebra over Q(q)."""

from __future__ import annotations

from .scalars import ONE, ZERO, RationalFunction


def determinant(matrix: list[list[RationalFunction]]) -> RationalFunction:
    """Fraction-free (Bareiss) elimination with row swaps."""
    n = len(matrix)
    if n == 0:
        return ONE
    m = [list(row) for row in matrix]
    sign = 1
    prev = ONE
    for k in range(n - 1):
        if m[k][k].is_zero():
            swap = next((i for i in range(k + 1, n) if not m[i][k].is_zero()), None)
            if swap is None:
                return ZERO
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) / prev
            m[i][k] = ZERO
        prev = pivot
    det = m[n - 1][n - 1]
    return det if sign > 0 else -det


def inverse(matrix: list[list[RationalFunction]]) -> list[list[RationalFunction]]:
    """Gauss-Jordan inverse; raises ZeroDivisionError if singular."""
    n = len(matrix)
    aug = [list(row) + [ONE if i == j else ZERO for j in range(n)] for i, row in enumerate(matrix)]
    for col in range(n):
        piv = next((r for r in range(col, n) if not aug[r][col].is_zero()), None)
        if piv is None:
            raise ZeroDivisionError("matrix is singular")
        aug[col], aug[piv] = aug[piv], aug[col]
        inv_p = aug[col][col].inverse()
        aug[col] = [x * inv_p for x in aug[col]]
        for r in range(n):
            if r != col and not aug[r][col].is_zero():
                f = aug[r][col]
                row_c = aug[col]
                aug[r] = [x - f * y for x, y in zip(aug[r], row_c)]
    return [row[n:] for row in aug]


def vec_mat(vec: list[RationalFunction], matrix: list[list[RationalFunction]]) -> list[RationalFunction]:
    n = len(matrix[0]) if matrix else 0
    out = [ZERO] * n
    for c, row in zip(vec, matrix):
        if c.is_zero():
            continue
        for j, x in enumerate(row):
            if not x.is_zero():
                out[j] = out[j] + c * x
    return out
