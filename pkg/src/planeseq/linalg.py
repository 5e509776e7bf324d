"""Small exact dense linear algebra over Fractions (lists of lists)."""
from __future__ import annotations

from fractions import Fraction
from typing import Sequence

Rows = Sequence[Sequence[Fraction]]


class SingularMatrix(ArithmeticError):
    pass


def identity(n: int) -> list[list[Fraction]]:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def matmul(x: Rows, y: Rows) -> list[list[Fraction]]:
    if not x:
        return []
    inner = len(y)
    cols = len(y[0]) if inner else 0
    return [
        [sum((x[i][k] * y[k][j] for k in range(inner)), Fraction(0)) for j in range(cols)]
        for i in range(len(x))
    ]


def transpose(x: Rows) -> list[list[Fraction]]:
    return [list(col) for col in zip(*x)]


def det(m: Rows) -> Fraction:
    """Determinant by Gaussian elimination with row swaps on nonzero pivots."""
    a = [[Fraction(e) for e in row] for row in m]
    n = len(a)
    result = Fraction(1)
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            return Fraction(0)
        if p != k:
            a[k], a[p] = a[p], a[k]
            result = -result
        piv = a[k][k]
        result *= piv
        for r in range(k + 1, n):
            f = a[r][k]
            if f:
                f /= piv
                row_k = a[k]
                a[r] = [x - f * y for x, y in zip(a[r], row_k)]
    return result


def inverse(m: Rows) -> list[list[Fraction]]:
    """Gauss-Jordan inverse; raises SingularMatrix."""
    n = len(m)
    a = [[Fraction(e) for e in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(m)]
    for k in range(n):
        p = next((r for r in range(k, n) if a[r][k] != 0), None)
        if p is None:
            raise SingularMatrix(f"no pivot in column {k}")
        a[k], a[p] = a[p], a[k]
        piv = a[k][k]
        a[k] = [x / piv for x in a[k]]
        for r in range(n):
            if r != k and a[r][k]:
                f = a[r][k]
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
    return [row[n:] for row in a]
