"""The symmetric matrix A of a plane vector sequence.

``A[i][j] = a_i * b_j`` for ``i <= j`` (1-based), symmetrized.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .core import PlaneSeqError, VectorSequence, as_rational, cross
from . import linalg


@dataclass(frozen=True)
class SymMatrix:
    entries: tuple[tuple[Fraction, ...], ...] = ()

    def __post_init__(self):
        rows = tuple(tuple(as_rational(x) for x in row) for row in self.entries)
        n = len(rows)
        for i, row in enumerate(rows):
            if len(row) != n:
                raise PlaneSeqError(f"row {i} has length {len(row)}, expected {n}")
        for i in range(n):
            for j in range(i + 1, n):
                if rows[i][j] != rows[j][i]:
                    raise PlaneSeqError(f"matrix is not symmetric at ({i}, {j})")
        object.__setattr__(self, "entries", rows)

    @property
    def order(self) -> int:
        return len(self.entries)

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def rows(self) -> list[list[Fraction]]:
        return [list(r) for r in self.entries]

    def leading(self, k: int) -> SymMatrix:
        """Upper-left k x k block."""
        return SymMatrix(tuple(r[:k] for r in self.entries[:k]))

    def block(self, lo: int, hi: int) -> SymMatrix:
        return SymMatrix(tuple(r[lo:hi] for r in self.entries[lo:hi]))

    def congruent(self, p) -> SymMatrix:
        """P A P^T."""
        return SymMatrix(
            tuple(map(tuple, linalg.matmul(linalg.matmul(p, self.entries), linalg.transpose(p))))
        )

    @classmethod
    def from_rows(cls, rows) -> SymMatrix:
        return cls(tuple(tuple(r) for r in rows))


def build_gram(v: VectorSequence) -> SymMatrix:
    a, b = v.a, v.b
    n = v.n
    rows = [[a[min(i, j)] * b[max(i, j)] for j in range(n)] for i in range(n)]
    return SymMatrix.from_rows(rows)


def det_product(v: VectorSequence) -> Fraction:
    """``a_1 b_n prod_{i=1}^{n-1} (a_{i+1} b_i - a_i b_{i+1})``; 1 for n = 0."""
    n = v.n
    if n == 0:
        return Fraction(1)
    a, b = v.a, v.b
    return a[0] * b[-1] * prod((a[i + 1] * b[i] - a[i] * b[i + 1] for i in range(n - 1)), start=Fraction(1))


def det_from_crossings(v: VectorSequence) -> Fraction:
    """The same determinant written as ``(-1)^(n+1) prod_{i=0}^{n} det(v_i, v_{i+1})``."""
    vs = v.full()
    p = prod((cross(vs[i], vs[i + 1]) for i in range(v.n + 1)), start=Fraction(1))
    return -p if v.n % 2 == 0 else p


def leading_minors(m: SymMatrix) -> list[Fraction]:
    """[Delta_0 = 1, Delta_1, ..., Delta_n].

    Unpivoted elimination gives each Delta_k as a running product of pivots.
    Once a pivot vanishes the remaining minors are computed one by one with a
    pivoted determinant.
    """
    n = m.order
    out = [Fraction(1)]
    a = m.rows()
    k = 0
    while k < n:
        piv = a[k][k]
        if piv == 0:
            break
        out.append(out[-1] * piv)
        for r in range(k + 1, n):
            f = a[r][k]
            if f:
                f /= piv
                a[r] = [x - f * y for x, y in zip(a[r], a[k])]
        k += 1
    for j in range(k + 1, n + 1):
        out.append(linalg.det(m.leading(j).entries))
    return out
