"""Exact inertia of rational symmetric matrices."""
from __future__ import annotations

from dataclasses import dataclass

from .core import PlaneSeqError, sgn
from .gram import SymMatrix, leading_minors


@dataclass(frozen=True)
class Inertia:
    positive: int
    negative: int
    zero: int

    def signature(self) -> int:
        return self.positive - self.negative

    @property
    def order(self) -> int:
        return self.positive + self.negative + self.zero

    def __add__(self, other: Inertia) -> Inertia:
        return Inertia(self.positive + other.positive, self.negative + other.negative,
                       self.zero + other.zero)


class MinorVanishes(PlaneSeqError):
    def __init__(self, k: int):
        super().__init__(f"leading minor Delta_{k} vanishes")
        self.k = k


def _add_congruence(a, k: int, j: int, c: int) -> None:
    """In place: row_k += c*row_j, then col_k += c*col_j."""
    a[k] = [x + c * y for x, y in zip(a[k], a[j])]
    for row in a:
        row[k] += c * row[j]


def inertia_congruence(m: SymMatrix) -> Inertia:
    """Diagonalize by symmetric elimination and count pivot signs.

    A zero pivot with a nonzero entry below it is repaired by adding row and
    column j to row and column k, or subtracting them when adding would cancel
    (that happens exactly when ``A[j][j] == -2*A[j][k]``).
    """
    a = m.rows()
    n = len(a)
    pos = neg = zero = 0
    for k in range(n):
        if a[k][k] == 0:
            j = next((r for r in range(k + 1, n) if a[r][k] != 0), None)
            if j is None:
                zero += 1
                continue
            c = 1 if a[j][j] + 2 * a[j][k] != 0 else -1
            _add_congruence(a, k, j, c)
        piv = a[k][k]
        if piv > 0:
            pos += 1
        else:
            neg += 1
        row_k = a[k]
        for r in range(k + 1, n):
            f = a[r][k]
            if f:
                f /= piv
                a[r] = [x - f * y for x, y in zip(a[r], row_k)]
                # Column update is implied: rows below k only read columns > k from here on.
                a[r][k] = 0
        for r in range(k + 1, n):
            row_k[r] = 0
    return Inertia(pos, neg, zero)


def negatives_by_minors(m: SymMatrix) -> int:
    """Sign changes in Delta_0, ..., Delta_n (Sylvester's minor criterion)."""
    minors = leading_minors(m)
    for k, d in enumerate(minors):
        if d == 0:
            raise MinorVanishes(k)
    return sum(1 for x, y in zip(minors, minors[1:]) if sgn(x) != sgn(y))


def signature(m: SymMatrix) -> int:
    return inertia_congruence(m).signature()
