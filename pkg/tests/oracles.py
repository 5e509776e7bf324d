"""Independent reference computations used only by the tests.

None of these share code paths with the library: determinants come from
Laplace expansion, inverses from the adjugate, inertia from floating-point
eigenvalues, and winding from summed atan2 angles.
"""
from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

import numpy as np


def laplace_det(rows) -> Fraction:
    """Determinant by first-row Laplace expansion, memoized on the remaining columns."""
    m = [[Fraction(x) for x in r] for r in rows]
    n = len(m)

    @lru_cache(maxsize=None)
    def minor(row: int, cols: frozenset) -> Fraction:
        if row == n:
            return Fraction(1)
        total = Fraction(0)
        for pos, c in enumerate(sorted(cols)):
            if m[row][c]:
                term = m[row][c] * minor(row + 1, cols - {c})
                total += -term if pos % 2 else term
        return total

    return minor(0, frozenset(range(n)))


def adjugate_inverse(rows):
    n = len(rows)
    d = laplace_det(rows)
    if d == 0:
        raise ZeroDivisionError("singular")
    inv = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            sub = [[rows[r][c] for c in range(n) if c != j] for r in range(n) if r != i]
            cof = laplace_det(sub) * (-1 if (i + j) % 2 else 1)
            inv[j][i] = cof / d
    return inv


def float_inertia(rows, tol: float = 1e-6):
    """(pos, neg, zero) from numpy eigenvalues, or None when some |eigenvalue| <= tol."""
    if not rows:
        return (0, 0, 0)
    ev = np.linalg.eigvalsh(np.array([[float(x) for x in r] for r in rows]))
    if np.any(np.abs(ev) <= tol):
        return None
    return int(np.sum(ev > 0)), int(np.sum(ev < 0)), 0


def float_winding(vectors) -> float:
    """Sum of signed turning angles around the closed path v_0, ..., v_{n+1}, v_0, over 2 pi.

    Each step is the short arc (< pi); atan2 of (cross, dot) gives exactly that arc.
    """
    pts = [(0.0, 1.0)] + [(float(a), float(b)) for a, b in vectors] + [(1.0, 0.0), (0.0, 1.0)]
    total = 0.0
    for (ua, ub), (wa, wb) in zip(pts, pts[1:]):
        total += math.atan2(ua * wb - wa * ub, ua * wa + ub * wb)
    return total / (2 * math.pi)


def sign_changes(seq) -> int:
    return sum(1 for x, y in zip(seq, seq[1:]) if (x > 0) != (y > 0))
