"""Combinatorial invariants of the quasitoric orbifold of an integer sequence.

Equivariant degree-2 classes are handled through their restrictions to the
n+2 torus-fixed points p_i = X_i cap X_{i+1} (indices mod n+2).  Each restriction
is a linear form on the Lie algebra of the 2-torus, stored as its coefficients
(c1, c2) in the basis dual to the standard lattice basis.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count

from .core import PlaneSeqError, Vec2, VectorSequence, cross, require_valid
from .gram import SymMatrix, build_gram
from . import linalg


class NotIntegral(PlaneSeqError):
    pass


class GenericPointFailure(RuntimeError):
    pass


class SingularIntersectionBlock(RuntimeError):
    pass


@dataclass(frozen=True)
class LinearForm2:
    c1: Fraction
    c2: Fraction

    def pair(self, w: Vec2) -> Fraction:
        return self.c1 * w.a + self.c2 * w.b

    def at(self, u1, u2) -> Fraction:
        return self.c1 * u1 + self.c2 * u2

    def __add__(self, other: LinearForm2) -> LinearForm2:
        return LinearForm2(self.c1 + other.c1, self.c2 + other.c2)

    def scale(self, k) -> LinearForm2:
        return LinearForm2(self.c1 * k, self.c2 * k)


ZERO_FORM = LinearForm2(Fraction(0), Fraction(0))


@dataclass(frozen=True)
class FixedPointData:
    index: int
    weight_pair: tuple[Vec2, Vec2]
    dual_pair: tuple[LinearForm2, LinearForm2]
    local_order: int


def require_int_sequence(v: VectorSequence) -> None:
    if not v.is_integral():
        raise NotIntegral("orbifold invariants need integer vectors")
    require_valid(v)


def _cyclic(v: VectorSequence) -> list[Vec2]:
    return v.full()


def local_group_orders(v: VectorSequence) -> list[int]:
    """|det(v_i, v_{i+1})| for i = 0..n+1; the last (closing) entry is always 1."""
    require_int_sequence(v)
    vs = _cyclic(v)
    k = len(vs)
    return [int(abs(cross(vs[i], vs[(i + 1) % k]))) for i in range(k)]


def is_smooth(v: VectorSequence) -> bool:
    return all(o == 1 for o in local_group_orders(v))


def dual_pair(u: Vec2, w: Vec2) -> tuple[LinearForm2, LinearForm2]:
    """Forms (f, g) with f(u) = 1, f(w) = 0, g(u) = 0, g(w) = 1: the rows of [u w]^{-1}."""
    d = cross(u, w)
    return LinearForm2(w.b / d, -w.a / d), LinearForm2(-u.b / d, u.a / d)


def fixed_point_data(v: VectorSequence) -> list[FixedPointData]:
    require_int_sequence(v)
    vs = _cyclic(v)
    k = len(vs)
    out = []
    for i in range(k):
        u, w = vs[i], vs[(i + 1) % k]
        out.append(FixedPointData(i, (u, w), dual_pair(u, w), int(abs(cross(u, w)))))
    return out


class Localization:
    """Fixed-point restrictions and push-forwards for one integer sequence."""

    def __init__(self, v: VectorSequence):
        require_int_sequence(v)
        if v.n == 0:
            # X_0 and X_1 would meet at both fixed points.
            raise PlaneSeqError("localization needs n >= 1")
        self.v = v
        self.points = fixed_point_data(v)
        self.size = len(self.points)  # n + 2
        self._weights = [cross(*p.weight_pair) for p in self.points]
        self._tables = {}
        self._admissible = {}
        self._matrices = {}

    def restriction(self, i: int, j: int) -> LinearForm2:
        """xi_i restricted to p_j; nonzero only when X_i passes through p_j (j = i-1 or i)."""
        k = self.size
        if not (0 <= i < k and 0 <= j < k):
            raise IndexError(f"indices must lie in 0..{k - 1}")
        if j == i:
            return self.points[j].dual_pair[0]
        if j == (i - 1) % k:
            return self.points[j].dual_pair[1]
        return ZERO_FORM

    def admissible_points(self, how_many: int, start: int = 1) -> list[tuple[int, int]]:
        """Points (1, t), t = start, start+1, ..., where no fixed-point weight vanishes."""
        key = (how_many, start)
        if key in self._admissible:
            return self._admissible[key]
        found = []
        for t in count(start):
            if t > start + 64 * self.size + 64:
                raise GenericPointFailure("no admissible evaluation point found")
            if all(f.at(1, t) != 0 for p in self.points for f in p.dual_pair):
                found.append((1, t))
                if len(found) == how_many:
                    self._admissible[key] = found
                    return found

    def support(self, i: int) -> tuple[int, ...]:
        """Fixed points lying on X_i."""
        return tuple(sorted({(i - 1) % self.size, i}))

    def _table(self, u1, u2):
        # Restrictions xi_i|p_k at (u1, u2), and the denominators
        # det(v_k, v_{k+1}) * xi_k|p_k * xi_{k+1}|p_k of the integration formula.
        key = (u1, u2)
        if key not in self._tables:
            k = self.size
            vals = [{j: self.restriction(i, j).at(u1, u2) for j in self.support(i)} for i in range(k)]
            dens = [self._weights[j] * vals[j][j] * vals[(j + 1) % k][j] for j in range(k)]
            self._tables[key] = (vals, dens)
        return self._tables[key]

    def evaluate(self, i: int, j: int, u1, u2) -> Fraction:
        """The localization sum for xi_i * xi_j at one evaluation point."""
        vals, dens = self._table(u1, u2)
        total = Fraction(0)
        for k in vals[i].keys() & vals[j].keys():
            total += vals[i][k] * vals[j][k] / dens[k]
        return total

    def pushforward(self, i: int, j: int, n_points: int = 2) -> Fraction:
        pts = self.admissible_points(n_points)
        values = {self.evaluate(i, j, *pt) for pt in pts}
        if len(values) != 1:
            raise AssertionError(f"localization sum for ({i}, {j}) is not constant: {values}")
        return values.pop()

    def intersection_matrix(self, n_points: int = 2) -> SymMatrix:
        if n_points in self._matrices:
            return self._matrices[n_points]
        k = self.size
        rows = [[Fraction(0)] * k for _ in range(k)]
        for i in range(k):
            for j in range(i, k):
                rows[i][j] = rows[j][i] = self.pushforward(i, j, n_points)
        self._matrices[n_points] = SymMatrix.from_rows(rows)
        return self._matrices[n_points]


def restriction(v: VectorSequence, i: int, j: int) -> LinearForm2:
    return Localization(v).restriction(i, j)


def gysin_pushforward(v: VectorSequence, i: int, j: int) -> Fraction:
    """<alpha_i^v cup alpha_j^v, [X]> from the fixed-point integration formula."""
    return Localization(v).pushforward(i, j)


def intersection_matrix(v: VectorSequence) -> SymMatrix:
    """(n+2) x (n+2) matrix of push-forwards, indices 0..n+1."""
    return Localization(v).intersection_matrix()


def inner_block(full: SymMatrix) -> SymMatrix:
    return full.block(1, full.order - 1)


def pullback_relation_check(v: VectorSequence, loc: Localization | None = None) -> bool:
    """Check sum_i <u, v_i> xi_i|p_j = u at every fixed point, and the
    three-term relation B_{i-1,i} v_{i-1} + B_{ii} v_i + B_{i+1,i} v_{i+1} = 0."""
    loc = Localization(v) if loc is None else loc
    k = loc.size
    vs = _cyclic(v)
    for j in range(k):
        for u in (LinearForm2(Fraction(1), Fraction(0)), LinearForm2(Fraction(0), Fraction(1))):
            acc = ZERO_FORM
            for i in range(k):
                acc = acc + loc.restriction(i, j).scale(u.pair(vs[i]))
            if acc != u:
                return False
    b = loc.intersection_matrix()
    for i in range(1, v.n + 1):
        a = b[i - 1, i] * vs[i - 1].a + b[i, i] * vs[i].a + b[i + 1, i] * vs[i + 1].a
        c = b[i - 1, i] * vs[i - 1].b + b[i, i] * vs[i].b + b[i + 1, i] * vs[i + 1].b
        if a != 0 or c != 0:
            return False
    return True


def kronecker_dual_gram(v: VectorSequence, full: SymMatrix | None = None) -> SymMatrix:
    """Inverse of the inner n x n intersection block; equals A."""
    block = inner_block(intersection_matrix(v) if full is None else full)
    try:
        return SymMatrix.from_rows(linalg.inverse(block.entries))
    except linalg.SingularMatrix as e:
        raise SingularIntersectionBlock(str(e)) from e


@dataclass(frozen=True)
class OrbifoldReport:
    smooth: bool
    local_orders: tuple[int, ...]
    euler: int
    intersection: SymMatrix
    gram_check: bool
    lemma54: bool
    pullback: bool


def orbifold_report(v: VectorSequence) -> OrbifoldReport:
    loc = Localization(v)
    full = loc.intersection_matrix()
    k = loc.size
    orders = local_group_orders(v)
    lemma54 = all(loc._weights[i] * full[i, (i + 1) % k] == 1 for i in range(k))
    gram_check = kronecker_dual_gram(v, full) == build_gram(v)
    return OrbifoldReport(
        smooth=all(o == 1 for o in orders),
        local_orders=tuple(orders),
        euler=k,
        intersection=full,
        gram_check=gram_check,
        lemma54=lemma54,
        pullback=pullback_relation_check(v, loc),
    )
