"""Tridiagonal inverse of A, reconstruction of a sequence from it, and the
classification of connected components of the configuration space."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .core import (
    PlaneSeqError,
    Vec2,
    VectorSequence,
    as_rational,
    cross,
    flip_suffix,
    require_valid,
    sgn,
)
from .gram import SymMatrix, build_gram
from .inertia import signature
from .winding import rotation_number


class NotInW(PlaneSeqError):
    """Matrix is singular or has a zero superdiagonal entry."""


class NotNormalized(PlaneSeqError):
    pass


class InvalidLabel(PlaneSeqError):
    pass


@dataclass(frozen=True)
class TriDiagSym:
    diag: tuple[Fraction, ...]
    superdiag: tuple[Fraction, ...] = ()

    def __post_init__(self):
        diag = tuple(as_rational(x) for x in self.diag)
        sup = tuple(as_rational(x) for x in self.superdiag)
        if len(diag) and len(sup) != len(diag) - 1:
            raise PlaneSeqError(f"superdiagonal must have {len(diag) - 1} entries, got {len(sup)}")
        object.__setattr__(self, "diag", diag)
        object.__setattr__(self, "superdiag", sup)

    @property
    def order(self) -> int:
        return len(self.diag)

    def dense(self) -> list[list[Fraction]]:
        n = self.order
        rows = [[Fraction(0)] * n for _ in range(n)]
        for i, p in enumerate(self.diag):
            rows[i][i] = p
        for i, q in enumerate(self.superdiag):
            rows[i][i + 1] = rows[i + 1][i] = q
        return rows

    def to_sym(self) -> SymMatrix:
        return SymMatrix.from_rows(self.dense())

    def upper_minors(self) -> list[Fraction]:
        """Delta_0..Delta_n of the upper-left blocks, by the three-term recurrence."""
        p, q = self.diag, self.superdiag
        out = [Fraction(1)]
        for k in range(len(p)):
            d = p[k] * out[-1]
            if k >= 1:
                d -= q[k - 1] ** 2 * out[-2]
            out.append(d)
        return out

    def lower_minors(self) -> list[Fraction]:
        """nabla_0..nabla_n of the lower-right blocks."""
        p, q = self.diag, self.superdiag
        n = len(p)
        out = [Fraction(1)]
        for m in range(1, n + 1):
            k = n - m
            d = p[k] * out[-1]
            if m >= 2:
                d -= q[k] ** 2 * out[-2]
            out.append(d)
        return out

    def det(self) -> Fraction:
        return self.upper_minors()[-1]

    def in_w(self) -> bool:
        return self.order > 0 and all(q != 0 for q in self.superdiag) and self.det() != 0

    @classmethod
    def from_sym(cls, m: SymMatrix) -> TriDiagSym:
        n = m.order
        for i in range(n):
            for j in range(i + 2, n):
                if m[i, j] != 0:
                    raise PlaneSeqError(f"matrix is not tridiagonal at ({i}, {j})")
        return cls(tuple(m[i, i] for i in range(n)), tuple(m[i, i + 1] for i in range(n - 1)))


def inverse_closed_form(v: VectorSequence) -> TriDiagSym:
    """A^{-1} with diagonal ``-det(v_{i-1}, v_{i+1}) / (m_{i-1} m_i)`` and
    superdiagonal ``1/m_i``, where ``m_i = det(v_i, v_{i+1})``."""
    require_valid(v)
    if v.n == 0:
        raise PlaneSeqError("inverse needs n >= 1")
    vs = v.full()
    m = v.dets()
    diag = tuple(-cross(vs[i - 1], vs[i + 1]) / (m[i - 1] * m[i]) for i in range(1, v.n + 1))
    sup = tuple(1 / m[i] for i in range(1, v.n))
    return TriDiagSym(diag, sup)


def cofactor_tridiag(b: TriDiagSym, i: int, j: int) -> Fraction:
    """Cofactor c_ij (1-based) of a tridiagonal symmetric matrix:
    ``(-1)^(i+j) Delta_{i-1} nabla_{n-j} prod_{l=i}^{j-1} q_l`` for i <= j."""
    if i > j:
        i, j = j, i
    n = b.order
    if not 1 <= i <= j <= n:
        raise IndexError(f"cofactor index ({i}, {j}) out of range for order {n}")
    up, low = b.upper_minors(), b.lower_minors()
    q = b.superdiag
    val = up[i - 1] * low[n - j] * math.prod(q[i - 1:j - 1], start=Fraction(1))
    return -val if (i + j) % 2 else val


def reconstruct(b: TriDiagSym) -> VectorSequence:
    """Sequence with a_1 = 1 whose A has inverse b."""
    if not b.in_w():
        raise NotInW("need det != 0 and every superdiagonal entry nonzero")
    n = b.order
    det_b = b.det()
    c1n = cofactor_tridiag(b, 1, n)
    return VectorSequence(tuple(
        Vec2(cofactor_tridiag(b, i, n) / c1n, cofactor_tridiag(b, 1, i) / det_b)
        for i in range(1, n + 1)
    ))


@dataclass(frozen=True)
class ComponentLabel:
    interior_signs: tuple[int, ...]
    signature: int

    @property
    def n(self) -> int:
        return len(self.interior_signs) + 1

    def validate(self) -> None:
        n = self.n
        if any(s not in (1, -1) for s in self.interior_signs):
            raise InvalidLabel("interior signs must be +1 or -1")
        if not -n <= self.signature <= n or (self.signature - n) % 2:
            raise InvalidLabel(f"signature {self.signature} is not of the form n - 2k for n = {n}")


@dataclass(frozen=True)
class TypeLabel:
    family: str  # "I" or "II"
    k: int

    def __str__(self) -> str:
        return f"{self.family}_{self.k}"


def classify(v: VectorSequence) -> ComponentLabel:
    require_valid(v)
    m = v.dets()
    return ComponentLabel(tuple(sgn(x) for x in m[1:-1]), signature(build_gram(v)))


def type_label(v: VectorSequence) -> TypeLabel:
    m = v.dets()
    if v.n == 0 or any(x <= 0 for x in m[:-1]):
        raise NotNormalized("need det(v_i, v_{i+1}) > 0 for 0 <= i <= n-1")
    if m[-1] == 0:
        raise NotNormalized("det(v_n, v_{n+1}) vanishes")
    return TypeLabel("I" if m[-1] < 0 else "II", rotation_number(v))


def type_for_signature(n: int, sig: int) -> TypeLabel:
    """Type I_k has Sign = 4k - n; type II_k has Sign = 4k - n - 2."""
    j = (sig + n) // 2
    if j % 2 == 0:
        return TypeLabel("I", j // 2)
    return TypeLabel("II", (j + 1) // 2)


def _type_angles(n: int, t: TypeLabel) -> list[float]:
    # Target angles (degrees) of v_1..v_n; consecutive steps are counterclockwise and < 180.
    if t.family == "I":
        # v_n ends at 360k + phi with phi in (0, 180), then turns clockwise to (1, 0).
        end = 135.0 if t.k == 0 else 360.0 * t.k + 45.0
    else:
        # v_n ends at 360k - 135, then turns counterclockwise to (1, 0).
        end = 360.0 * t.k - 135.0
    step = (end - 90.0) / n
    return [90.0 + i * step for i in range(1, n + 1)]


def _circle_point(angle_deg: float, max_den: int) -> Vec2:
    # Direction of the rational unit-circle point with parameter t ~ tan(angle/2), scaled to integers.
    half = math.radians(((angle_deg + 180.0) % 360.0) - 180.0) / 2
    if abs(abs(half) - math.pi / 2) < 1e-12:
        return Vec2(-1, 0)
    t = Fraction(math.tan(half)).limit_denominator(max_den)
    p, q = t.numerator, t.denominator
    return Vec2(q * q - p * p, 2 * p * q)


def type_witness(n: int, t: TypeLabel) -> VectorSequence:
    """Integer sequence of the given type, all turns counterclockwise up to v_n."""
    if n < 1:
        raise InvalidLabel("n must be >= 1")
    if t.family == "I" and not 0 <= t.k <= n // 2:
        raise InvalidLabel(f"type I_{t.k} impossible for n = {n}")
    if t.family == "II" and not 1 <= t.k <= (n + 1) // 2:
        raise InvalidLabel(f"type II_{t.k} impossible for n = {n}")
    angles = _type_angles(n, t)
    max_den = 4
    while True:
        v = VectorSequence(tuple(_circle_point(a, max_den) for a in angles))
        m = v.dets()
        if all(x > 0 for x in m[:-1]) and m[-1] != 0 and type_label(v) == t:
            return v
        max_den *= 4


def realize(label: ComponentLabel) -> VectorSequence:
    """A sequence v with classify(v) == label."""
    label.validate()
    n = label.n
    v = type_witness(n, type_for_signature(n, label.signature))
    # Negating v_{i+1}..v_n toggles only sgn det(v_i, v_{i+1}) among the interior signs.
    for i, want in enumerate(label.interior_signs, start=1):
        if sgn(cross(v.vec(i), v.vec(i + 1))) != want:
            v = flip_suffix(v, i + 1)
    return v


def all_labels(n: int) -> list[ComponentLabel]:
    from itertools import product

    return [
        ComponentLabel(signs, n - 2 * k)
        for signs in product((1, -1), repeat=n - 1)
        for k in range(n + 1)
    ]
