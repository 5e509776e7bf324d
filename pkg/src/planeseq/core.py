"""Exact scalars, plane vectors and vector sequences.

A sequence ``v = (v_0, v_1, ..., v_n, v_{n+1})`` always starts at ``v_0 = (0, 1)``
and ends at ``v_{n+1} = (1, 0)``.  Only the inner vectors ``v_1..v_n`` are stored.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Scalar = Union[int, str, Fraction]


class PlaneSeqError(ValueError):
    """Base class for input/precondition failures."""


class DegenerateSequence(PlaneSeqError):
    """Some consecutive pair of vectors is linearly dependent."""

    def __init__(self, index: int):
        super().__init__(f"det(v_{index}, v_{index + 1}) = 0")
        self.index = index


def as_rational(x: Scalar) -> Fraction:
    """Coerce an int, ``"p/q"`` string or Fraction to a Fraction.

    Floats are refused: every value in this package is exact.
    """
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact scalar {x!r}")
    if isinstance(x, str):
        s = x.strip()
        if "/" in s:
            num, den = s.split("/", 1)
            num_i, den_i = int(num), int(den)
            if den_i <= 0:
                raise ValueError(f"denominator must be positive in {x!r}")
            return Fraction(num_i, den_i)
        return Fraction(int(s))
    return Fraction(x)


def format_rational(x: Fraction) -> str:
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def sgn(x) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class Vec2:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", as_rational(self.a))
        object.__setattr__(self, "b", as_rational(self.b))

    def __neg__(self) -> Vec2:
        return Vec2(-self.a, -self.b)

    def __iter__(self):
        yield self.a
        yield self.b

    def scale(self, k) -> Vec2:
        return Vec2(self.a * k, self.b * k)

    def is_zero(self) -> bool:
        return self.a == 0 and self.b == 0

    def is_integral(self) -> bool:
        return self.a.denominator == 1 and self.b.denominator == 1


V0 = Vec2(0, 1)
V_END = Vec2(1, 0)


def cross(u: Vec2, w: Vec2) -> Fraction:
    """det(u, w) with u, w as columns: ``u.a*w.b - w.a*u.b``."""
    return u.a * w.b - w.a * u.b


@dataclass(frozen=True)
class VectorSequence:
    inner: tuple[Vec2, ...] = ()

    def __post_init__(self):
        vecs = tuple(v if isinstance(v, Vec2) else Vec2(*v) for v in self.inner)
        object.__setattr__(self, "inner", vecs)

    @classmethod
    def of(cls, *pairs) -> VectorSequence:
        """``VectorSequence.of((1, 4), (2, 3))``"""
        return cls(tuple(Vec2(*p) for p in pairs))

    @property
    def n(self) -> int:
        return len(self.inner)

    def vec(self, i: int) -> Vec2:
        """v_i for 0 <= i <= n+2; index n+2 wraps back to v_0."""
        n = self.n
        if i == 0 or i == n + 2:
            return V0
        if i == n + 1:
            return V_END
        if 1 <= i <= n:
            return self.inner[i - 1]
        raise IndexError(f"vector index {i} out of range for n={n}")

    def full(self) -> list[Vec2]:
        """[v_0, v_1, ..., v_{n+1}]"""
        return [V0, *self.inner, V_END]

    @property
    def a(self) -> list[Fraction]:
        return [v.a for v in self.inner]

    @property
    def b(self) -> list[Fraction]:
        return [v.b for v in self.inner]

    def dets(self) -> list[Fraction]:
        """det(v_i, v_{i+1}) for i = 0..n (the closing pair is excluded)."""
        vs = self.full()
        return [cross(vs[i], vs[i + 1]) for i in range(self.n + 1)]

    def is_integral(self) -> bool:
        return all(v.is_integral() for v in self.inner)

    def normalized(self) -> VectorSequence:
        """Representative of the scaling orbit (a, b) -> (r a, b / r) with a_1 = 1."""
        if self.n == 0:
            return self
        r = self.inner[0].a
        if r == 0:
            raise DegenerateSequence(0)
        return VectorSequence(tuple(Vec2(v.a / r, v.b * r) for v in self.inner))

    def __len__(self) -> int:
        return self.n


def satisfies_assumption(v: VectorSequence) -> bool:
    return all(d != 0 for d in v.dets())


def require_valid(v: VectorSequence) -> None:
    for i, d in enumerate(v.dets()):
        if d == 0:
            raise DegenerateSequence(i)


ZERO_VECTOR = "ZeroVector"
DEPENDENT_WITH_PREDECESSOR = "DependentWithPredecessor"
DEPENDENT_WITH_V0 = "DependentWithV0"
DEPENDENT_WITH_VN_PLUS_1 = "DependentWithVnPlus1"


@dataclass(frozen=True)
class ReductionReport:
    reduced: VectorSequence
    removed_count: int
    # (1-based index in the sequence at the time of removal, reason)
    steps: tuple[tuple[int, str], ...]


def _first_removable(vecs: Sequence[Vec2]) -> tuple[int, str] | None:
    n = len(vecs)
    candidates = []
    for i, v in enumerate(vecs, start=1):
        if v.is_zero():
            candidates.append((i, ZERO_VECTOR))
            break
    if n and vecs[0].a == 0:
        candidates.append((1, DEPENDENT_WITH_V0))
    if n and vecs[-1].b == 0:
        candidates.append((n, DEPENDENT_WITH_VN_PLUS_1))
    for i in range(1, n):
        if cross(vecs[i - 1], vecs[i]) == 0:
            candidates.append((i + 1, DEPENDENT_WITH_PREDECESSOR))
            break
    if not candidates:
        return None
    # Lowest index wins; on a tie the earlier-listed reason is kept.
    return min(candidates, key=lambda c: c[0])


def reduce(v: VectorSequence) -> ReductionReport:
    """Strip vectors that do not affect the signature of the Gram-type matrix.

    Removes zero vectors, a leading vector parallel to v_0, a trailing vector
    parallel to v_{n+1}, and any interior vector parallel to its predecessor,
    always taking the lowest applicable index first, until every consecutive
    determinant is nonzero.
    """
    vecs = list(v.inner)
    steps = []
    while True:
        hit = _first_removable(vecs)
        if hit is None:
            break
        idx, reason = hit
        del vecs[idx - 1]
        steps.append((idx, reason))
    reduced = VectorSequence(tuple(vecs))
    return ReductionReport(reduced, v.n - reduced.n, tuple(steps))


def flip(v: VectorSequence, i: int) -> VectorSequence:
    if not 1 <= i <= v.n:
        raise IndexError(f"flip index {i} out of range 1..{v.n}")
    vecs = list(v.inner)
    vecs[i - 1] = -vecs[i - 1]
    return VectorSequence(tuple(vecs))


def flip_suffix(v: VectorSequence, i: int) -> VectorSequence:
    """Negate v_i, ..., v_n."""
    if not 1 <= i <= v.n:
        raise IndexError(f"flip index {i} out of range 1..{v.n}")
    vecs = list(v.inner)
    vecs[i - 1:] = [-w for w in vecs[i - 1:]]
    return VectorSequence(tuple(vecs))


def sequence_from_pairs(pairs: Iterable[Sequence[Scalar]]) -> VectorSequence:
    out = []
    for p in pairs:
        if len(p) != 2:
            raise PlaneSeqError(f"expected a pair, got {p!r}")
        out.append(Vec2(as_rational(p[0]), as_rational(p[1])))
    return VectorSequence(tuple(out))
