"""Rotation number R(v), the sign sum S(v), and the identity Sign(A) = 4R - S.

Each step v_i -> v_{i+1} is read as the arc of angle < pi turning in the
direction of sgn det(v_i, v_{i+1}); the path closes with the quarter turn
v_{n+1} = (1, 0) -> v_0 = (0, 1).
"""
from __future__ import annotations

from dataclasses import dataclass

from .core import V0, V_END, DegenerateSequence, Vec2, VectorSequence, cross, require_valid, sgn
from .gram import build_gram
from .inertia import signature


@dataclass(frozen=True)
class WindingReport:
    rotation: int
    s_value: int
    det_signs: tuple[int, ...]
    predicted_signature: int


def det_signs(v: VectorSequence) -> list[int]:
    signs = []
    for i, d in enumerate(v.dets()):
        if d == 0:
            raise DegenerateSequence(i)
        signs.append(sgn(d))
    return signs


def s_value(v: VectorSequence) -> int:
    return 1 + sum(det_signs(v))


def reference_direction(v: VectorSequence, start: int = 0) -> Vec2:
    """First d = (1, N), N >= start, collinear with no vector of the closed path."""
    vs = v.full()
    n_ = start
    while True:
        d = Vec2(1, n_)
        if all(cross(w, d) != 0 for w in vs):
            return d
        n_ += 1


def rotation_number(v: VectorSequence, direction: Vec2 | None = None) -> int:
    """Signed count of crossings of the ray through ``direction``.

    An arc (u, w) with turning sign s crosses the ray iff
    ``s*cross(u, d) > 0`` and ``s*cross(d, w) > 0``; it then contributes s.
    """
    require_valid(v)
    d = reference_direction(v) if direction is None else direction
    vs = v.full()
    if any(cross(w, d) == 0 for w in vs):
        raise ValueError(f"reference direction {d} is collinear with a sequence vector")
    vs.append(V0)
    total = 0
    for u, w in zip(vs, vs[1:]):
        s = sgn(cross(u, w))
        if s * cross(u, d) > 0 and s * cross(d, w) > 0:
            total += s
    return total


def winding_report(v: VectorSequence) -> WindingReport:
    signs = det_signs(v)
    r = rotation_number(v)
    s = 1 + sum(signs)
    return WindingReport(r, s, tuple(signs), 4 * r - s)


def verify_main_theorem(v: VectorSequence) -> tuple[WindingReport, int, bool]:
    """Return (report, exact signature of A, whether they agree)."""
    report = winding_report(v)
    sig = signature(build_gram(v))
    return report, sig, sig == report.predicted_signature


def half_plane_witness(n: int, k: int) -> VectorSequence:
    """Integer sequence in the upper half plane turning counterclockwise up
    to v_k and clockwise afterwards.

    v_i = (-i, 1) for 1 <= i <= k, then evenly spaced points on the segment
    from v_k to (1, 0).
    """
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
    vecs = [Vec2(-i, 1) for i in range(1, k + 1)]
    start = vecs[-1] if vecs else V0
    steps = n - k + 1
    for j in range(1, steps):
        vecs.append(Vec2(start.a * (steps - j) + V_END.a * j, start.b * (steps - j)))
    return VectorSequence(tuple(vecs))


def corollary_check(n: int, k: int) -> bool:
    """Sign(A) = n - 2k, R = 0 and S = 2k - n on the half-plane witness."""
    v = half_plane_witness(n, k)
    report, sig, ok = verify_main_theorem(v)
    return ok and sig == n - 2 * k and report.rotation == 0 and report.s_value == 2 * k - n
