"""Deterministic random sequences and the per-case invariant suite."""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator

from .core import Vec2, VectorSequence, satisfies_assumption
from .gram import build_gram, det_from_crossings, det_product, leading_minors
from .inertia import MinorVanishes, inertia_congruence, negatives_by_minors
from .linalg import identity, matmul
from .orbifold import inner_block, orbifold_report
from .tridiag import classify, inverse_closed_form, reconstruct
from .winding import verify_main_theorem


class RetryBudgetExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class FuzzConfig:
    seed: int = 0
    count: int = 1000
    n_max: int = 6
    entry_bound: int = 9
    integer_only: bool = False

    def __post_init__(self):
        if self.count < 1 or self.n_max < 1 or self.entry_bound < 1:
            raise ValueError("count, n_max and entry_bound must all be >= 1")


def _draw_scalar(rng: random.Random, cfg: FuzzConfig) -> Fraction:
    p = rng.randint(-cfg.entry_bound, cfg.entry_bound)
    if cfg.integer_only:
        return Fraction(p)
    return Fraction(p, rng.randint(1, cfg.entry_bound))


def generate(cfg: FuzzConfig) -> Iterator[VectorSequence]:
    """``cfg.count`` valid sequences; degenerate draws are redrawn (at most 100*count draws)."""
    rng = random.Random(cfg.seed)
    budget = 100 * cfg.count
    emitted = draws = 0
    while emitted < cfg.count:
        if draws >= budget:
            raise RetryBudgetExceeded(f"gave up after {draws} draws")
        draws += 1
        n = rng.randint(1, cfg.n_max)
        v = VectorSequence(tuple(Vec2(_draw_scalar(rng, cfg), _draw_scalar(rng, cfg)) for _ in range(n)))
        if satisfies_assumption(v):
            emitted += 1
            yield v


def check_case(v: VectorSequence) -> list[str]:
    """Names of the invariants that fail on ``v`` (empty when all hold)."""
    failed = []
    a = build_gram(v)
    _, sig, ok = verify_main_theorem(v)
    if not ok:
        failed.append("main_theorem")
    if det_product(v) != det_from_crossings(v) or leading_minors(a)[-1] != det_product(v):
        failed.append("determinant")
    inv = inverse_closed_form(v)
    if matmul(inv.dense(), a.rows()) != identity(v.n):
        failed.append("closed_form_inverse")
    if reconstruct(inv) != v.normalized():
        failed.append("reconstruct")
    if classify(v).signature != sig:
        failed.append("classify")
    inertia = inertia_congruence(a)
    try:
        if negatives_by_minors(a) != inertia.negative:
            failed.append("sylvester")
    except MinorVanishes:
        pass
    if v.is_integral():
        rep = orbifold_report(v)
        if not (rep.gram_check and rep.lemma54 and rep.pullback):
            failed.append("orbifold")
        if inner_block(rep.intersection).rows() != inv.dense():
            failed.append("localization_inverse")
    return failed


def run_fuzz(cfg: FuzzConfig) -> dict:
    cases = failures = 0
    first = None
    for v in generate(cfg):
        cases += 1
        bad = check_case(v)
        if bad:
            failures += 1
            if first is None:
                first = {"case": cases - 1, "failed": bad}
    out = {"cases": cases, "failures": failures}
    if first is not None:
        out["first_failure"] = first
    return out
