from fractions import Fraction

import pytest
from hypothesis import strategies as st

from planeseq.core import Vec2, VectorSequence, satisfies_assumption

EX131 = VectorSequence.of((-1, -1), (0, -1))
EX132 = VectorSequence.of((-1, -1), (-2, -1))
EX133 = VectorSequence.of((-1, -1), (1, 0), (0, 1), (-1, -1))
EX32 = VectorSequence.of((1, 4), (2, 3), (3, 2), (4, 1))

CARTAN_A4_OVER_5 = [
    [Fraction(2, 5), Fraction(-1, 5), 0, 0],
    [Fraction(-1, 5), Fraction(2, 5), Fraction(-1, 5), 0],
    [0, Fraction(-1, 5), Fraction(2, 5), Fraction(-1, 5)],
    [0, 0, Fraction(-1, 5), Fraction(2, 5)],
]


def int_vectors(bound=9):
    return st.builds(Vec2, st.integers(-bound, bound), st.integers(-bound, bound))


def rational_vectors(bound=9):
    q = st.fractions(min_value=-bound, max_value=bound, max_denominator=bound)
    return st.builds(Vec2, q, q)


def sequences(min_n=0, max_n=6, vectors=None):
    vectors = vectors if vectors is not None else int_vectors()
    return st.lists(vectors, min_size=min_n, max_size=max_n).map(lambda vs: VectorSequence(tuple(vs)))


def valid_sequences(min_n=1, max_n=6, vectors=None):
    return sequences(min_n, max_n, vectors).filter(satisfies_assumption)


# One pass/fail line per acceptance criterion, printed in the terminal summary.
ACCEPTANCE_LINES: list[str] = []


@pytest.fixture
def record_criterion():
    def record(number: int, title: str, ok: bool, detail: str = ""):
        status = "PASS" if ok else "FAIL"
        ACCEPTANCE_LINES.append(f"[{status}] criterion {number}: {title}" + (f" ({detail})" if detail else ""))
        return ok

    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
