from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from planeseq.core import (
    DEPENDENT_WITH_PREDECESSOR,
    DEPENDENT_WITH_V0,
    DEPENDENT_WITH_VN_PLUS_1,
    ZERO_VECTOR,
    V0,
    V_END,
    Vec2,
    VectorSequence,
    as_rational,
    cross,
    flip,
    flip_suffix,
    format_rational,
    reduce,
    satisfies_assumption,
    sgn,
)
from planeseq.gram import build_gram
from planeseq.inertia import Inertia, inertia_congruence
from planeseq.winding import rotation_number, s_value

from conftest import EX131, EX132, EX133, int_vectors, rational_vectors, sequences


def test_cross_examples():
    assert cross(Vec2(0, 1), Vec2(1, 0)) == -1
    assert cross(Vec2(0, 1), Vec2(-1, -1)) == 1
    assert cross(Vec2(1, 4), Vec2(2, 3)) == -5


def test_closing_pair_has_det_one():
    assert cross(V_END, V0) == 1


@given(rational_vectors(), rational_vectors())
def test_cross_antisymmetric(u, w):
    assert cross(u, w) == -cross(w, u)


def test_rationals_are_reduced():
    x = as_rational("-6/4")
    assert (x.numerator, x.denominator) == (-3, 2)
    assert format_rational(x) == "-3/2"
    assert format_rational(Fraction(4, 2)) == "2"
    with pytest.raises(ValueError):
        as_rational("1/0")
    with pytest.raises(ValueError):
        as_rational("1/-2")
    with pytest.raises(TypeError):
        as_rational(0.5)


def test_vec_accessor_is_cyclic():
    v = VectorSequence.of((1, 2), (3, 4))
    assert v.vec(0) == V0
    assert v.vec(3) == V_END
    assert v.vec(4) == V0
    assert v.vec(1) == Vec2(1, 2)
    with pytest.raises(IndexError):
        v.vec(5)


def test_satisfies_assumption():
    assert satisfies_assumption(EX131)
    assert not satisfies_assumption(VectorSequence.of((0, 5)))
    assert satisfies_assumption(VectorSequence())


def test_reduce_unchanged():
    rep = reduce(VectorSequence.of((1, 1)))
    assert rep.reduced == VectorSequence.of((1, 1))
    assert rep.removed_count == 0
    assert rep.steps == ()


def test_reduce_zero_vector():
    rep = reduce(VectorSequence.of((0, 0), (1, 1)))
    assert rep.reduced == VectorSequence.of((1, 1))
    assert rep.removed_count == 1
    assert rep.steps == ((1, ZERO_VECTOR),)


def test_reduce_dependent_with_predecessor():
    v = VectorSequence.of((1, 1), (2, 2))
    rep = reduce(v)
    assert rep.reduced == VectorSequence.of((1, 1))
    assert rep.steps == ((2, DEPENDENT_WITH_PREDECESSOR),)
    # A = [[1, 2], [2, 4]] has eigenvalues 0 and 5.
    assert inertia_congruence(build_gram(v)) == Inertia(1, 0, 1)
    assert inertia_congruence(build_gram(rep.reduced)) + Inertia(0, 0, 1) == Inertia(1, 0, 1)


def test_reduce_endpoint_reasons():
    assert reduce(VectorSequence.of((0, 3), (1, 1))).steps == ((1, DEPENDENT_WITH_V0),)
    assert reduce(VectorSequence.of((1, 1), (2, 0))).steps == ((2, DEPENDENT_WITH_VN_PLUS_1),)


def test_reduce_can_reach_empty():
    rep = reduce(VectorSequence.of((0, 1), (0, 0), (3, 0)))
    assert rep.reduced.n == 0
    assert rep.removed_count == 3


@given(sequences(max_n=7, vectors=int_vectors(3)))
def test_reduce_postconditions(v):
    rep = reduce(v)
    assert satisfies_assumption(rep.reduced)
    assert rep.removed_count == v.n - rep.reduced.n == len(rep.steps)
    assert reduce(rep.reduced).removed_count == 0


@given(sequences(max_n=7, vectors=int_vectors(3)))
def test_reduction_preserves_inertia_up_to_zeros(v):
    rep = reduce(v)
    full = inertia_congruence(build_gram(v))
    red = inertia_congruence(build_gram(rep.reduced))
    assert full == red + Inertia(0, 0, rep.removed_count)


def test_flip():
    assert flip(VectorSequence.of((1, 1)), 1) == VectorSequence.of((-1, -1))
    with pytest.raises(IndexError):
        flip(VectorSequence.of((1, 1)), 2)
    with pytest.raises(IndexError):
        flip(VectorSequence.of((1, 1)), 0)


def test_flip_keeps_signature_example_132():
    from planeseq.inertia import signature

    assert signature(build_gram(flip(EX132, 1))) == signature(build_gram(EX132)) == 2


def test_flip_keeps_4r_minus_s_example_133():
    w = flip(EX133, 2)
    # Frozen from the float angle-sum oracle: R goes 2 -> 1 and S goes 6 -> 2.
    assert (rotation_number(EX133), s_value(EX133)) == (2, 6)
    assert (rotation_number(w), s_value(w)) == (1, 2)


@given(sequences(min_n=1, max_n=6, vectors=int_vectors(5)), st.data())
def test_flip_toggles_exactly_adjacent_signs(v, data):
    i = data.draw(st.integers(1, v.n))
    before = [sgn(d) for d in v.dets()]
    after = [sgn(d) for d in flip(v, i).dets()]
    for k in range(v.n + 1):
        if k in (i - 1, i):
            assert after[k] == -before[k]
        else:
            assert after[k] == before[k]


@given(sequences(min_n=2, max_n=6, vectors=int_vectors(5)), st.data())
def test_suffix_flip_toggles_one_interior_sign(v, data):
    i = data.draw(st.integers(2, v.n))
    before = [sgn(d) for d in v.dets()]
    after = [sgn(d) for d in flip_suffix(v, i).dets()]
    assert after[i - 1] == -before[i - 1]
    assert after[-1] == -before[-1]
    assert after[:i - 1] == before[:i - 1] and after[i:-1] == before[i:-1]


def test_normalized_sets_a1_to_one():
    v = VectorSequence.of((2, 3), (4, 5)).normalized()
    assert v == VectorSequence.of((1, 6), (2, 10))
