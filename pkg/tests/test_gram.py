from fractions import Fraction

import pytest
from hypothesis import given, settings

from planeseq.core import PlaneSeqError, VectorSequence
from planeseq.gram import SymMatrix, build_gram, det_from_crossings, det_product, leading_minors

from conftest import EX131, EX133, EX32, rational_vectors, sequences
from oracles import laplace_det

A32 = [[4, 3, 2, 1], [3, 6, 4, 2], [2, 4, 6, 3], [1, 2, 3, 4]]
A133 = [[1, 0, -1, 1], [0, 0, 1, -1], [-1, 1, 0, 0], [1, -1, 0, 1]]


def test_build_gram_examples():
    assert build_gram(EX131) == SymMatrix.from_rows([[1, 1], [1, 0]])
    assert build_gram(EX32) == SymMatrix.from_rows(A32)
    assert build_gram(EX133) == SymMatrix.from_rows(A133)
    assert build_gram(VectorSequence()).order == 0


def test_build_gram_accepts_degenerate_input():
    assert build_gram(VectorSequence.of((0, 0), (0, 1))) == SymMatrix.from_rows([[0, 0], [0, 0]])


def test_det_product_examples():
    assert det_product(EX131) == -1
    assert det_product(EX32) == 125
    assert det_product(VectorSequence()) == 1


def test_leading_minors_examples():
    assert leading_minors(SymMatrix.from_rows([[1, 1], [1, 0]])) == [1, 1, -1]
    assert leading_minors(build_gram(EX32)) == [1, 4, 15, 50, 125]
    assert leading_minors(SymMatrix()) == [1]


def test_leading_minors_past_a_vanishing_pivot():
    # Delta_2 of the third example is zero; frozen from the Laplace oracle.
    assert leading_minors(build_gram(EX133)) == [1, 1, 0, -1, -1]


def test_symmatrix_rejects_asymmetric():
    with pytest.raises(PlaneSeqError):
        SymMatrix.from_rows([[1, 2], [3, 4]])
    with pytest.raises(PlaneSeqError):
        SymMatrix.from_rows([[1, 2]])


@settings(max_examples=200)
@given(sequences(max_n=8, vectors=rational_vectors(5)))
def test_det_product_matches_laplace(v):
    assert det_product(v) == laplace_det(build_gram(v).entries)


@given(sequences(max_n=8, vectors=rational_vectors(5)))
def test_both_determinant_formulas_agree(v):
    assert det_product(v) == det_from_crossings(v)


@settings(max_examples=100)
@given(sequences(max_n=7, vectors=rational_vectors(4)))
def test_leading_minors_match_laplace_and_truncated_product(v):
    a = build_gram(v)
    minors = leading_minors(a)
    assert minors == [laplace_det(a.leading(k).entries) for k in range(v.n + 1)]
    for k in range(1, v.n + 1):
        trunc = VectorSequence(v.inner[:k])
        # Delta_k = a_1 b_k prod_{i<k} (a_{i+1} b_i - a_i b_{i+1}): det_product of the truncation.
        assert minors[k] == det_product(trunc)
    assert minors[-1] == det_product(v)
