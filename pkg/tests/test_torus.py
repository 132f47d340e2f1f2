import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st

from comblef import (
    OutOfHypothesisWarning,
    TorusMapMatrix,
    torus_lefschetz,
    torus_nielsen,
    triad_bound_via_lambda,
    triad_lower_bound,
)
from comblef.torus import connected_sum_lambda

ANOSOV = TorusMapMatrix.parse("2 1; 1 1")


def test_lefschetz_examples():
    assert torus_lefschetz(TorusMapMatrix.scalar(2, 1)) == 0
    assert torus_lefschetz(TorusMapMatrix.scalar(2, -1)) == 4
    assert torus_lefschetz(ANOSOV) == -1
    assert torus_lefschetz(TorusMapMatrix.scalar(3, -1)) == 8


def test_nielsen_examples():
    assert torus_nielsen(TorusMapMatrix.scalar(1, 2)) == 1
    assert torus_nielsen(ANOSOV) == 1
    assert torus_nielsen(TorusMapMatrix.scalar(2, 3)) == 4


def test_parse():
    M = TorusMapMatrix.parse("-1 0; 0 -1")
    assert M == TorusMapMatrix.scalar(2, -1)
    with pytest.raises(ValueError):
        TorusMapMatrix.parse("1 x; 0 1")
    with pytest.raises(ValueError):
        TorusMapMatrix.parse("1 0 0; 0 1")
    with pytest.raises(ValueError):
        TorusMapMatrix.parse("1 0; 0 1", p=3)
    with pytest.raises(ValueError):
        TorusMapMatrix(0, ())


def test_triad_bound():
    I3 = TorusMapMatrix.scalar(3, 1)
    assert triad_lower_bound(I3, I3) == -3
    minus = TorusMapMatrix.scalar(3, -1)
    with warnings.catch_warnings():
        warnings.simplefilter("error")
        assert triad_lower_bound(minus, minus) == 13


def test_triad_bound_warns_below_three():
    M = TorusMapMatrix.scalar(2, -1)
    with pytest.warns(OutOfHypothesisWarning):
        assert triad_lower_bound(M, M) == 5


def test_triad_dimension_mismatch():
    with pytest.raises(ValueError):
        triad_lower_bound(TorusMapMatrix.scalar(3, 1), TorusMapMatrix.scalar(4, 1))


def test_bound_via_lambda():
    assert triad_bound_via_lambda(0, 0, "plus") == -1
    assert triad_bound_via_lambda(0, 2, "minus") == -3
    with pytest.raises(ValueError):
        triad_bound_via_lambda(0, 0, "sideways")


@pytest.mark.parametrize("c,case,sphere", [(-1, "plus", 0), (2, "minus", 2), (2, "minus", -4)])
def test_routes_agree_for_scalar_maps(c, case, sphere):
    M = TorusMapMatrix.scalar(3, c)
    total = connected_sum_lambda(M, M, sphere)
    assert triad_bound_via_lambda(total, sphere, case) == triad_lower_bound(M, M)


unimodular = st.sampled_from([
    ((1, 1), (0, 1)), ((1, 0), (1, 1)), ((0, 1), (1, 0)), ((2, 1), (1, 1)), ((0, -1), (1, 0)),
])
entries = st.lists(st.integers(-3, 3), min_size=4, max_size=4)


@given(entries, unimodular)
def test_conjugation_invariance(flat, P):
    A = np.array(flat).reshape(2, 2)
    P = np.array(P)
    Pinv = np.rint(np.linalg.inv(P)).astype(int)
    B = P @ A @ Pinv
    assert torus_lefschetz(TorusMapMatrix(2, A.tolist())) == torus_lefschetz(TorusMapMatrix(2, B.tolist()))


@given(st.integers(1, 4).flatmap(lambda p: st.lists(st.integers(-3, 3), min_size=p * p, max_size=p * p)))
def test_lefschetz_matches_float_determinant(flat):
    p = int(round(len(flat) ** 0.5))
    A = np.array(flat).reshape(p, p)
    assert torus_lefschetz(TorusMapMatrix(p, A.tolist())) == round(np.linalg.det(np.eye(p) - A))
