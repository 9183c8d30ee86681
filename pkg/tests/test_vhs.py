"""Graded block bookkeeping of circle-fixed bundles.

The closed energy form is checked against the tail recursion exhaustively
on small data, and the grading-element weights against their defining
properties (trace zero, bracket eigenvalues) rather than stored tables.
"""

import itertools
import random
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from twistorsec.scalars import QQi
from twistorsec.vhs import (GradedBlockMatrix, VhsBlockData, adjoint_weight,
                            bb_slice_shape, block_offsets, block_slices,
                            det_exponent, energy_closed, energy_recursive,
                            g_lambda_ad_weight, g_lambda_exponents,
                            grade_positions, grafting_data, hyperhol_degree,
                            random_vhs, xi_bracket, xi_element, xi_matrix)


def balanced(degs):
    return tuple(degs) + (-sum(degs),)


@st.composite
def vhs_data(draw, lmax=6, rmax=4, dmax=30):
    l = draw(st.integers(min_value=1, max_value=lmax))
    ranks = draw(st.lists(st.integers(1, rmax), min_size=l, max_size=l))
    head = draw(st.lists(st.integers(-dmax, dmax), min_size=l - 1, max_size=l - 1))
    return VhsBlockData(tuple(ranks), balanced(head))


def test_energy_closed_equals_recursion_exhaustively():
    # Every degree vector with l <= 4 and |d_k| <= 2 (the acceptance run
    # widens the bound; this keeps the unit test quick).
    for l in range(1, 5):
        for head in itertools.product(range(-2, 3), repeat=l - 1):
            v = VhsBlockData((1,) * l, balanced(head))
            assert energy_closed(v) == energy_recursive(v)


@given(vhs_data())
def test_energy_closed_equals_recursion_random(v):
    assert energy_closed(v) == energy_recursive(v)


def test_energy_values():
    assert energy_closed(VhsBlockData((2,), (0,))) == 0
    assert energy_closed(VhsBlockData((1, 1, 1), (2, 0, -2))) == -4
    for g in range(2, 11):
        uni = VhsBlockData((1, 1), (g - 1, 1 - g))
        assert energy_closed(uni) == 1 - g


def test_energy_with_rational_degrees():
    v = VhsBlockData((1, 2), (Fraction(3, 2), Fraction(-3, 2)))
    assert energy_closed(v) == Fraction(-3, 2)
    assert energy_recursive(v) == Fraction(-3, 2)


def test_hyperhol_degree_examples():
    for g in range(2, 11):
        uni = VhsBlockData((1, 1), (g - 1, 1 - g))
        inf = VhsBlockData((2,), (0,))
        assert hyperhol_degree(uni, inf) == 1 - g
        assert hyperhol_degree(uni, inf) != 0


def test_hyperhol_degree_requires_matching_rank():
    with pytest.raises(ValueError):
        hyperhol_degree(VhsBlockData((1, 1), (1, -1)), VhsBlockData((3,), (0,)))


@given(vhs_data(lmax=5, rmax=3, dmax=10))
def test_xi_weights_properties(v):
    xi = xi_element(v)
    assert len(xi.weights) == v.l
    # Consecutive weights differ by one, so brackets scale by the grade.
    for a, b in zip(xi.weights, xi.weights[1:]):
        assert b - a == 1
    # Rank-weighted sum vanishes: xi is trace-free, det g(t) = t^0.
    assert sum(r * w for r, w in zip(v.ranks, xi.weights)) == 0
    assert det_exponent(v) == 0
    assert g_lambda_exponents(v) == xi.weights


def test_xi_weights_rank_one_pair():
    # For ranks (1, 1): m = 1/2, weights (-1/2, 1/2).
    v = VhsBlockData((1, 1), (1, -1))
    assert xi_element(v).weights == (Fraction(-1, 2), Fraction(1, 2))


@given(vhs_data(lmax=4, rmax=3, dmax=5), st.data())
def test_ad_weight_equals_grade(v, data):
    i = data.draw(st.integers(1, v.l))
    j = data.draw(st.integers(1, v.l))
    assert g_lambda_ad_weight(v, i, j) == i - j
    with pytest.raises(IndexError):
        g_lambda_ad_weight(v, 0, j)


def test_block_layout():
    v = VhsBlockData((2, 1, 3), (4, -1, -3))
    assert v.n == 6 and v.l == 3
    assert block_offsets(v) == (0, 2, 3)
    rows, cols = block_slices(v, 1, 2)  # source block 1 -> target block 2
    assert (rows, cols) == (slice(2, 3), slice(0, 2))
    with pytest.raises(IndexError):
        block_slices(v, 4, 1)


def test_graded_matrix_round_trip_and_bracket():
    v = VhsBlockData((1, 1), (1, -1))
    lower = GradedBlockMatrix(v, {(1, 2): np.array([[QQi(3)]], dtype=object)})
    upper = GradedBlockMatrix(v, {(2, 1): np.array([[QQi(5)]], dtype=object)})
    assert adjoint_weight(lower, 1, 2) == -1
    assert adjoint_weight(upper, 2, 1) == 1

    xi = xi_element(v)
    # [m, xi] = m xi - xi m scales each grade-k block by k.
    assert xi_bracket(lower, xi).blocks[(1, 2)][0, 0] == QQi(-3)
    assert xi_bracket(upper, xi).blocks[(2, 1)][0, 0] == QQi(5)

    # The same bracket via the materialized diagonal matrix.
    xm = xi_matrix(v)
    full = lower.to_full() + upper.to_full()
    bracket_full = full @ xm - xm @ full
    rebuilt = GradedBlockMatrix.from_full(v, bracket_full)
    assert rebuilt.blocks[(1, 2)][0, 0] == QQi(-3)
    assert rebuilt.blocks[(2, 1)][0, 0] == QQi(5)

    assert GradedBlockMatrix.from_full(v, full).blocks.keys() == {(1, 2), (2, 1)}
    assert lower.trace() == QQi(0)


def test_graded_matrix_validates_shape():
    v = VhsBlockData((2, 1), (1, -1))
    with pytest.raises(ValueError):
        GradedBlockMatrix(v, {(1, 2): np.zeros((2, 2), dtype=object)})


@given(vhs_data(lmax=4, rmax=2, dmax=5), st.data())
@settings(max_examples=40)
def test_xi_bracket_matches_matrix_commutator(v, data):
    k = data.draw(st.integers(-(v.l - 1), v.l - 1)) if v.l > 1 else 0
    positions = grade_positions(v, k)
    if not positions:
        return
    i, j, r, c = positions[0]
    blk = np.full((r, c), QQi(0), dtype=object)
    blk[0, 0] = QQi(2)
    m = GradedBlockMatrix(v, {(i, j): blk})
    xm = xi_matrix(v)
    direct = m.to_full() @ xm - xm @ m.to_full()
    via_weights = xi_bracket(m, xi_element(v)).to_full()
    assert (direct == via_weights).all()
    assert xi_bracket(m, xi_element(v)).blocks[(i, j)][0, 0] == QQi(k) * QQi(2)


def test_grade_positions_and_slice_shape():
    v = VhsBlockData((1, 2, 1), (3, 0, -3))
    assert grade_positions(v, 1) == ((2, 1, 1, 2), (3, 2, 2, 1))
    assert grade_positions(v, -2) == ((1, 3, 1, 1),)
    assert grade_positions(v, 5) == ()
    shape = bb_slice_shape(v)
    # beta lives in grades >= 1, phi also includes the diagonal.
    assert all(i - j >= 1 for i, j, _, _ in shape["beta"])
    assert all(i - j >= 0 for i, j, _, _ in shape["phi"])
    assert (1, 1, 1, 1) in shape["phi"] and (1, 1, 1, 1) not in shape["beta"]


def test_grafting_data():
    v, notes = grafting_data(3)
    assert v.ranks == (1, 1) and v.degrees == (2, -2)
    assert notes["beta_zero"] is True
    assert notes["energy"] == -2
    with pytest.raises(ValueError):
        grafting_data(1)


def test_validation_errors():
    with pytest.raises(ValueError):
        VhsBlockData((), ())
    with pytest.raises(ValueError):
        VhsBlockData((0, 1), (1, -1))
    with pytest.raises(ValueError):
        VhsBlockData((1, 1), (1,))
    with pytest.raises(ValueError):
        VhsBlockData((1, 1), (1, -2))
    with pytest.raises(ValueError):
        VhsBlockData((1,), (object(),))


def test_json_round_trip():
    v = VhsBlockData((1, 2), (Fraction(3, 2), Fraction(-3, 2)),
                     label="half", pair="partner")
    doc = v.to_json()
    assert doc["degrees"] == ["3/2", "-3/2"]
    back = VhsBlockData.from_json(doc)
    assert back == v
    plain = VhsBlockData((1, 1), (1, -1), label="x")
    assert "pair" not in plain.to_json()
    assert VhsBlockData.from_json(plain.to_json()) == plain


def test_random_vhs_is_deterministic_and_valid():
    a = random_vhs(random.Random(4))
    b = random_vhs(random.Random(4))
    assert a == b
    assert sum(a.degrees) == 0
