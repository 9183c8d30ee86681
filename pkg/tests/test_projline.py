"""Projective-line layer: charts, Wronskian, and the vector-field sl2.

The structure constants and the Killing values are re-derived here with
sympy from the defining vector fields, independently of the library code.
"""

from fractions import Fraction

import pytest
import sympy
from hypothesis import given, strategies as st

from twistorsec.projline import (E, F, H, INFINITY, SIGMA, PolySection,
                                 Sl2Element, ad_matrix, antipodal, h_pairing,
                                 killing, sigma_value, sl2_bracket, wronskian,
                                 wronskian_infinity_chart)
from twistorsec.scalars import I, QQi

rationals = st.fractions(max_denominator=20)
qqis = st.builds(QQi, rationals, rationals)
sl2s = st.builds(Sl2Element, qqis, qqis, qqis)


def test_bracket_matches_vector_field_oracle():
    # [a d/dt, b d/dt] = (a b' - a' b) d/dt, computed symbolically.
    t = sympy.symbols("t")
    ae, ah, af, be, bh, bf = sympy.symbols("ae ah af be bh bf")
    a_poly = ae - 2 * ah * t - af * t ** 2
    b_poly = be - 2 * bh * t - bf * t ** 2
    oracle = sympy.expand(a_poly * sympy.diff(b_poly, t)
                          - sympy.diff(a_poly, t) * b_poly)
    out = sl2_bracket(Sl2Element(ae, ah, af), Sl2Element(be, bh, bf))
    model = sympy.expand(out.a_e - 2 * out.a_h * t - out.a_f * t ** 2)
    assert sympy.simplify(oracle - model) == 0


def test_basis_brackets_are_standard():
    assert sl2_bracket(H, E) == Sl2Element(2, 0, 0)
    assert sl2_bracket(H, F) == Sl2Element(0, 0, -2)
    assert sl2_bracket(E, F) == Sl2Element(0, 1, 0)


@given(sl2s, sl2s, sl2s)
def test_jacobi_identity(a, b, c):
    total = (sl2_bracket(a, sl2_bracket(b, c))
             + sl2_bracket(b, sl2_bracket(c, a))
             + sl2_bracket(c, sl2_bracket(a, b)))
    assert total == Sl2Element(QQi(0), QQi(0), QQi(0))


@given(sl2s, sl2s)
def test_bracket_antisymmetry(a, b):
    assert sl2_bracket(a, b) == -sl2_bracket(b, a)


def test_killing_values_from_adjoint():
    assert killing(H, H) == 8
    assert killing(E, F) == 4
    assert killing(F, E) == 4
    assert killing(E, E) == 0
    assert killing(F, F) == 0
    assert killing(H, E) == 0
    assert killing(H, F) == 0


def test_killing_matches_symbolic_trace():
    # trace(ad_A ad_B) recomputed through sympy matrices.
    ae, ah, af, be, bh, bf = sympy.symbols("ae ah af be bh bf")
    a = Sl2Element(ae, ah, af)
    b = Sl2Element(be, bh, bf)
    ma = sympy.Matrix(3, 3, lambda i, j: ad_matrix(a)[i, j])
    mb = sympy.Matrix(3, 3, lambda i, j: ad_matrix(b)[i, j])
    oracle = sympy.expand((ma * mb).trace())
    assert sympy.simplify(oracle - sympy.expand(killing(a, b))) == 0


@given(sl2s, sl2s, sl2s)
def test_killing_invariance(a, b, c):
    assert killing(sl2_bracket(a, b), c) == killing(a, sl2_bracket(b, c))


def test_rotation_field():
    # sigma = i t d/dt, and h = 2i sigma.
    assert sigma_value(QQi(3)) == QQi(0, 3)
    assert sigma_value(QQi(0)) == QQi(0)
    assert SIGMA * (2 * I) == Sl2Element(QQi(0), QQi(1), QQi(0))


@given(sl2s)
def test_h_pairing_reads_off_h_coefficient(a):
    assert h_pairing(a) == -I * a.a_h
    # Same number from the derivative of the coefficient polynomial at 0.
    d_at_zero = -2 * a.a_h
    assert h_pairing(a) == QQi(0, Fraction(1, 2)) * d_at_zero


@given(st.integers(min_value=0, max_value=6), st.data())
def test_chart_involution_is_an_involution(k, data):
    coeffs = data.draw(st.lists(qqis, min_size=k + 1, max_size=k + 1))
    p = PolySection(k, tuple(coeffs))
    assert p.chart_involution().chart_involution() == p


@given(st.integers(min_value=0, max_value=6), st.data())
def test_chart_involution_value_law(k, data):
    coeffs = data.draw(st.lists(qqis, min_size=k + 1, max_size=k + 1))
    t = data.draw(qqis.filter(bool))
    p = PolySection(k, tuple(coeffs))
    assert p.chart_involution()(t) == t ** k * p(QQi(1) / t)


def test_wronskian_hand_value():
    p = PolySection(1, (QQi(1), QQi(2)))
    q = PolySection(1, (QQi(3), QQi(4)))
    assert wronskian(p, q) == QQi(-2)
    assert wronskian(q, p) == QQi(2)
    assert wronskian(p, p) == QQi(0)


@given(st.lists(qqis, min_size=4, max_size=4))
def test_wronskian_chart_independence(vals):
    p = PolySection(1, (vals[0], vals[1]))
    q = PolySection(1, (vals[2], vals[3]))
    assert wronskian_infinity_chart(p, q) == wronskian(p, q)


def test_wronskian_rejects_higher_degree():
    with pytest.raises(ValueError):
        wronskian(PolySection(2, (1, 2, 3)), PolySection(1, (1, 2)))


def test_poly_section_validation():
    with pytest.raises(ValueError):
        PolySection(1, (1, 2, 3))
    with pytest.raises(ValueError):
        PolySection(-1, ())


def test_antipodal_special_points():
    assert antipodal(QQi(0)) is INFINITY
    assert antipodal(INFINITY) == QQi(0)


@given(qqis.filter(bool))
def test_antipodal_is_an_involution(x):
    assert antipodal(antipodal(x)) == x
    # x and its antipode multiply to -1 after conjugating one of them.
    assert x * antipodal(x).conjugate() == QQi(-1)
