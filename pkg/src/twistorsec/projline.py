"""Exact algebra on the projective line.

Sections of O(k) are stored 0-chart-first as coefficient sequences
``(c_0, ..., c_k)`` for ``c_0 + c_1*t + ... + c_k*t^k``; the infinity-chart
representative is the reversed sequence, and passing to it twice is the
identity.  On top of that this module provides the antipodal map, the
Wronskian pairing on degree-1 sections, and the Lie algebra sl2 of global
vector fields ``a(t) d/dt`` in the basis

    e = d/dt,    h = -2 t d/dt,    f = -t^2 d/dt,

so an element ``A = A_e e + A_h h + A_f f`` has coefficient polynomial
``A(t) = A_e - 2 A_h t - A_f t^2``.  The Killing form is computed from the
adjoint matrices in this basis, never from a hard-coded table.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .scalars import QQi, conj


class _Infinity:
    """The point at infinity of the projective line (singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"


INFINITY = _Infinity()


def antipodal(x):
    """The antipodal map x -> -1/conj(x), exchanging 0 and infinity."""
    if x is INFINITY:
        return QQi(0)
    if not x:
        return INFINITY
    return QQi(-1) / conj(x)


@dataclass(frozen=True)
class PolySection:
    """A section of O(k): polynomial of degree <= k in the 0-chart coordinate."""

    degree_bound: int
    coeffs: tuple

    def __post_init__(self):
        if self.degree_bound < 0:
            raise ValueError("degree bound must be >= 0")
        if len(self.coeffs) != self.degree_bound + 1:
            raise ValueError(
                f"need {self.degree_bound + 1} coefficients, got {len(self.coeffs)}")
        object.__setattr__(self, "coeffs", tuple(self.coeffs))

    def chart_involution(self) -> "PolySection":
        """The infinity-chart representative (reversed coefficients)."""
        return PolySection(self.degree_bound, self.coeffs[::-1])

    def __call__(self, t):
        value = self.coeffs[-1]
        for c in self.coeffs[-2::-1]:
            value = value * t + c
        return value


def wronskian(p: PolySection, q: PolySection):
    """psi1 * psi2' - psi1' * psi2 for degree-1 sections; a constant scalar."""
    if p.degree_bound != 1 or q.degree_bound != 1:
        raise ValueError("wronskian is defined for degree-bound-1 sections")
    return p.coeffs[0] * q.coeffs[1] - p.coeffs[1] * q.coeffs[0]


def wronskian_infinity_chart(p: PolySection, q: PolySection):
    """The Wronskian evaluated from infinity-chart data.

    The chart change carries the cocycle of the canonical-bundle twist, whose
    sign exactly cancels the coefficient reversal, so the value agrees with the
    0-chart computation.
    """
    return -wronskian(p.chart_involution(), q.chart_involution())


@dataclass(frozen=True)
class Sl2Element:
    """A global vector field A_e*e + A_h*h + A_f*f on the projective line."""

    a_e: object = 0
    a_h: object = 0
    a_f: object = 0

    def coefficient_poly(self) -> PolySection:
        """A(t) = A_e - 2*A_h*t - A_f*t^2 as a section of O(2)."""
        return PolySection(2, (self.a_e, -2 * self.a_h, -self.a_f))

    def evaluate(self, t):
        """Value of the vector field at t, as the coefficient of d/dt."""
        return self.coefficient_poly()(t)

    def __add__(self, other):
        return Sl2Element(self.a_e + other.a_e, self.a_h + other.a_h,
                          self.a_f + other.a_f)

    def __sub__(self, other):
        return Sl2Element(self.a_e - other.a_e, self.a_h - other.a_h,
                          self.a_f - other.a_f)

    def __neg__(self):
        return Sl2Element(-self.a_e, -self.a_h, -self.a_f)

    def __mul__(self, scalar):
        return Sl2Element(self.a_e * scalar, self.a_h * scalar, self.a_f * scalar)

    __rmul__ = __mul__


E = Sl2Element(1, 0, 0)
H = Sl2Element(0, 1, 0)
F = Sl2Element(0, 0, 1)

#: sigma = i*t*d/dt, the rotation field; h = 2i*sigma.
SIGMA = Sl2Element(0, QQi(0, Fraction(-1, 2)), 0)


def sl2_bracket(A: Sl2Element, B: Sl2Element) -> Sl2Element:
    """Lie bracket of the vector fields, expressed in the (e, h, f) basis.

    Structure constants come from [a d/dt, b d/dt] = (a b' - a' b) d/dt; the
    test suite re-derives them symbolically.
    """
    c_e = -2 * (A.a_e * B.a_h - A.a_h * B.a_e)
    c_h = A.a_e * B.a_f - A.a_f * B.a_e
    c_f = 2 * (A.a_f * B.a_h - A.a_h * B.a_f)
    return Sl2Element(c_e, c_h, c_f)


def ad_matrix(A: Sl2Element):
    """Matrix of ad_A = [A, -] in the basis (e, h, f), columns = images."""
    cols = [sl2_bracket(A, basis) for basis in (E, H, F)]
    return np.array([[c.a_e for c in cols],
                     [c.a_h for c in cols],
                     [c.a_f for c in cols]], dtype=object)


def killing(A: Sl2Element, B: Sl2Element):
    """kappa(A, B) = trace(ad_A o ad_B)."""
    return (ad_matrix(A) @ ad_matrix(B)).trace()


def h_pairing(A: Sl2Element):
    """(1/8i) * kappa(A, h); equals -i*A_h and (i/2) * A'(0)."""
    return killing(A, H) * QQi(0, Fraction(-1, 8))


def sigma_value(t):
    """The rotation vector field at the point t: the coefficient i*t of d/dt."""
    return SIGMA.evaluate(t)
