"""Shared test setup.

Registers a sympy converter for the exact scalar type, so library formulas
can be evaluated on symbolic inputs and identities checked coefficient by
coefficient.  The embedding is exact (Gaussian rational -> Rational + I*Rational).
"""

import sympy
from sympy.core.sympify import converter

from twistorsec.scalars import QQi

converter[QQi] = lambda q: sympy.Rational(q.re) + sympy.Rational(q.im) * sympy.I
