"""Truncated power-series families of lambda-connections over the torus backend.

A lift stores the coefficients of the pair of operators

    dbar(t) = dbar + sum_{j>=1} t^j Psi_j            (Psi_j of bidegree (0,1))
    D(t)    = Phi + t*del + sum_{j>=1} t^j Phi_j     (Phi, Phi_j of bidegree (1,0))

truncated at a fixed order N.  Every series operation is exact through order
N and raises if a higher order is requested; nothing wraps silently.  The
slot Phi_1 is kept (normalized germs have Phi_1 = 0) because circle-fixed
lifts built from graded slice data place their grade-0 datum there.

On top of the lifts this module provides the curvature-type integrability
expansion and its linearization, infinitesimal gauge directions, the energy
and its first variation, the two-form on tangent series, the second
variation at circle-fixed lifts, the fixed-lift constructor from graded
block data, Laurent-window regluing to the infinity coordinate, and the
antiholomorphic involution at a fixed nonzero parameter.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .constants import (ENERGY_LIFT_COEFF, OMEGA_HAT_COEFF, XI_SCALAR_DLAMBDA,
                        XI_SCALAR_PHIPSI)
from .scalars import QQi, conj
from .torus_forms import (FourierScalar, MatrixForm, commutator, conj_transpose,
                          dbar, del_op, integrate_trace, random_matrix_form, trace,
                          wedge, wedge_bracket)
from .vhs import VhsBlockData, block_slices, grade_positions, xi_matrix


def _check_coeff(f: MatrixForm, rank: int, bidegree, what: str):
    if not isinstance(f, MatrixForm):
        raise TypeError(f"{what} must be a MatrixForm")
    if f.size != rank:
        raise ValueError(f"{what} has size {f.size}, expected {rank}")
    if f.bidegree != bidegree:
        raise ValueError(f"{what} has bidegree {f.bidegree}, expected {bidegree}")


@dataclass(frozen=True, eq=False)
class LambdaLift:
    """Coefficients of a truncated lambda-connection family (all trace-free)."""

    rank: int
    order: int
    phi0: MatrixForm  # the t^0 coefficient Phi of the D-part
    psi: tuple  # (Psi_1, ..., Psi_N)
    phi: tuple  # (Phi_1, ..., Phi_N); Phi_1 = 0 for normalized germs

    def __post_init__(self):
        if self.order < 1:
            raise ValueError("truncation order must be >= 1")
        psi, phi = tuple(self.psi), tuple(self.phi)
        if len(psi) != self.order or len(phi) != self.order:
            raise ValueError("need exactly N coefficient forms on each side")
        _check_coeff(self.phi0, self.rank, (1, 0), "Phi")
        for j, f in enumerate(psi, start=1):
            _check_coeff(f, self.rank, (0, 1), f"Psi_{j}")
        for j, f in enumerate(phi, start=1):
            _check_coeff(f, self.rank, (1, 0), f"Phi_{j}")
        for f in (self.phi0,) + psi + phi:
            if not trace(f).is_zero:
                raise ValueError("lift coefficients must be trace-free")
        object.__setattr__(self, "psi", psi)
        object.__setattr__(self, "phi", phi)

    def b_coeff(self, k: int) -> MatrixForm:
        """t^k coefficient of the dbar-part (zero at k = 0)."""
        if not 0 <= k <= self.order:
            raise ValueError(f"order {k} outside truncation 0..{self.order}")
        return MatrixForm.zero(self.rank, (0, 1)) if k == 0 else self.psi[k - 1]

    def a_coeff(self, k: int) -> MatrixForm:
        """t^k form coefficient of the D-part (the operator t*del is separate)."""
        if not 0 <= k <= self.order:
            raise ValueError(f"order {k} outside truncation 0..{self.order}")
        return self.phi0 if k == 0 else self.phi[k - 1]

    def to_json(self, exact: bool = True) -> dict:
        return {"rank": self.rank, "order": self.order,
                "phi0": self.phi0.to_json(exact),
                "psi": [f.to_json(exact) for f in self.psi],
                "phi": [f.to_json(exact) for f in self.phi]}

    @classmethod
    def from_json(cls, doc: dict) -> "LambdaLift":
        return cls(doc["rank"], doc["order"], MatrixForm.from_json(doc["phi0"]),
                   tuple(MatrixForm.from_json(f) for f in doc["psi"]),
                   tuple(MatrixForm.from_json(f) for f in doc["phi"]))


def make_lift(phi0: MatrixForm, psi=(), phi=(), order: int = 4) -> LambdaLift:
    """Build a lift, padding the coefficient sequences with zeros up to order."""
    rank = phi0.size
    psi = list(psi) + [MatrixForm.zero(rank, (0, 1))] * (order - len(psi))
    phi = list(phi) + [MatrixForm.zero(rank, (1, 0))] * (order - len(phi))
    if len(psi) > order or len(phi) > order:
        raise ValueError("more coefficients than the truncation order")
    return LambdaLift(rank, order, phi0, tuple(psi), tuple(phi))


def admissible(lift: LambdaLift) -> bool:
    """Shape predicate: dbar-part of t-degree <= 1 and D-part exactly Phi + t*del."""
    return (all(f.is_zero for f in lift.psi[1:])
            and all(f.is_zero for f in lift.phi))


@dataclass(frozen=True, eq=False)
class TangentSeries:
    """A tangent direction to the space of lifts: psi_0..psi_N and phi_0..phi_N."""

    order: int
    psik: tuple  # (0,1) forms, indices 0..N
    phik: tuple  # (1,0) forms, indices 0..N

    def __post_init__(self):
        psik, phik = tuple(self.psik), tuple(self.phik)
        if len(psik) != self.order + 1 or len(phik) != self.order + 1:
            raise ValueError("need coefficients for orders 0..N")
        rank = psik[0].size
        for k, f in enumerate(psik):
            _check_coeff(f, rank, (0, 1), f"psi_{k}")
        for k, f in enumerate(phik):
            _check_coeff(f, rank, (1, 0), f"phi_{k}")
        object.__setattr__(self, "psik", psik)
        object.__setattr__(self, "phik", phik)

    @property
    def rank(self) -> int:
        return self.psik[0].size

    @classmethod
    def zero(cls, rank: int, order: int) -> "TangentSeries":
        return cls(order, tuple(MatrixForm.zero(rank, (0, 1)) for _ in range(order + 1)),
                   tuple(MatrixForm.zero(rank, (1, 0)) for _ in range(order + 1)))

    def __add__(self, other):
        if self.order != other.order:
            raise ValueError("order mismatch")
        return TangentSeries(self.order,
                             tuple(a + b for a, b in zip(self.psik, other.psik)),
                             tuple(a + b for a, b in zip(self.phik, other.phik)))

    def __mul__(self, c):
        return TangentSeries(self.order, tuple(f * c for f in self.psik),
                             tuple(f * c for f in self.phik))

    __rmul__ = __mul__


@dataclass(frozen=True, eq=False)
class GaugeSeries:
    """A series of infinitesimal gauge parameters xi_0..xi_N (trace-free functions)."""

    order: int
    xik: tuple

    def __post_init__(self):
        xik = tuple(self.xik)
        if len(xik) != self.order + 1:
            raise ValueError("need gauge coefficients for orders 0..N")
        rank = xik[0].size
        for k, f in enumerate(xik):
            _check_coeff(f, rank, (0, 0), f"xi_{k}")
            if not trace(f).is_zero:
                raise ValueError(f"xi_{k} must be trace-free")
        object.__setattr__(self, "xik", xik)

    @property
    def rank(self) -> int:
        return self.xik[0].size


def _check_order(lift: LambdaLift, up_to: int):
    if up_to > lift.order:
        raise ValueError(f"requested order {up_to} exceeds truncation {lift.order}")
    if up_to < 0:
        raise ValueError("order must be >= 0")


def integrability_residuals(lift: LambdaLift, up_to: int):
    """t^k coefficients, k = 0..up_to, of the curvature of the lift.

    The full curvature is dbar(A(t)) + t*del(B(t)) + [A(t) ^ B(t)] with A the
    D-part form coefficients and B the dbar-part ones; the trivial background
    contributes nothing (del and dbar commute exactly on the mode model).
    Order 0 is dbar(Phi); order 1 is dbar(Phi_1) + [Phi ^ Psi_1].
    """
    _check_order(lift, up_to)
    out = []
    for k in range(up_to + 1):
        r = dbar(lift.a_coeff(k))
        if k >= 1:
            r = r + del_op(lift.b_coeff(k - 1))
        for i in range(k + 1):
            a, b = lift.a_coeff(i), lift.b_coeff(k - i)
            if not (a.is_zero or b.is_zero):
                r = r + wedge(a, b) + wedge(b, a)
        out.append(r)
    return out


def linearized_residuals(lift: LambdaLift, t: TangentSeries, up_to: int):
    """Linearization of the curvature expansion at the lift, order by order."""
    _check_order(lift, up_to)
    if t.rank != lift.rank or t.order < up_to:
        raise ValueError("tangent shape does not match the lift")
    out = []
    for k in range(up_to + 1):
        r = dbar(t.phik[k])
        if k >= 1:
            r = r + del_op(t.psik[k - 1])
        for i in range(k + 1):
            r = r + _bracket_sum(lift.a_coeff(i), t.psik[k - i])
            r = r + _bracket_sum(t.phik[i], lift.b_coeff(k - i))
        out.append(r)
    return out


def _bracket_sum(a: MatrixForm, b: MatrixForm) -> MatrixForm:
    """[a ^ b] for a (1,0) and b (0,1), skipping zero factors."""
    if a.is_zero or b.is_zero:
        return MatrixForm.zero(a.size, (1, 1))
    return wedge(a, b) + wedge(b, a)


def gauge_tangent(lift: LambdaLift, xi: GaugeSeries) -> TangentSeries:
    """The tangent series of the infinitesimal gauge action by xi(t).

    psi_k = dbar(xi_k) + sum_i [Psi_i, xi_(k-i)] and
    phi_k = del(xi_(k-1)) + sum_i [Phi_i, xi_(k-i)] (with Phi_0 = Phi).
    """
    if xi.rank != lift.rank:
        raise ValueError("gauge parameter rank mismatch")
    n = min(lift.order, xi.order)
    psik, phik = [], []
    for k in range(n + 1):
        p = dbar(xi.xik[k])
        for i in range(1, k + 1):
            p = p + commutator(lift.b_coeff(i), xi.xik[k - i])
        f = MatrixForm.zero(lift.rank, (1, 0))
        if k >= 1:
            f = f + del_op(xi.xik[k - 1])
        for i in range(0, k + 1):
            a = lift.a_coeff(i)
            if not a.is_zero:
                f = f + commutator(a, xi.xik[k - i])
        psik.append(p)
        phik.append(f)
    return TangentSeries(n, tuple(psik), tuple(phik))


def energy_of_lift(lift: LambdaLift):
    """The energy pairing of the lowest-order coefficients: c * integral tr(Phi ^ Psi_1)."""
    return ENERGY_LIFT_COEFF * integrate_trace(wedge(lift.phi0, lift.b_coeff(1)))


def d_energy_of_lift(lift: LambdaLift, t: TangentSeries):
    """First variation of the energy along a tangent series."""
    if t.order < 1:
        raise ValueError("need tangent coefficients up to order 1")
    return ENERGY_LIFT_COEFF * (integrate_trace(wedge(t.phik[0], lift.b_coeff(1)))
                                + integrate_trace(wedge(lift.phi0, t.psik[1])))


def omega_hat(lift: LambdaLift, t1: TangentSeries, t2: TangentSeries):
    """The two-form on tangent series at the lift.

    The four-term integrand pairs the order-0 and order-1 coefficients of the
    two tangents; the global prefactor is the frozen convention constant.
    """
    for t in (t1, t2):
        if t.rank != lift.rank or t.order < 1:
            raise ValueError("tangents must match the lift and reach order 1")
    value = (-integrate_trace(wedge(t1.phik[0], t2.psik[1]))
             + integrate_trace(wedge(t2.phik[0], t1.psik[1]))
             - integrate_trace(wedge(t1.phik[1], t2.psik[0]))
             + integrate_trace(wedge(t2.phik[1], t1.psik[0])))
    return OMEGA_HAT_COEFF * value


def pair_unsigned(a: MatrixForm, b: MatrixForm):
    """Integral of tr(a b) against the canonical dz^dzbar orientation.

    Both arguments must be 1-forms of complementary types.  Unlike the graded
    wedge, no reordering sign is applied: the matrix coefficients are
    multiplied in the given order and integrated in the fixed orientation.
    This is the pairing in which the second-variation formulas close up.
    """
    pair = {a.bidegree, b.bidegree}
    if pair != {(1, 0), (0, 1)}:
        raise ValueError("unsigned pairing needs one (1,0) and one (0,1) form")
    prod = MatrixForm((1, 1), a.size, a.entries @ b.entries)
    return integrate_trace(prod)


def second_variation(lift: LambdaLift, t: TangentSeries, xi: MatrixForm):
    """Second variation of the energy at a circle-fixed lift.

    Requires the fixed-point relations for the supplied grading parameter xi;
    each is checked and a violation is reported by name.  The value is
    integral tr(psi0 [phi1,xi] + phi1 [psi0,xi] + psi1 [phi0,xi]
                + phi0 [psi1,xi] + 2 phi0 psi1)
    in the unsigned orientation pairing.
    """
    _check_coeff(xi, lift.rank, (0, 0), "xi")
    if t.order < 1 or t.rank != lift.rank:
        raise ValueError("tangent must match the lift and reach order 1")
    checks = (
        ("dbar(xi) = 0", dbar(xi).is_zero),
        ("Phi = [Phi, xi]", lift.phi0 == commutator(lift.phi0, xi)),
        ("-Psi_1 = [Psi_1, xi]", -lift.b_coeff(1) == commutator(lift.b_coeff(1), xi)),
        ("del(xi) = 0", del_op(xi).is_zero),
    )
    for name, ok in checks:
        if not ok:
            raise ValueError(f"fixed-point relation violated: {name}")
    ps0, ps1 = t.psik[0], t.psik[1]
    ph0, ph1 = t.phik[0], t.phik[1]
    value = (pair_unsigned(ps0, commutator(ph1, xi))
             + pair_unsigned(ph1, commutator(ps0, xi))
             + pair_unsigned(ps1, commutator(ph0, xi))
             + pair_unsigned(ph0, commutator(ps1, xi))
             + 2 * pair_unsigned(ph0, ps1))
    return value


def second_variation_weighted(t: TangentSeries, m0, m1, n0, n1):
    """The eigenweight form of the second variation for pure-weight tangents:
    (m1 + n0) tr(psi0 phi1) + (m0 + n1 + 2) tr(psi1 phi0), unsigned pairing."""
    return ((m1 + n0) * pair_unsigned(t.psik[0], t.phik[1])
            + (m0 + n1 + 2) * pair_unsigned(t.psik[1], t.phik[0]))


# -- circle-fixed lifts from graded block data --------------------------------


def has_pure_grade(f: MatrixForm, v: VhsBlockData, k: int) -> bool:
    """True when every entry outside the grade-k block positions vanishes."""
    if f.size != v.n:
        return False
    keep = np.zeros((v.n, v.n), dtype=bool)
    for i, j, _, _ in grade_positions(v, k):
        rows, cols = block_slices(v, i, j)
        keep[rows, cols] = True
    return all(f.entries[idx].is_zero for idx in zip(*np.nonzero(~keep)))


def xi_matrix_form(v: VhsBlockData) -> MatrixForm:
    """The diagonal grading element as a constant (0,0) matrix form."""
    return MatrixForm.from_scalar_matrix(xi_matrix(v), (0, 0))


def c_star_fixed_lift(v: VhsBlockData, higgs: MatrixForm, beta=None, phi=None,
                      order: int = None) -> LambdaLift:
    """Assemble the circle-fixed lift of graded slice data.

    higgs is the pure grade-(-1) field; beta maps grade j >= 1 to a (0,1)
    form of that grade; phi maps grade j >= 0 to a (1,0) form of that grade
    (entering the D-part one t-power higher, so its grade-0 member occupies
    the t^1 slot).  The dbar-part then has t-degree at most l and the D-part
    at most l + 1.
    """
    beta = dict(beta or {})
    phi = dict(phi or {})
    _check_coeff(higgs, v.n, (1, 0), "higgs field")
    if not has_pure_grade(higgs, v, -1):
        raise ValueError("higgs field must be pure grade -1")
    for j, f in beta.items():
        if j < 1:
            raise ValueError("beta data live in grades >= 1")
        _check_coeff(f, v.n, (0, 1), f"beta_{j}")
        if not has_pure_grade(f, v, j):
            raise ValueError(f"beta_{j} must be pure grade {j}")
    for j, f in phi.items():
        if j < 0:
            raise ValueError("phi data live in grades >= 0")
        _check_coeff(f, v.n, (1, 0), f"phi_{j}")
        if not has_pure_grade(f, v, j):
            raise ValueError(f"phi_{j} must be pure grade {j}")
    n = order if order is not None else max(4, v.l + 1)
    if n < v.l + 1 and (beta or phi):
        raise ValueError("truncation order too small for the graded data")
    psi_list = [MatrixForm.zero(v.n, (0, 1)) for _ in range(n)]
    phi_list = [MatrixForm.zero(v.n, (1, 0)) for _ in range(n)]
    psi_list[0] = conj_transpose(higgs) + beta.get(1, MatrixForm.zero(v.n, (0, 1)))
    for j, f in beta.items():
        if j >= 2:
            psi_list[j - 1] = psi_list[j - 1] + f
    for j, f in phi.items():
        phi_list[j] = phi_list[j] + f  # grade-j datum sits in the t^(j+1) slot
    return LambdaLift(v.n, n, higgs, tuple(psi_list), tuple(phi_list))


def verify_fixed_relations(lift: LambdaLift, xi: MatrixForm) -> dict:
    """Solve for the scalars making the fixed-point relations hold with xi.

    The t-derivative relation -i t (d/dt) dbar(t) = dbar(t) . (c xi) is
    checked order by order for c in {-i, i, -1, 1}; the order-zero relations
    0 = dbar(xi_0) and Phi = [Phi, xi_0] are checked with xi_0 = c' xi.  The
    report carries both validating scalars and the per-order residuals.
    """
    _check_coeff(xi, lift.rank, (0, 0), "xi")
    candidates = (QQi(0, -1), QQi(0, 1), QQi(-1), QQi(1))
    residual_table = {}
    dlambda_scalar = None
    for c in candidates:
        residuals = []
        for k in range(lift.order + 1):
            lhs = lift.b_coeff(k) * QQi(0, -k)  # -i * k * Psi_k
            rhs = commutator(lift.b_coeff(k), xi) * c
            if k == 0:
                rhs = rhs + dbar(xi) * c
            residuals.append(lhs - rhs)
        residual_table[str(c)] = residuals
        if dlambda_scalar is None and all(r.is_zero for r in residuals):
            dlambda_scalar = c
    phipsi_scalar = None
    for c in candidates:
        if dbar(xi * c).is_zero and lift.phi0 == commutator(lift.phi0, xi) * c:
            phipsi_scalar = c
            break
    report = {
        "dlambda_scalar": dlambda_scalar,
        "dlambda_residuals": residual_table[str(dlambda_scalar)]
        if dlambda_scalar is not None else residual_table,
        "phipsi_scalar": phipsi_scalar,
        "frozen_dlambda_scalar": XI_SCALAR_DLAMBDA,
        "frozen_phipsi_scalar": XI_SCALAR_PHIPSI,
    }
    if dlambda_scalar is None:
        nonzero = {c: sum(1 for r in rs if not r.is_zero)
                   for c, rs in residual_table.items()}
        raise ValueError(f"no scalar validates the derivative relation; "
                         f"nonzero residual counts per candidate: {nonzero}")
    return report


def bb_slice_residuals(v: VhsBlockData, higgs: MatrixForm, beta=None, phi=None):
    """The two affine-slice residual forms (not required to vanish here).

    First: dbar(phi_total) + [(Phi + phi_total) ^ beta_total].  Second:
    del(beta_total) + [Phi* ^ phi_total].  Used as a diagnostic and as the
    constraint generator for exactly solvable test data.
    """
    beta = dict(beta or {})
    phi = dict(phi or {})
    _check_coeff(higgs, v.n, (1, 0), "higgs field")
    beta_total = MatrixForm.zero(v.n, (0, 1))
    for j, f in sorted(beta.items()):
        if not has_pure_grade(f, v, j) or j < 1:
            raise ValueError(f"beta_{j} violates its grading")
        beta_total = beta_total + f
    phi_total = MatrixForm.zero(v.n, (1, 0))
    for j, f in sorted(phi.items()):
        if not has_pure_grade(f, v, j) or j < 0:
            raise ValueError(f"phi_{j} violates its grading")
        phi_total = phi_total + f
    r1 = dbar(phi_total)
    if not beta_total.is_zero:
        r1 = r1 + wedge_bracket(higgs + phi_total, beta_total)
    r2 = del_op(beta_total)
    if not phi_total.is_zero:
        r2 = r2 + wedge_bracket(conj_transpose(higgs), phi_total)
    return r1, r2


def random_pure_grade_form(rng, v: VhsBlockData, k: int, bidegree,
                           mode_bound: int = 2, terms: int = 2,
                           exact: bool = True, constant: bool = False) -> MatrixForm:
    """Random matrix form supported on the grade-k blocks only."""
    from .torus_forms import FS_ZERO, random_fourier_scalar

    ent = np.full((v.n, v.n), FS_ZERO, dtype=object)
    for i, j, _, _ in grade_positions(v, k):
        rows, cols = block_slices(v, i, j)
        for r in range(rows.start, rows.stop):
            for c in range(cols.start, cols.stop):
                if constant:
                    from .scalars import random_qqi
                    ent[r, c] = FourierScalar.const(random_qqi(rng))
                else:
                    ent[r, c] = random_fourier_scalar(rng, mode_bound, terms, exact)
    if k == 0:  # keep sl-valued: zero out the last diagonal entry's trace share
        total = FS_ZERO
        for idx in range(v.n - 1):
            total = total + ent[idx, idx]
        ent[v.n - 1, v.n - 1] = -total
    return MatrixForm(bidegree, v.n, ent)


# -- gauge transformation of a whole lift -------------------------------------


def gauge_series_inverse(gs, order: int):
    """Formal inverse of a (0,0)-form series with g_0 = identity."""
    rank = gs[0].size
    hs = [gs[0]]  # identity
    for k in range(1, order + 1):
        acc = MatrixForm.zero(rank, (0, 0))
        for i in range(1, k + 1):
            gi = gs[i] if i < len(gs) else None
            if gi is not None and not gi.is_zero:
                acc = acc + wedge(gi, hs[k - i])
        hs.append(-acc)
    return hs


def gauge_transform_lift(lift: LambdaLift, gs) -> LambdaLift:
    """Conjugate the lift by the polynomial gauge family g(t) = 1 + sum t^k g_k.

    New dbar-part coefficients: (g^-1 B g + g^-1 dbar g)_k; new D-part:
    (g^-1 A g + g^-1 t del g)_k.  The family must start at the identity.
    """
    gs = list(gs)
    ident = MatrixForm.from_scalar_matrix(np.eye(lift.rank, dtype=object) * QQi(1))
    if gs[0] != ident:
        raise ValueError("gauge family must start at the identity")
    n = lift.order
    gs = gs + [MatrixForm.zero(lift.rank, (0, 0))] * (n + 1 - len(gs))
    hs = gauge_series_inverse(gs, n)

    def conjugated(coeff_at, bidegree, derivative, shift):
        out = []
        for k in range(n + 1):
            acc = MatrixForm.zero(lift.rank, bidegree)
            for i in range(k + 1):
                for j in range(k - i + 1):
                    m = k - i - j
                    x = coeff_at(j)
                    if x.is_zero:
                        continue
                    acc = acc + wedge(wedge(hs[i], x), gs[m])
            for i in range(k + 1 - shift):
                g_idx = k - i - shift
                acc = acc + wedge(hs[i], derivative(gs[g_idx]))
            out.append(acc)
        return out

    new_b = conjugated(lift.b_coeff, (0, 1), dbar, 0)
    new_a = conjugated(lift.a_coeff, (1, 0), del_op, 1)
    if not new_b[0].is_zero:  # g_0 = identity forces a vanishing order-0 term
        raise ValueError("gauge family produced an order-0 dbar coefficient")
    return LambdaLift(lift.rank, n, new_a[0], tuple(new_b[1:]), tuple(new_a[1:]))


# -- Laurent regluing and the antiholomorphic involution ----------------------


@dataclass(frozen=True, eq=False)
class LaurentConnection:
    """Laurent-window data of a connection pair in one coordinate.

    Operator symbols ("dbar", "del") and form coefficients are kept per
    exponent; the window bounds the exponents that are represented.
    """

    dbar_ops: dict = field(default_factory=dict)
    dbar_forms: dict = field(default_factory=dict)
    d_ops: dict = field(default_factory=dict)
    d_forms: dict = field(default_factory=dict)
    window: tuple = None  # (lo, hi) inclusive exponent bounds, or None

    def __post_init__(self):
        if self.window is not None:
            lo, hi = self.window
            for exp in (*self.dbar_ops, *self.dbar_forms, *self.d_ops, *self.d_forms):
                if not lo <= exp <= hi:
                    raise ValueError(f"window underflow: exponent {exp} "
                                     f"outside {self.window}")

    def __eq__(self, other):
        return (isinstance(other, LaurentConnection)
                and self.dbar_ops == other.dbar_ops
                and self.d_ops == other.d_ops
                and self.dbar_forms == other.dbar_forms
                and self.d_forms == other.d_forms)


def lift_to_laurent(lift: LambdaLift) -> LaurentConnection:
    dbar_forms = {k: lift.b_coeff(k) for k in range(1, lift.order + 1)
                  if not lift.b_coeff(k).is_zero}
    d_forms = {k: lift.a_coeff(k) for k in range(0, lift.order + 1)
               if not lift.a_coeff(k).is_zero}
    return LaurentConnection({0: "dbar"}, dbar_forms, {1: "del"}, d_forms)


def deligne_glue(lc: LaurentConnection) -> LaurentConnection:
    """Reglue to the reciprocal coordinate: parts swap and exponents map to 1 - j.

    Applying the operation twice gives back the original window.
    """
    remap = lambda d: {1 - j: x for j, x in d.items()}
    window = None
    if lc.window is not None:
        lo, hi = lc.window
        window = (1 - hi, 1 - lo)
    return LaurentConnection(remap(lc.d_ops), remap(lc.d_forms),
                             remap(lc.dbar_ops), remap(lc.dbar_forms), window)


@dataclass(frozen=True, eq=False)
class DHPoint:
    """A connection pair at a fixed nonzero parameter: operators
    (dbar + B, lam*del + A)."""

    dbar_coeff: MatrixForm  # B, bidegree (0,1)
    d_coeff: MatrixForm  # A, bidegree (1,0)
    lam: object

    def __post_init__(self):
        if not self.lam:
            raise ValueError("the parameter must be nonzero")
        if self.dbar_coeff.bidegree != (0, 1) or self.d_coeff.bidegree != (1, 0):
            raise ValueError("coefficient bidegrees must be (0,1) and (1,0)")

    def __eq__(self, other):
        return (isinstance(other, DHPoint) and self.dbar_coeff == other.dbar_coeff
                and self.d_coeff == other.d_coeff and self.lam == other.lam)


def c_star_on_point(zeta, p: DHPoint) -> DHPoint:
    """The circle/scaling action: (B, A, lam) -> (B, zeta*A, zeta*lam)."""
    if not zeta:
        raise ValueError("the acting scalar must be nonzero")
    return DHPoint(p.dbar_coeff, p.d_coeff * zeta, zeta * p.lam)


def real_involution_chart(p: DHPoint):
    """The antiholomorphic involution written chart-to-chart.

    Returns the conjugate-chart triple (CT(B), -CT(A), -conj(lam)); the first
    slot is the holomorphic-structure coefficient for the conjugate complex
    structure.  Composing with the regluing yields the same-chart form below.
    """
    return (conj_transpose(p.dbar_coeff), -conj_transpose(p.d_coeff), -conj(p.lam))


def real_involution_dh(p: DHPoint) -> DHPoint:
    """The antiholomorphic involution in the same chart.

    (B, A, lam) -> (CT(A)/conj(lam), -CT(B)/conj(lam), -1/conj(lam)); an
    involution, equivariant against the scaling action with weight
    conj(zeta)^-1, covering the antipodal map on the parameter line.
    """
    cl = conj(p.lam)
    inv = QQi(1) / cl
    return DHPoint(conj_transpose(p.d_coeff) * inv,
                   conj_transpose(p.dbar_coeff) * (-inv),
                   -inv)
