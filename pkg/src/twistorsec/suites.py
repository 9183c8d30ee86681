"""Named verification suites over seeded random data.

Each suite checks one invariant group of the library and returns one record
per verified identity.  Suites draw their randomness from a generator seeded
by (config seed, suite name), so a fixed configuration reproduces the exact
same report bytes.  The heavyweight exhaustive sweeps live in the test suite;
these runs are sized by ``config.cases`` to stay interactive.
"""

from __future__ import annotations

import random
from fractions import Fraction

import numpy as np

from . import flat_model as fm
from . import lambda_lifts as ll
from . import projline as pl
from . import torus_forms as tf
from . import vhs
from .datasets import load_vhs_dataset
from .report import ReportRecord, check, check_true, sort_records
from .scalars import QQi, conj, random_nonzero_qqi, random_qqi

_BASIS = {"e": pl.E, "h": pl.H, "f": pl.F}


def _rng_for(seed: int, suite: str) -> random.Random:
    return random.Random(f"{seed}:{suite}")


def _random_sl2(rng) -> pl.Sl2Element:
    return pl.Sl2Element(random_qqi(rng), random_qqi(rng), random_qqi(rng))


def _cycle(values, i):
    return values[i % len(values)]


# -- projline -----------------------------------------------------------------


def suite_sl2_jacobi(cfg, rng):
    out = []
    zero = pl.Sl2Element(QQi(0), QQi(0), QQi(0))
    for nx, x in _BASIS.items():
        for ny, y in _BASIS.items():
            for nz, z in _BASIS.items():
                jac = (pl.sl2_bracket(x, pl.sl2_bracket(y, z))
                       + pl.sl2_bracket(y, pl.sl2_bracket(z, x))
                       + pl.sl2_bracket(z, pl.sl2_bracket(x, y)))
                out.append(check("sl2-jacobi", f"basis-{nx}{ny}{nz}", zero, jac,
                                 "structure constants"))
    for i in range(cfg.cases):
        x, y, z = (_random_sl2(rng) for _ in range(3))
        jac = (pl.sl2_bracket(x, pl.sl2_bracket(y, z))
               + pl.sl2_bracket(y, pl.sl2_bracket(z, x))
               + pl.sl2_bracket(z, pl.sl2_bracket(x, y)))
        out.append(check("sl2-jacobi", f"random-{i:04d}", zero, jac,
                         "structure constants"))
    return out


def suite_killing_form(cfg, rng):
    out = [
        check("killing-form", "value-hh", QQi(8), pl.killing(pl.H, pl.H),
              "hand value"),
        check("killing-form", "value-ef", QQi(4), pl.killing(pl.E, pl.F),
              "hand value"),
        check("killing-form", "value-he", QQi(0), pl.killing(pl.H, pl.E),
              "hand value"),
        check("killing-form", "value-hf", QQi(0), pl.killing(pl.H, pl.F),
              "hand value"),
    ]
    for nx, x in _BASIS.items():
        for ny, y in _BASIS.items():
            out.append(check("killing-form", f"symmetric-{nx}{ny}",
                             pl.killing(x, y), pl.killing(y, x), "trace symmetry"))
            for nz, z in _BASIS.items():
                lhs = (pl.killing(pl.sl2_bracket(x, y), z)
                       + pl.killing(y, pl.sl2_bracket(x, z)))
                out.append(check("killing-form", f"invariant-{nx}{ny}{nz}",
                                 QQi(0), lhs, "ad-invariance"))
    for i in range(cfg.cases):
        x, y, z = (_random_sl2(rng) for _ in range(3))
        lhs = (pl.killing(pl.sl2_bracket(x, y), z)
               + pl.killing(y, pl.sl2_bracket(x, z)))
        out.append(check("killing-form", f"random-invariant-{i:04d}", QQi(0), lhs,
                         "ad-invariance"))
    return out


def _random_degree_one(rng) -> pl.PolySection:
    return pl.PolySection(1, (random_qqi(rng), random_qqi(rng)))


def suite_wronskian_pairing(cfg, rng):
    out = [
        check("wronskian-pairing", "hand-const-lambda", QQi(1),
              pl.wronskian(pl.PolySection(1, (QQi(1), QQi(0))),
                           pl.PolySection(1, (QQi(0), QQi(1)))), "hand value"),
        check("wronskian-pairing", "hand-mixed", QQi(-5),
              pl.wronskian(pl.PolySection(1, (QQi(2), QQi(3))),
                           pl.PolySection(1, (QQi(1), QQi(-1)))), "hand value"),
    ]
    for i in range(cfg.cases):
        p, q, r = (_random_degree_one(rng) for _ in range(3))
        c = random_qqi(rng)
        out.append(check("wronskian-pairing", f"antisymmetric-{i:04d}",
                         -pl.wronskian(p, q), pl.wronskian(q, p), "bilinear algebra"))
        lin = pl.PolySection(1, (p.coeffs[0] + c * r.coeffs[0],
                                 p.coeffs[1] + c * r.coeffs[1]))
        out.append(check("wronskian-pairing", f"bilinear-{i:04d}",
                         pl.wronskian(p, q) + c * pl.wronskian(r, q),
                         pl.wronskian(lin, q), "bilinear algebra"))
        out.append(check("wronskian-pairing", f"chart-agreement-{i:04d}",
                         pl.wronskian(p, q), pl.wronskian_infinity_chart(p, q),
                         "transition cocycle"))
        if bool(p.coeffs[0]) or bool(p.coeffs[1]):
            basis = (pl.PolySection(1, (QQi(1), QQi(0))),
                     pl.PolySection(1, (QQi(0), QQi(1))))
            hit = any(bool(pl.wronskian(p, b)) for b in basis)
            out.append(check_true("wronskian-pairing", f"nondegenerate-{i:04d}",
                                  hit, "some basis pairing is nonzero",
                                  "bilinear algebra"))
    return out


def suite_chart_involution(cfg, rng):
    out = []
    for i in range(cfg.cases):
        k = _cycle(range(7), i)
        p = pl.PolySection(k, tuple(random_qqi(rng) for _ in range(k + 1)))
        out.append(check("chart-involution", f"poly-deg{k}-{i:04d}", p,
                         p.chart_involution().chart_involution(),
                         "coefficient reversal"))
    return out


# -- flat model ---------------------------------------------------------------


def _random_flat(cfg, rng, i):
    d = _cycle((1, 2, 3), i)
    return fm.random_section(rng, d, exact=cfg.exact)


def suite_omega0_invariance(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        v = fm.random_section(rng, s.d, exact=cfg.exact)
        w = fm.random_section(rng, s.d, exact=cfg.exact)
        zeta = random_nonzero_qqi(rng)
        lhs = fm.omega0_killing(fm.group_action(zeta, s),
                                fm.group_action(zeta, v),
                                fm.group_action(zeta, w))
        out.append(check("omega0-invariance", f"case-{i:04d}",
                         fm.omega0_killing(s, v, w), lhs, "scaling action"))
    return out


def suite_energy_invariance(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        zeta = random_nonzero_qqi(rng)
        out.append(check("energy-invariance", f"case-{i:04d}", fm.energy(s),
                         fm.energy(fm.group_action(zeta, s)), "scaling action"))
    return out


def suite_tau_equivariance(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        zeta = random_nonzero_qqi(rng)
        lhs = fm.real_involution(fm.group_action(zeta, s))
        rhs = fm.group_action(QQi(1) / conj(zeta), fm.real_involution(s))
        out.append(check("tau-equivariance", f"case-{i:04d}", rhs, lhs,
                         "antiholomorphic involution"))
        out.append(check("tau-equivariance", f"involution-{i:04d}", s,
                         fm.real_involution(fm.real_involution(s)),
                         "antiholomorphic involution"))
    return out


def _zero_rotation_blocks(s: fm.FlatSection) -> fm.FlatSection:
    blocks = tuple((a1, QQi(0), QQi(0), b2) for a1, _, _, b2 in s.blocks)
    return fm.FlatSection(blocks)


def suite_moment_map(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        v = fm.random_section(rng, s.d, exact=cfg.exact)
        lhs = fm.d_energy(s, v)
        rhs = QQi(0, 1) * fm.omega0_killing(s, fm.fundamental_field(s), v)
        out.append(check("moment-map", f"identity-{i:04d}", rhs, lhs,
                         "energy differential"))
        fixed = _zero_rotation_blocks(s)
        out.append(check("moment-map", f"fixed-field-{i:04d}",
                         fm.zero_tangent(s.d), fm.fundamental_field(fixed),
                         "fixed locus"))
        out.append(check("moment-map", f"fixed-denergy-{i:04d}", QQi(0),
                         fm.d_energy(fixed, v), "fixed locus"))
        moving = any(bool(a2) or bool(b1) for _, a2, b1, _ in s.blocks)
        if moving:
            probes = []
            for k, (_, a2, b1, _) in enumerate(s.blocks):
                if a2:
                    blocks = [(QQi(0),) * 4] * s.d
                    blocks[k] = (QQi(0), QQi(0), QQi(1), QQi(0))
                    probes.append(fm.FlatSection(tuple(blocks)))
                if b1:
                    blocks = [(QQi(0),) * 4] * s.d
                    blocks[k] = (QQi(0), QQi(1), QQi(0), QQi(0))
                    probes.append(fm.FlatSection(tuple(blocks)))
            nonzero = any(bool(fm.d_energy(s, p)) for p in probes)
            out.append(check_true("moment-map", f"moving-denergy-{i:04d}", nonzero,
                                  "a probe direction sees a nonzero derivative",
                                  "fixed locus"))
            out.append(check_true("moment-map", f"moving-field-{i:04d}",
                                  fm.fundamental_field(s) != fm.zero_tangent(s.d),
                                  "rotation field is nonzero off the fixed locus",
                                  "fixed locus"))
    return out


def _vanishing_at(rng, d: int, x) -> fm.FlatSection:
    blocks = []
    for _ in range(d):
        alpha, beta = random_qqi(rng), random_qqi(rng)
        if x is pl.INFINITY:
            blocks.append((alpha, QQi(0), beta, QQi(0)))
        else:
            blocks.append((-alpha * x, alpha, -beta * x, beta))
    return fm.FlatSection(tuple(blocks))


def suite_evaluation_fiber(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        x = (QQi(0), pl.INFINITY, random_qqi(rng))[i % 3]
        v = _vanishing_at(rng, s.d, x)
        w = _vanishing_at(rng, s.d, x)
        out.append(check("evaluation-fiber", f"metric-{i:04d}", QQi(0),
                         fm.holomorphic_metric(s, v, w), "common zero"))
        if x is pl.INFINITY or not x:
            # the split form carried by the library is centered at 0/infinity
            out.append(check("evaluation-fiber", f"omega-{i:04d}", QQi(0),
                             fm.omega0_splitting(s, v, w), "common zero"))
            out.append(check("evaluation-fiber", f"omega-pairing-{i:04d}", QQi(0),
                             fm.omega0_killing(s, v, w), "common zero"))
        else:
            # at other centers the fiber form reduces to -i g on fiber tangents
            out.append(check("evaluation-fiber", f"omega-{i:04d}", QQi(0),
                             QQi(0, -1) * fm.holomorphic_metric(s, v, w),
                             "common zero"))
    return out


def suite_omega0_reality(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        v = fm.random_section(rng, s.d, exact=cfg.exact)
        w = fm.random_section(rng, s.d, exact=cfg.exact)
        lhs = fm.omega0_killing(fm.real_involution(s), fm.real_involution(v),
                                fm.real_involution(w))
        out.append(check("omega0-reality", f"case-{i:04d}",
                         conj(fm.omega0_killing(s, v, w)), lhs,
                         "antiholomorphic involution"))
    return out


def suite_energy_reality(cfg, rng):
    out = []
    for i in range(cfg.cases):
        s = _random_flat(cfg, rng, i)
        total = conj(fm.energy(fm.real_involution(s))) + fm.energy(s)
        out.append(check("energy-reality", f"case-{i:04d}", QQi(0), total,
                         "antiholomorphic involution"))
    return out


# -- graded block data --------------------------------------------------------


def suite_vhs_energy(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v = vhs.random_vhs(rng)
        out.append(check("vhs-energy", f"closed-vs-recursive-{i:04d}",
                         vhs.energy_closed(v), vhs.energy_recursive(v),
                         "telescoping sum"))
    for e in load_vhs_dataset(*(cfg.datasets[:1])):
        if e.label.startswith("uniformizing-g"):
            g = int(e.label.split("uniformizing-g")[1])
            out.append(check("vhs-energy", f"dataset-{e.label}", Fraction(1 - g),
                             vhs.energy_closed(e), f"dataset:{e.label}"))
        if e.label == "three-block-2-0-m2":
            out.append(check("vhs-energy", f"dataset-{e.label}", Fraction(-4),
                             vhs.energy_closed(e), f"dataset:{e.label}"))
        if e.l == 1:
            out.append(check("vhs-energy", f"dataset-{e.label}", Fraction(0),
                             vhs.energy_closed(e), f"dataset:{e.label}"))
    for g in (2, 5, 9):
        v, notes = vhs.grafting_data(g)
        out.append(check("vhs-energy", f"grafting-g{g}", Fraction(1 - g),
                         notes["energy"], "grafting family"))
    return out


def _random_vhs_with_n(rng, n: int) -> vhs.VhsBlockData:
    parts = rng.randint(1, n)
    cuts = sorted(rng.sample(range(1, n), parts - 1))
    ranks = tuple(b - a for a, b in zip((0,) + tuple(cuts), tuple(cuts) + (n,)))
    head = [rng.randint(-9, 9) for _ in range(parts - 1)]
    return vhs.VhsBlockData(ranks, tuple(head + [-sum(head)]))


def suite_hyperhol_degree(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v0 = vhs.random_vhs(rng)
        vinf = _random_vhs_with_n(rng, v0.n)
        got = vhs.hyperhol_degree(v0, vinf)
        out.append(check("hyperhol-degree", f"sum-{i:04d}",
                         vhs.energy_closed(v0) + vhs.energy_closed(vinf), got,
                         "degree additivity"))
        out.append(check_true("hyperhol-degree", f"integral-{i:04d}",
                              Fraction(got).denominator == 1,
                              "integer for integral block degrees",
                              "degree additivity"))
    entries = {e.label: e for e in load_vhs_dataset(*(cfg.datasets[:1]))}
    for g in range(2, 11):
        v0 = entries[f"uniformizing-g{g}"]
        vinf = entries[v0.pair]
        got = vhs.hyperhol_degree(v0, vinf)
        out.append(check("hyperhol-degree", f"uniformizing-g{g}", Fraction(1 - g),
                         got, f"dataset:uniformizing-g{g}"))
        out.append(check_true("hyperhol-degree", f"nonzero-g{g}", got != 0,
                              "degree is nonzero", f"dataset:uniformizing-g{g}"))
    return out


def suite_det_exponent(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v = vhs.random_vhs(rng)
        out.append(check("det-exponent", f"case-{i:04d}", Fraction(0),
                         vhs.det_exponent(v), "weight balancing"))
    return out


def _random_graded_matrix(rng, v, k):
    blocks = {}
    for i, j, rows, cols in vhs.grade_positions(v, k):
        blocks[(i, j)] = np.array([[random_qqi(rng) for _ in range(cols)]
                                   for _ in range(rows)], dtype=object)
    return vhs.GradedBlockMatrix(v, blocks)


def suite_grade_bracket(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v = vhs.random_vhs(rng)
        k = rng.randint(-(v.l - 1), v.l - 1) if v.l > 1 else 0
        m = _random_graded_matrix(rng, v, k)
        got = vhs.xi_bracket(m, vhs.xi_element(v)).to_full()
        want = m.to_full() * QQi(k)
        out.append(check_true("grade-bracket", f"case-{i:04d}",
                              bool(np.equal(got, want).all()),
                              f"bracket with the grading element scales grade "
                              f"{k} by {k}", "diagonal weights"))
    return out


def suite_xi_weights(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v = vhs.random_vhs(rng)
        w = vhs.xi_element(v).weights
        steps = all(w[j + 1] - w[j] == 1 for j in range(len(w) - 1))
        out.append(check_true("xi-weights", f"steps-{i:04d}", steps,
                              "weights increase by exactly 1", "grading"))
        total = sum(r * wj for r, wj in zip(v.ranks, w))
        out.append(check("xi-weights", f"trace-{i:04d}", Fraction(0), total,
                         "grading"))
    return out


# -- torus backend ------------------------------------------------------------


def suite_stokes(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(1, cfg.rank_bound + 1), i)
        a10 = tf.random_matrix_form(rng, size, (1, 0), cfg.mode_bound, 3, cfg.exact)
        a01 = tf.random_matrix_form(rng, size, (0, 1), cfg.mode_bound, 3, cfg.exact)
        out.append(check("stokes", f"dbar-{i:04d}", QQi(0),
                         tf.integrate_trace(tf.dbar(a10)), "constant-mode kill"))
        out.append(check("stokes", f"del-{i:04d}", QQi(0),
                         tf.integrate_trace(tf.del_op(a01)), "constant-mode kill"))
    return out


def suite_d_squared(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(1, cfg.rank_bound + 1), i)
        f = tf.random_matrix_form(rng, size, (0, 0), cfg.mode_bound, 3, cfg.exact)
        mixed = tf.dbar(tf.del_op(f)) + tf.del_op(tf.dbar(f))
        out.append(check_true("d-squared", f"mixed-{i:04d}", mixed.is_zero,
                              "dbar del + del dbar annihilates functions",
                              "mode symbols"))
    const = tf.MatrixForm.from_scalar_matrix(np.eye(2, dtype=object) * QQi(3))
    mixed = tf.dbar(tf.del_op(const)) + tf.del_op(tf.dbar(const))
    out.append(check_true("d-squared", "mixed-constant", mixed.is_zero,
                          "dbar del + del dbar annihilates constants",
                          "mode symbols"))
    for name, op, bidegree in (("dbar", tf.dbar, (0, 1)), ("del", tf.del_op, (1, 0))):
        try:
            op(tf.MatrixForm.zero(2, bidegree))
            raised = False
        except ValueError:
            raised = True
        out.append(check_true("d-squared", f"no-second-{name}", raised,
                              f"{name} twice leaves the representable degrees",
                              "degree bookkeeping"))
    return out


def suite_trace_cyclicity(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(1, cfg.rank_bound + 1), i)
        a = tf.random_matrix_form(rng, size, (1, 0), cfg.mode_bound, 3, cfg.exact)
        b = tf.random_matrix_form(rng, size, (0, 1), cfg.mode_bound, 3, cfg.exact)
        total = tf.integrate_trace(tf.wedge(a, b)) + tf.integrate_trace(tf.wedge(b, a))
        out.append(check("trace-cyclicity", f"case-{i:04d}", QQi(0), total,
                         "trace cyclicity"))
    return out


def suite_backend_exactness(cfg, rng):
    out = []
    cases = max(3, cfg.cases // 5)
    for i in range(cases):
        f = tf.random_matrix_form(rng, 4, (0, 0), 5, 4, True)
        a = tf.random_matrix_form(rng, 4, (1, 0), 5, 4, True)
        b = tf.random_matrix_form(rng, 4, (0, 1), 5, 4, True)
        out.append(check("backend-exactness", f"stokes-{i:04d}", QQi(0),
                         tf.integrate_trace(tf.dbar(a)) + tf.integrate_trace(tf.del_op(b)),
                         "boundary sizes"))
        mixed = tf.dbar(tf.del_op(f)) + tf.del_op(tf.dbar(f))
        out.append(check_true("backend-exactness", f"mixed-{i:04d}", mixed.is_zero,
                              "second derivatives cancel at rank 4, modes 5",
                              "boundary sizes"))
        out.append(check("backend-exactness", f"adjoint-{i:04d}", a,
                         tf.conj_transpose(tf.conj_transpose(a)),
                         "boundary sizes"))
    return out


# -- lambda-connection lifts --------------------------------------------------


def _random_lift(cfg, rng, size):
    psi = [tf.random_matrix_form(rng, size, (0, 1), cfg.mode_bound, 2, cfg.exact,
                                 trace_free=True) for _ in range(cfg.order)]
    phi = [tf.random_matrix_form(rng, size, (1, 0), cfg.mode_bound, 2, cfg.exact,
                                 trace_free=True) for _ in range(cfg.order)]
    phi0 = tf.random_matrix_form(rng, size, (1, 0), cfg.mode_bound, 2, cfg.exact,
                                 trace_free=True)
    return ll.LambdaLift(size, cfg.order, phi0, tuple(psi), tuple(phi))


def _strict_upper(rng, size):
    ent = np.full((size, size), tf.FS_ZERO, dtype=object)
    for r in range(size):
        for c in range(r + 1, size):
            ent[r, c] = tf.random_fourier_scalar(rng, 1, 2, True)
    return tf.MatrixForm((0, 0), size, ent)


def suite_gauge_covariance(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(2, cfg.rank_bound + 1), i)
        lift = _random_lift(cfg, rng, size)
        ident = tf.MatrixForm.from_scalar_matrix(np.eye(size, dtype=object) * QQi(1))
        gs = [ident] + [_strict_upper(rng, size) for _ in range(2)]
        moved = ll.gauge_transform_lift(lift, gs)
        depth = min(2, lift.order)
        want = ll.integrability_residuals(lift, depth)
        got = ll.integrability_residuals(moved, depth)
        gs_full = gs + [tf.MatrixForm.zero(size, (0, 0))] * (depth + 1 - len(gs))
        hs = ll.gauge_series_inverse(gs_full, depth)
        agree = True
        for k in range(depth + 1):
            acc = tf.MatrixForm.zero(size, (1, 1))
            for a in range(k + 1):
                for b in range(k - a + 1):
                    c = k - a - b
                    if not want[b].is_zero:
                        acc = acc + tf.wedge(tf.wedge(hs[a], want[b]), gs_full[c])
            agree = agree and acc == got[k]
        out.append(check_true("gauge-covariance", f"case-{i:04d}", agree,
                              "transformed residuals are the conjugated ones",
                              "series conjugation"))
    return out


def _trace_adjusted_poly(rng, c_matrix, size):
    """A trace-free polynomial in the constant matrix (degree <= 2)."""
    c1, c2 = random_qqi(rng), random_qqi(rng)
    sq = c_matrix @ c_matrix
    tr = sum(sq[r, r] for r in range(size))
    adjusted = sq - np.eye(size, dtype=object) * (tr / size)
    return c_matrix * c1 + adjusted * c2


def _commuting_lift(cfg, rng, size):
    c_matrix = np.array([[random_qqi(rng) for _ in range(size)]
                         for _ in range(size)], dtype=object)
    tr = sum(c_matrix[r, r] for r in range(size))
    c_matrix = c_matrix - np.eye(size, dtype=object) * (tr / size)
    phi0 = tf.MatrixForm.from_scalar_matrix(c_matrix, (1, 0))
    f = tf.random_fourier_scalar(rng, cfg.mode_bound, 2, cfg.exact)
    psi1 = tf.MatrixForm.from_scalar_matrix(
        _trace_adjusted_poly(rng, c_matrix, size), (0, 1)) * f
    return ll.make_lift(phi0, psi=[psi1], order=cfg.order), c_matrix


def _commutant_tangent(cfg, rng, lift, c_matrix):
    size = lift.rank
    phi_0 = tf.MatrixForm.from_scalar_matrix(
        _trace_adjusted_poly(rng, c_matrix, size), (1, 0))
    h = tf.random_fourier_scalar(rng, cfg.mode_bound, 2, cfg.exact)
    psi_1 = tf.MatrixForm.from_scalar_matrix(
        _trace_adjusted_poly(rng, c_matrix, size), (0, 1)) * h
    t = ll.TangentSeries.zero(size, lift.order)
    psik = list(t.psik)
    phik = list(t.phik)
    psik[1], phik[0] = psi_1, phi_0
    return ll.TangentSeries(lift.order, tuple(psik), tuple(phik))


def _random_gauge(cfg, rng, size):
    xik = [tf.random_matrix_form(rng, size, (0, 0), cfg.mode_bound, 2, cfg.exact,
                                 trace_free=True) for _ in range(cfg.order + 1)]
    return ll.GaugeSeries(cfg.order, tuple(xik))


def suite_omega_hat_degeneracy(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(2, cfg.rank_bound + 1), i)
        lift, c_matrix = _commuting_lift(cfg, rng, size)
        res = ll.integrability_residuals(lift, 1)
        out.append(check_true("omega-hat-degeneracy", f"integrable-{i:04d}",
                              all(r.is_zero for r in res),
                              "commuting data is integrable to order 1",
                              "construction"))
        gauge_dir = ll.gauge_tangent(lift, _random_gauge(cfg, rng, size))
        flat_dir = _commutant_tangent(cfg, rng, lift, c_matrix)
        lin = ll.linearized_residuals(lift, flat_dir, 1)
        out.append(check_true("omega-hat-degeneracy", f"tangent-flat-{i:04d}",
                              all(r.is_zero for r in lin),
                              "commutant tangent solves the linearized equations",
                              "construction"))
        out.append(check("omega-hat-degeneracy", f"gauge-vs-flat-{i:04d}", QQi(0),
                         ll.omega_hat(lift, gauge_dir, flat_dir),
                         "gauge degeneracy"))
        other = ll.gauge_tangent(lift, _random_gauge(cfg, rng, size))
        out.append(check("omega-hat-degeneracy", f"gauge-vs-gauge-{i:04d}", QQi(0),
                         ll.omega_hat(lift, gauge_dir, other), "gauge degeneracy"))
    return out


def suite_energy_gauge_invariance(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(2, cfg.rank_bound + 1), i)
        lift = _random_lift(cfg, rng, size)
        const = np.array([[random_qqi(rng) for _ in range(size)]
                          for _ in range(size)], dtype=object)
        tr = sum(const[r, r] for r in range(size))
        const = const - np.eye(size, dtype=object) * (tr / size)
        lift = ll.LambdaLift(size, lift.order,
                             tf.MatrixForm.from_scalar_matrix(const, (1, 0)),
                             lift.psi, lift.phi)
        tangent = ll.gauge_tangent(lift, _random_gauge(cfg, rng, size))
        out.append(check("energy-gauge-invariance", f"case-{i:04d}", QQi(0),
                         ll.d_energy_of_lift(lift, tangent),
                         "first variation along gauge directions"))
    return out


def _random_small_vhs(rng):
    while True:
        v = vhs.random_vhs(rng, lmax=3, rmax=2, dmax=6)
        if v.l >= 2 and v.n <= 5:
            return v


def suite_second_variation_weights(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v = _random_small_vhs(rng)
        higgs = ll.random_pure_grade_form(rng, v, -1, (1, 0), constant=True)
        beta = {1: ll.random_pure_grade_form(rng, v, 1, (0, 1), cfg.mode_bound)}
        lift = ll.c_star_fixed_lift(v, higgs, beta=beta)
        xi = -ll.xi_matrix_form(v)
        span = range(-(v.l - 1), v.l)
        g0, g1 = rng.choice(span), rng.choice(span)
        h0, h1 = rng.choice(span), rng.choice(span)
        t = ll.TangentSeries(
            1,
            (ll.random_pure_grade_form(rng, v, h0, (0, 1), cfg.mode_bound),
             ll.random_pure_grade_form(rng, v, h1, (0, 1), cfg.mode_bound)),
            (ll.random_pure_grade_form(rng, v, g0, (1, 0), cfg.mode_bound),
             ll.random_pure_grade_form(rng, v, g1, (1, 0), cfg.mode_bound)))
        got = ll.second_variation(lift, t, xi)
        want = ll.second_variation_weighted(t, m0=-g0, m1=-g1, n0=-h0, n1=-h1)
        out.append(check("second-variation-weights", f"case-{i:04d}", want, got,
                         "eigenweight reduction"))
    return out


def suite_dh_involutions(cfg, rng):
    out = []
    for i in range(cfg.cases):
        size = _cycle(range(2, cfg.rank_bound + 1), i)
        lift = _random_lift(cfg, rng, size)
        lc = ll.lift_to_laurent(lift)
        out.append(check_true("dh-involutions", f"glue-{i:04d}",
                              ll.deligne_glue(ll.deligne_glue(lc)) == lc,
                              "regluing twice is the identity", "exponent map"))
        b = tf.random_matrix_form(rng, size, (0, 1), cfg.mode_bound, 2, cfg.exact,
                                  trace_free=True)
        a = tf.random_matrix_form(rng, size, (1, 0), cfg.mode_bound, 2, cfg.exact,
                                  trace_free=True)
        p = ll.DHPoint(b, a, random_nonzero_qqi(rng))
        out.append(check_true("dh-involutions", f"square-{i:04d}",
                              ll.real_involution_dh(ll.real_involution_dh(p)) == p,
                              "involution squares to the identity",
                              "antiholomorphic involution"))
        zeta = random_nonzero_qqi(rng)
        lhs = ll.real_involution_dh(ll.c_star_on_point(zeta, p))
        rhs = ll.c_star_on_point(QQi(1) / conj(zeta), ll.real_involution_dh(p))
        out.append(check_true("dh-involutions", f"equivariance-{i:04d}", lhs == rhs,
                              "involution intertwines scaling with reciprocal "
                              "conjugate scaling", "antiholomorphic involution"))
    return out


def suite_beta1_independence(cfg, rng):
    out = []
    for i in range(cfg.cases):
        v = _random_small_vhs(rng)
        higgs = ll.random_pure_grade_form(rng, v, -1, (1, 0), constant=True)
        base = ll.energy_of_lift(ll.c_star_fixed_lift(v, higgs))
        gamma = ll.random_pure_grade_form(rng, v, 1, (0, 0), cfg.mode_bound)
        m, n = rng.randint(1, cfg.mode_bound or 1), rng.randint(-cfg.mode_bound, cfg.mode_bound)
        charpart = ll.random_pure_grade_form(rng, v, 1, (0, 1), constant=True)
        beta1 = tf.dbar(gamma) + charpart * tf.FourierScalar.char(m, n, random_qqi(rng))
        got = ll.energy_of_lift(ll.c_star_fixed_lift(v, higgs, beta={1: beta1}))
        out.append(check("beta1-independence", f"energy-{i:04d}", base, got,
                         "exact and mean-free slice data"))
        pairing = tf.integrate_trace(tf.wedge(higgs, beta1))
        out.append(check("beta1-independence", f"pairing-{i:04d}", QQi(0), pairing,
                         "exact and mean-free slice data"))
    v2 = vhs.VhsBlockData((1, 1), (1, -1))
    q = ll.random_pure_grade_form(rng, v2, 1, (1, 0), constant=True)
    higgs2 = ll.random_pure_grade_form(rng, v2, -1, (1, 0), constant=True)
    r1, _ = ll.bb_slice_residuals(v2, higgs2, beta={}, phi={1: q})
    out.append(check_true("beta1-independence", "grafting-residual", r1.is_zero,
                          "constant quadratic-differential slot solves the "
                          "first slice equation", "grafting family"))
    return out


SUITES = {
    "sl2-jacobi": suite_sl2_jacobi,
    "killing-form": suite_killing_form,
    "wronskian-pairing": suite_wronskian_pairing,
    "chart-involution": suite_chart_involution,
    "omega0-invariance": suite_omega0_invariance,
    "energy-invariance": suite_energy_invariance,
    "tau-equivariance": suite_tau_equivariance,
    "moment-map": suite_moment_map,
    "evaluation-fiber": suite_evaluation_fiber,
    "omega0-reality": suite_omega0_reality,
    "energy-reality": suite_energy_reality,
    "vhs-energy": suite_vhs_energy,
    "hyperhol-degree": suite_hyperhol_degree,
    "det-exponent": suite_det_exponent,
    "grade-bracket": suite_grade_bracket,
    "xi-weights": suite_xi_weights,
    "stokes": suite_stokes,
    "d-squared": suite_d_squared,
    "trace-cyclicity": suite_trace_cyclicity,
    "backend-exactness": suite_backend_exactness,
    "gauge-covariance": suite_gauge_covariance,
    "omega-hat-degeneracy": suite_omega_hat_degeneracy,
    "energy-gauge-invariance": suite_energy_gauge_invariance,
    "second-variation-weights": suite_second_variation_weights,
    "dh-involutions": suite_dh_involutions,
    "beta1-independence": suite_beta1_independence,
}


def run_suites(config):
    """Execute the named suites; deterministic for a fixed config."""
    unknown = [name for name in config.suites if name not in SUITES]
    if unknown:
        raise ValueError(f"unknown suite names: {unknown}")
    records = []
    for name in config.suites:
        rng = _rng_for(config.seed, name)
        records.extend(SUITES[name](config, rng))
    return sort_records(records)
