"""Exact block calculus of circle-fixed Higgs bundles (variations of Hodge structure).

A dataset records the ranks and degrees of the graded summands E_1, ..., E_l
of a fixed bundle E with trivial determinant.  Everything here is integer or
rational bookkeeping: energies, the hyperholomorphic degree pairing, the
grading element xi, and the exponents of the determinant-one gauge family
g(t) = t^m diag(t^(1-l), ..., t^0).

Blocks are 1-indexed.  A block labeled (i, j) maps the i-th summand to the
j-th (so it is an r_j x r_i matrix), and its grading weight is k = i - j.
Since m is only a rational, g(t) itself may be multivalued; it is never
materialized as a matrix, only its exponent vector and its (single-valued)
adjoint action are exposed.

The degree-weighted energy sum is implemented including the k = 1 term,
which vanishes identically, so the sum may be read as starting at k = 1
or k = 2 interchangeably.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .scalars import QQi


def _as_degree(x):
    if isinstance(x, (int, Fraction)):
        return x
    if isinstance(x, str):
        f = Fraction(x)
        return int(f) if f.denominator == 1 else f
    if isinstance(x, (list, tuple)) and len(x) == 2:
        f = Fraction(x[0], x[1])
        return int(f) if f.denominator == 1 else f
    raise ValueError(f"not a degree value: {x!r}")


@dataclass(frozen=True)
class VhsBlockData:
    """Ranks and degrees of the graded pieces of a circle-fixed Higgs bundle."""

    ranks: tuple
    degrees: tuple
    label: str = ""
    claimed_stable: bool = True  # unchecked flag; stability is not verifiable here
    pair: str = ""  # label of an associated infinity-side dataset, if any

    def __post_init__(self):
        ranks = tuple(int(r) for r in self.ranks)
        degrees = tuple(_as_degree(d) for d in self.degrees)
        if len(ranks) < 1:
            raise ValueError("need at least one block")
        if any(r < 1 for r in ranks):
            raise ValueError("ranks must be positive")
        if len(degrees) != len(ranks):
            raise ValueError("ranks and degrees must have equal length")
        if sum(degrees) != 0:
            raise ValueError("degrees must sum to zero (trivial determinant)")
        object.__setattr__(self, "ranks", ranks)
        object.__setattr__(self, "degrees", degrees)

    @property
    def l(self) -> int:
        return len(self.ranks)

    @property
    def n(self) -> int:
        return sum(self.ranks)

    @property
    def has_rational_degrees(self) -> bool:
        return any(isinstance(d, Fraction) for d in self.degrees)

    def to_json(self) -> dict:
        doc = {"ranks": list(self.ranks),
               "degrees": [d if isinstance(d, int) else str(d) for d in self.degrees],
               "label": self.label}
        if self.pair:
            doc["pair"] = self.pair
        return doc

    @classmethod
    def from_json(cls, doc: dict) -> "VhsBlockData":
        return cls(tuple(doc["ranks"]), tuple(doc["degrees"]),
                   label=doc.get("label", ""), pair=doc.get("pair", ""))


def energy_closed(v: VhsBlockData):
    """sum over k of (k - 1) * degree_k (the k = 1 term vanishes)."""
    return sum((k - 1) * dk for k, dk in enumerate(v.degrees, start=1))


def energy_recursive(v: VhsBlockData):
    """Same energy via the tail recursion E_l = d_l, E_k = d_k + E_(k+1)."""
    tails = [0] * (v.l + 1)
    for k in range(v.l, 0, -1):
        tails[k] = v.degrees[k - 1] + (tails[k + 1] if k < v.l else 0)
    return sum(tails[2:v.l + 1])


def hyperhol_degree(v0: VhsBlockData, vinf: VhsBlockData):
    """Degree of the hyperholomorphic line bundle along a fixed section pair."""
    if v0.n != vinf.n:
        raise ValueError("the 0- and infinity-side data must share the same rank")
    return energy_closed(v0) + energy_closed(vinf)


@dataclass(frozen=True)
class XiElement:
    """The diagonal grading element: weight m + j - l on the j-th block."""

    data: VhsBlockData
    weights: tuple


def xi_element(v: VhsBlockData) -> XiElement:
    l, n = v.l, v.n
    m = Fraction(sum((l - j) * r for j, r in enumerate(v.ranks, start=1)), n)
    return XiElement(v, tuple(m + j - l for j in range(1, l + 1)))


def g_lambda_exponents(v: VhsBlockData) -> tuple:
    """Exponent of t on each block of g(t); same numbers as the xi weights."""
    return xi_element(v).weights


def det_exponent(v: VhsBlockData) -> Fraction:
    """Exponent of t in det g(t): the rank-weighted sum of the exponents."""
    return sum((r * w for r, w in zip(v.ranks, g_lambda_exponents(v))),
               start=Fraction(0))


def g_lambda_ad_weight(v: VhsBlockData, i: int, j: int):
    """Power of t by which conjugation g^-1 (.) g scales the block (i, j).

    exponent_i - exponent_j = i - j, the grading weight of the block.
    """
    w = g_lambda_exponents(v)
    _check_index(v, i), _check_index(v, j)
    return w[i - 1] - w[j - 1]


def _check_index(v: VhsBlockData, i: int):
    if not 1 <= i <= v.l:
        raise IndexError(f"block index {i} out of range 1..{v.l}")


def block_offsets(v: VhsBlockData) -> tuple:
    """Start offset of each block along the n-dimensional total space."""
    offsets, acc = [], 0
    for r in v.ranks:
        offsets.append(acc)
        acc += r
    return tuple(offsets)


def block_slices(v: VhsBlockData, i: int, j: int):
    """(row, column) slice of the (source i -> target j) block in an n x n matrix."""
    _check_index(v, i), _check_index(v, j)
    off = block_offsets(v)
    return (slice(off[j - 1], off[j - 1] + v.ranks[j - 1]),
            slice(off[i - 1], off[i - 1] + v.ranks[i - 1]))


@dataclass(frozen=True)
class GradedBlockMatrix:
    """A block matrix over the grading, blocks keyed by (source i, target j)."""

    data: VhsBlockData
    blocks: dict = field(default_factory=dict)

    def __post_init__(self):
        for (i, j), blk in self.blocks.items():
            _check_index(self.data, i), _check_index(self.data, j)
            want = (self.data.ranks[j - 1], self.data.ranks[i - 1])
            if np.shape(blk) != want:
                raise ValueError(f"block ({i},{j}) must be {want}, got {np.shape(blk)}")

    def grade(self, i: int, j: int) -> int:
        _check_index(self.data, i), _check_index(self.data, j)
        return i - j

    def to_full(self):
        n = self.data.n
        full = np.full((n, n), QQi(0), dtype=object)
        for (i, j), blk in self.blocks.items():
            rows, cols = block_slices(self.data, i, j)
            full[rows, cols] = np.asarray(blk, dtype=object)
        return full

    @classmethod
    def from_full(cls, v: VhsBlockData, full) -> "GradedBlockMatrix":
        full = np.asarray(full, dtype=object)
        blocks = {}
        for i in range(1, v.l + 1):
            for j in range(1, v.l + 1):
                rows, cols = block_slices(v, i, j)
                blk = full[rows, cols]
                if any(bool(x) for x in blk.flat):
                    blocks[(i, j)] = blk
        return cls(v, blocks)

    def trace(self):
        total = QQi(0)
        for (i, j), blk in self.blocks.items():
            if i == j:
                total = total + np.asarray(blk, dtype=object).trace()
        return total


def adjoint_weight(m: GradedBlockMatrix, i: int, j: int) -> int:
    """Grading weight k = i - j of the block; xi_bracket scales the block by k."""
    return m.grade(i, j)


def xi_bracket(m: GradedBlockMatrix, xi: XiElement) -> GradedBlockMatrix:
    """The bracket with xi that scales every grade-k block by k.

    Realized as M Xi - Xi M with Xi the diagonal weight matrix: a (source i,
    target j) block picks up weight_i - weight_j = i - j = k.
    """
    out = {}
    for (i, j), blk in m.blocks.items():
        w = xi.weights[i - 1] - xi.weights[j - 1]
        out[(i, j)] = np.asarray(blk, dtype=object) * QQi(w)
    return GradedBlockMatrix(m.data, out)


def xi_matrix(v: VhsBlockData):
    """The grading element as an exact diagonal n x n matrix."""
    diag = []
    for w, r in zip(xi_element(v).weights, v.ranks):
        diag.extend([QQi(w)] * r)
    full = np.full((v.n, v.n), QQi(0), dtype=object)
    for idx, w in enumerate(diag):
        full[idx, idx] = w
    return full


def grade_positions(v: VhsBlockData, k: int) -> tuple:
    """All (i, j, rows, cols) block positions of grading weight k."""
    out = []
    for i in range(1, v.l + 1):
        j = i - k
        if 1 <= j <= v.l:
            out.append((i, j, v.ranks[j - 1], v.ranks[i - 1]))
    return tuple(out)


def bb_slice_shape(v: VhsBlockData) -> dict:
    """Block positions open to the affine-slice data: beta in grades k >= 1,
    phi in grades k >= 0, each with its matrix dimensions."""
    beta, phi = [], []
    for k in range(1, v.l):
        beta.extend(grade_positions(v, k))
    for k in range(0, v.l):
        phi.extend(grade_positions(v, k))
    return {"beta": tuple(sorted(beta)), "phi": tuple(sorted(phi))}


def grafting_data(g: int):
    """The rank-2 uniformizing-type dataset underlying grafting sections."""
    if g < 2:
        raise ValueError("grafting data needs genus g >= 2")
    v = VhsBlockData((1, 1), (g - 1, 1 - g), label=f"grafting-g{g}")
    annotations = {
        "beta_zero": True,
        "energy_equals_twistor_line": True,
        "energy": energy_closed(v),
        "note": ("the grafting family has vanishing (0,1) slice datum, so its "
                 "energy coincides with the energy of the underlying twistor line"),
    }
    return v, annotations


def random_vhs(rng, lmax: int = 6, rmax: int = 3, dmax: int = 20,
               label: str = "") -> VhsBlockData:
    """Deterministic random valid dataset (degrees summing to zero)."""
    l = rng.randint(1, lmax)
    ranks = tuple(rng.randint(1, rmax) for _ in range(l))
    head = [rng.randint(-dmax, dmax) for _ in range(l - 1)]
    degrees = tuple(head + [-sum(head)])
    return VhsBlockData(ranks, degrees, label=label)
