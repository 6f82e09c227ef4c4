"""Picard–Lefschetz operators on an explicit U⁴ frame.

The vanishing cycles α̃ᵢ, β̃ᵢ of a one-parameter degeneration span an
isotropic rank-4 sublattice W₁ of a rank-8 model U⁴ (the remaining rank-24
cohomology is orthogonal and killed by every Nᵢ, so it is omitted here).
Basis order is (e₁, e₂, e₃, e₄, f₁, f₂, f₃, f₄) with eᵢ·fᵢ = 1; all cycles
live in the e-span, so W₁ is the first four coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .lattices import IntegralLattice


def _u4_gram():
    g = [[0] * 8 for _ in range(8)]
    for i in range(4):
        g[i][4 + i] = g[4 + i][i] = 1
    return g


def _e(i, *, coeff=1):
    v = [0] * 8
    v[i] = coeff
    return v


def _comb(*terms):
    v = [0] * 8
    for c, i in terms:
        v[i] += c
    return tuple(v)


@dataclass(frozen=True)
class MonodromyFrame:
    label: str
    ambient: IntegralLattice
    alphas: tuple  # α̃₁..α̃_k
    betas: tuple  # β̃₁..β̃_k
    w1_basis: tuple  # basis of the saturated span of all cycles
    duals: tuple  # rational duals (α̃₁*, β̃₁*, α̃₂*, β̃₂*)

    @property
    def k(self):
        return len(self.alphas)

    def cycles(self):
        out = []
        for a, b in zip(self.alphas, self.betas):
            out.extend([a, b])
        return out

    def dual(self, name):
        idx = {"alpha1": 0, "beta1": 1, "alpha2": 2, "beta2": 3}[name]
        return self.duals[idx]


_FRAME_CYCLES = {
    # (alphas, betas) in e-coordinates; wᵢ = eᵢ
    "rational": (
        (_comb((1, 0)), _comb((1, 2))),
        (_comb((1, 1)), _comb((1, 3))),
    ),
    "enriques": (
        (_comb((1, 0)), _comb((1, 2))),
        (_comb((1, 1)), _comb((1, 1), (2, 3))),
    ),
    "ell111": (
        (_comb((1, 0)), _comb((1, 1)), _comb((2, 0), (1, 1))),
        (_comb((1, 2)), _comb((1, 3)), _comb((1, 2), (2, 3))),
    ),
    "ell211": (
        (_comb((1, 0)), _comb((2, 0), (-1, 1)), _comb((1, 1))),
        (_comb((1, 2), (-1, 3)), _comb((1, 2)), _comb((1, 3))),
    ),
}

_STRATUM_FRAME = {
    "rat11": "rational",
    "rat21": "rational",
    "rat22": "rational",
    "enriques": "enriques",
    "ell111": "ell111",
    "ell211": "ell211",
}


def build_frame(label):
    """Monodromy frame for a stratum label (or one of the four frame kinds
    'rational', 'enriques', 'ell111', 'ell211' directly)."""
    kind = _STRATUM_FRAME.get(label, label)
    if kind not in _FRAME_CYCLES:
        raise ValueError(f"unknown frame label {label!r}")
    alphas, betas = _FRAME_CYCLES[kind]
    ambient = IntegralLattice(_u4_gram())
    cycles = []
    for a, b in zip(alphas, betas):
        cycles.extend([list(a), list(b)])
    w1 = exact.saturation(cycles)
    frame = MonodromyFrame(
        label=kind,
        ambient=ambient,
        alphas=tuple(alphas),
        betas=tuple(betas),
        w1_basis=tuple(tuple(r) for r in w1),
        duals=_duals(ambient, alphas, betas),
    )
    _check_frame(frame)
    return frame


def _duals(ambient, alphas, betas):
    """Rational duals of (α̃₁, β̃₁, α̃₂, β̃₂) supported on the f-span.

    The four cycles are ℚ-independent in every frame; a dual x = Σ cⱼ fⱼ
    satisfies ⟨x, eⱼ⟩ = cⱼ, so the coefficient rows are (Cᵀ)⁻¹ for C the
    cycle matrix in e-coordinates.
    """
    four = [alphas[0], betas[0], alphas[1], betas[1]]
    c = [[Fraction(v[i]) for i in range(4)] for v in four]
    cinv = exact.rational_inverse(c)
    duals = []
    for m in range(4):
        v = [Fraction(0)] * 8
        for j in range(4):
            v[4 + j] = cinv[j][m]
        duals.append(tuple(v))
    return tuple(duals)


def _check_frame(frame):
    g = frame.ambient.gram_lists()
    cycles = frame.cycles()
    for a in cycles:
        for b in cycles:
            if exact.dot_gram(list(a), g, list(b)) != 0:
                raise AssertionError("cycle span is not isotropic")
    w1 = [list(r) for r in frame.w1_basis]
    if len(w1) != 4 or any(f != 1 for f in exact.invariant_factors(w1)):
        raise AssertionError("W1 is not a primitive rank-4 sublattice")
    if frame.label == "ell111":
        a1, a2, a3 = frame.alphas
        b1, b2, b3 = frame.betas
        assert list(a3) == exact.vec_add(exact.vec_scale(2, list(a1)), list(a2))
        assert list(b3) == exact.vec_add(list(b1), exact.vec_scale(2, list(b2)))


# ---------------------------------------------------------------------------
# operators


@dataclass(frozen=True)
class MonodromyOperator:
    matrix: tuple  # 8×8 integer matrix, column convention
    pair_index: int | None  # generating i (1-based), None for sums

    def apply(self, x):
        return tuple(
            sum(row[j] * x[j] for j in range(len(x))) for row in self.matrix
        )

    def __call__(self, x):
        return self.apply(x)


def picard_lefschetz(frame, i):
    """Nᵢ(ξ) = ⟨ξ, β̃ᵢ⟩α̃ᵢ − ⟨ξ, α̃ᵢ⟩β̃ᵢ as an integer matrix."""
    if not 1 <= i <= frame.k:
        raise ValueError("pair index out of range")
    a = list(frame.alphas[i - 1])
    b = list(frame.betas[i - 1])
    g = frame.ambient.gram_lists()
    ga = exact.mat_vec(g, a)
    gb = exact.mat_vec(g, b)
    n = 8
    m = [[a[s] * gb[t] - b[s] * ga[t] for t in range(n)] for s in range(n)]
    return MonodromyOperator(matrix=tuple(tuple(r) for r in m), pair_index=i)


def operator_sum(ops, coeffs=None):
    """Σ λᵢ Nᵢ with integer coefficients (default all 1)."""
    if coeffs is None:
        coeffs = [1] * len(ops)
    n = len(ops[0].matrix)
    m = [[0] * n for _ in range(n)]
    for c, op in zip(coeffs, ops):
        for s in range(n):
            for t in range(n):
                m[s][t] += c * op.matrix[s][t]
    return MonodromyOperator(matrix=tuple(tuple(r) for r in m), pair_index=None)


def weight_data(N):
    """(saturated image basis, kernel basis, rank, image_was_saturated).

    Requires N² = 0; verifies Im ⊆ Ker.
    """
    m = [list(r) for r in N.matrix]
    if any(any(x for x in row) for row in exact.mat_mul(m, m)):
        raise ValueError("operator does not square to zero")
    cols = exact.transpose(m)
    nonzero = [c for c in cols if not exact.is_zero_vector(c)]
    rank = exact.rank_of(nonzero) if nonzero else 0
    im = exact.saturation(nonzero) if nonzero else []
    was_saturated = bool(nonzero) and all(
        exact.in_row_span(nonzero, v) for v in im
    ) or not nonzero
    ker = exact.integer_kernel(m)
    for v in im:
        assert exact.is_zero_vector(exact.mat_vec(m, v)), "Im not inside Ker"
    return im, ker, rank, was_saturated


def primitivity_certificate(frame):
    """SNF certificate that {ΣλᵢNᵢ} is a primitive subgroup of End.

    Stacks the flattened Nᵢ matrices as the columns of a 64×k integer matrix;
    the span is primitive iff all k invariant factors equal 1.
    """
    ops = [picard_lefschetz(frame, i) for i in range(1, frame.k + 1)]
    cols = [[x for row in op.matrix for x in row] for op in ops]
    a = exact.transpose(cols)
    facs = exact.invariant_factors(a)
    is_primitive = len(facs) == frame.k and all(f == 1 for f in facs)
    return is_primitive, facs


def pair_index_pattern(frame):
    """Sorted list of indices [W₁ : Im Nᵢ + Im Nⱼ] over unordered pairs."""
    if frame.k < 2:
        raise ValueError("pattern needs k ≥ 2")
    w1 = [list(r) for r in frame.w1_basis]
    out = []
    for i in range(frame.k):
        for j in range(i + 1, frame.k):
            span = [
                list(frame.alphas[i]), list(frame.betas[i]),
                list(frame.alphas[j]), list(frame.betas[j]),
            ]
            out.append(exact.sublattice_index(w1, span))
    return sorted(out)
