"""Integral quadratic lattices: predicates, complements, quotients, signatures.

A lattice is stored as a rank and a symmetric integer Gram matrix; vectors
are integer coordinate tuples in the implicit basis.  This is the calculus
that every other module consumes: Λ, Λ_R, the E_n lattices, U, the H² lattices
of the boundary models all live here.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import exact
from .exact import (
    det_bareiss,
    hnf_rows,
    integer_kernel,
    invariant_factors,
    reduce_mod_rows,
    smith_normal_form as _snf_raw,
)


@dataclass(frozen=True)
class IntegerMatrix:
    """Thin immutable wrapper for integer (or exact rational) matrices."""

    rows: tuple

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(tuple(r) for r in self.rows))
        if not self.rows or not self.rows[0]:
            raise ValueError("matrix dimensions must be positive")

    @property
    def nrows(self):
        return len(self.rows)

    @property
    def ncols(self):
        return len(self.rows[0])

    def tolists(self):
        return [list(r) for r in self.rows]

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i][j]


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """⊕ ℤ/dᵢ with d₁ | d₂ | …; the trivial group is the empty list."""

    invariant_factors: tuple

    def __post_init__(self):
        facs = tuple(int(d) for d in self.invariant_factors if d != 1)
        object.__setattr__(self, "invariant_factors", facs)
        for a, b in zip(facs, facs[1:]):
            if b % a:
                raise ValueError("invariant factors must form a divisibility chain")
        if any(d < 2 for d in facs):
            raise ValueError("invariant factors must be ≥ 2")

    @property
    def order(self):
        out = 1
        for d in self.invariant_factors:
            out *= d
        return out

    @property
    def exponent(self):
        return self.invariant_factors[-1] if self.invariant_factors else 1


@dataclass(frozen=True)
class IntegralLattice:
    """Rank + symmetric integer Gram matrix; vectors are coordinate tuples."""

    gram: tuple

    def __post_init__(self):
        g = tuple(tuple(int(x) for x in row) for row in self.gram)
        object.__setattr__(self, "gram", g)
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        for i in range(n):
            for j in range(n):
                if g[i][j] != g[j][i]:
                    raise ValueError("Gram matrix must be symmetric")

    @property
    def rank(self):
        return len(self.gram)

    def pairing(self, u, v):
        return exact.dot_gram(list(u), [list(r) for r in self.gram], list(v))

    def norm(self, v):
        return self.pairing(v, v)

    def gram_lists(self):
        return [list(r) for r in self.gram]


def direct_sum(*lattices):
    """Orthogonal direct sum."""
    n = sum(L.rank for L in lattices)
    g = [[0] * n for _ in range(n)]
    off = 0
    for L in lattices:
        for i in range(L.rank):
            for j in range(L.rank):
                g[off + i][off + j] = L.gram[i][j]
        off += L.rank
    return IntegralLattice(g)


def hyperbolic_plane():
    """The even unimodular lattice U."""
    return IntegralLattice([[0, 1], [1, 0]])


# ---------------------------------------------------------------------------
# operations


def smith_normal_form(m):
    """SNF with transforms: returns (invariant factors, left, right).

    left·m·right is diagonal with the divisibility chain; left and right are
    unimodular (determinant ±1).
    """
    mat = m.tolists() if isinstance(m, IntegerMatrix) else [list(r) for r in m]
    u, d, v = _snf_raw(mat)
    facs = [d[i][i] for i in range(min(len(d), len(d[0]))) if d[i][i]]
    return facs, IntegerMatrix(u), IntegerMatrix(v)


def inertia(gram):
    """Signature (n₊, n₋, n₀) of a symmetric rational matrix.

    Exact symmetric congruence reduction (simultaneous row/column
    elimination); no eigenvalues, no floats.
    """
    a = [[Fraction(x) for x in row] for row in gram]
    n = len(a)
    for i in range(n):
        for j in range(n):
            if a[i][j] != a[j][i]:
                raise ValueError("matrix is not symmetric")
    n_plus = n_minus = n_zero = 0
    a = [row[:] for row in a]
    k = 0
    while k < n:
        # ensure a nonzero diagonal pivot at (k, k)
        piv = next((i for i in range(k, n) if a[i][i] != 0), None)
        if piv is None:
            # all diagonal zero: look for off-diagonal entry
            od = None
            for i in range(k, n):
                for j in range(i + 1, n):
                    if a[i][j] != 0:
                        od = (i, j)
                        break
                if od:
                    break
            if od is None:
                n_zero += n - k
                break
            i, j = od
            # fold row/col j into i: diagonal becomes 2a_ij ≠ 0
            for t in range(n):
                a[i][t] += a[j][t]
            for t in range(n):
                a[t][i] += a[t][j]
            piv = i
        if piv != k:
            a[k], a[piv] = a[piv], a[k]
            for row in a:
                row[k], row[piv] = row[piv], row[k]
        p = a[k][k]
        if p > 0:
            n_plus += 1
        else:
            n_minus += 1
        for i in range(k + 1, n):
            if a[i][k] != 0:
                f = a[i][k] / p
                for t in range(n):
                    a[i][t] -= f * a[k][t]
        for i in range(k + 1, n):
            if a[k][i] != 0:
                f = a[k][i] / p
                for t in range(n):
                    a[t][i] -= f * a[t][k]
        k += 1
    return (n_plus, n_minus, n_zero)


def is_negative_definite(L):
    np_, nm, nz = inertia(L.gram_lists())
    return np_ == 0 and nz == 0


def orthogonal_complement(L, vectors):
    """Basis of the saturated sublattice {x ∈ L : x·s = 0 for all s}.

    Saturation comes for free from the SNF kernel computation and is
    re-certified: the SNF of the returned coordinate matrix has all
    invariant factors 1.
    """
    g = L.gram_lists()
    a = [exact.vec_mat(list(s), g) for s in vectors]
    basis = integer_kernel(a)
    if basis:
        assert all(f == 1 for f in invariant_factors(basis)), "complement not saturated"
    return [tuple(b) for b in basis]


@dataclass(frozen=True)
class QuotientResult:
    lattice: IntegralLattice
    projection: tuple  # (rank-r) × n matrix; quotient coords = projection · v
    lifts: tuple  # rows: HNF-reduced coset representatives of the quotient basis

    def project(self, v):
        """Quotient coordinates of an ambient vector."""
        return tuple(
            sum(self.projection[i][j] * v[j] for j in range(len(v)))
            for i in range(len(self.projection))
        )


def quotient_by_isotropic(L, s_rows):
    """Quotient of L by the primitive isotropic sublattice spanned by s_rows.

    Preconditions: every s is isotropic and lies in the radical of the form
    on L (s·x = 0 for all x), so the induced Gram on L/S is well defined.
    Returns the quotient lattice, the projection matrix (quotient coords of
    an ambient vector are projection·v), and HNF-reduced coset lifts.
    """
    s_rows = [list(s) for s in s_rows]
    g = L.gram_lists()
    n = L.rank
    for s in s_rows:
        if not exact.is_zero_vector(exact.vec_mat(s, g)):
            raise ValueError("span is not in the radical of the form")
    u, d, v = _snf_raw(s_rows)
    k = len(s_rows)
    facs = [d[i][i] for i in range(min(k, n)) if d[i][i]]
    if any(f != 1 for f in facs):
        raise ValueError("isotropic sublattice is not primitive")
    r = len(facs)
    vinv = exact.unimodular_inverse(v)
    # rows of vinv: adapted basis of ℤⁿ; the first r rows span S
    s_hnf = hnf_rows(s_rows) if s_rows else []
    complement = [reduce_mod_rows(row, s_hnf) for row in vinv[r:]]
    q_gram = [
        [exact.dot_gram(a, g, b) for b in complement] for a in complement
    ]
    # projection: ambient coords -> quotient coords (drop the S part)
    binv = exact.rational_inverse(vinv)  # columns convert: x = y·vinv ⇒ y = x·binv
    proj = [[binv[i][r + j] for i in range(n)] for j in range(n - r)]
    # proj rows are integral because vinv is unimodular
    proj = [[int(x) for x in row] for row in proj]
    return QuotientResult(
        lattice=IntegralLattice(q_gram),
        projection=tuple(tuple(row) for row in proj),
        lifts=tuple(tuple(row) for row in complement),
    )


def lattice_predicates(L):
    """(is_even, is_unimodular, discriminant, discriminant_group).

    Evenness is checked on the diagonal of the stored Gram; by
    x·x ≡ Σᵢ xᵢ²·Gᵢᵢ (mod 2) this is basis independent.  Discriminant is
    |det gram|; the discriminant group comes from the SNF of the Gram.
    """
    g = L.gram_lists()
    is_even = all(g[i][i] % 2 == 0 for i in range(L.rank))
    d = det_bareiss(g)
    disc = abs(d)
    if d == 0:
        raise ValueError("degenerate lattice has no discriminant group")
    group = FiniteAbelianGroup(tuple(invariant_factors(g)))
    return is_even, disc == 1, disc, group


def index_of_sublattice(L, s_rows):
    """Index [L : S] for a full-rank sublattice S given by coordinate rows.

    Equals the product of the SNF invariant factors of the inclusion matrix.
    """
    s_rows = [list(s) for s in s_rows]
    facs = invariant_factors(s_rows)
    if len(facs) < L.rank:
        raise ValueError("sublattice is rank deficient")
    out = 1
    for f in facs:
        out *= f
    return out
