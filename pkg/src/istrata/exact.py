"""Exact integer/rational linear algebra.

Everything in this package runs on Python ints and ``fractions.Fraction``;
floating point is banned.  Matrices are lists of lists (rows), vectors are
tuples or lists.  All routines are deterministic: pivot selection is always
"smallest nonzero absolute value, then lowest (row, col) index" so that
normal forms and certificates are reproducible bit-for-bit.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt


# ---------------------------------------------------------------------------
# basic matrix helpers


def identity_matrix(n):
    return [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def zero_matrix(m, n):
    return [[0] * n for _ in range(m)]


def copy_matrix(a):
    return [list(row) for row in a]


def transpose(a):
    return [list(col) for col in zip(*a)]


def mat_mul(a, b):
    n = len(b)
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def mat_vec(a, v):
    """Matrix times column vector."""
    return [sum(x * y for x, y in zip(row, v)) for row in a]


def vec_mat(v, a):
    """Row vector times matrix."""
    return [sum(v[i] * a[i][j] for i in range(len(v))) for j in range(len(a[0]))]


def vec_add(u, v):
    return [x + y for x, y in zip(u, v)]


def vec_sub(u, v):
    return [x - y for x, y in zip(u, v)]


def vec_scale(c, v):
    return [c * x for x in v]


def is_zero_vector(v):
    return all(x == 0 for x in v)


def dot_gram(u, gram, v):
    """Pairing u·v with respect to a Gram matrix."""
    return sum(u[i] * sum(gram[i][j] * v[j] for j in range(len(v))) for i in range(len(u)))


# ---------------------------------------------------------------------------
# Smith normal form


def smith_normal_form(a):
    """Return (U, D, V) with U·a·V = D diagonal, divisibility chain, U, V unimodular.

    Pivot rule: smallest nonzero absolute value, ties broken by lowest
    (row, col) index.  Diagonal entries are non-negative.
    """
    A = copy_matrix(a)
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity_matrix(m)
    V = identity_matrix(n)

    def row_sub(i, k, q):
        if q:
            A[i] = [x - q * y for x, y in zip(A[i], A[k])]
            U[i] = [x - q * y for x, y in zip(U[i], U[k])]

    def col_sub(j, k, q):
        if q:
            for row in A:
                row[j] -= q * row[k]
            for row in V:
                row[j] -= q * row[k]

    def row_swap(i, k):
        A[i], A[k] = A[k], A[i]
        U[i], U[k] = U[k], U[i]

    def col_swap(j, k):
        for row in A:
            row[j], row[k] = row[k], row[j]
        for row in V:
            row[j], row[k] = row[k], row[j]

    k = 0
    while k < min(m, n):
        # pivot search
        piv = None
        best = None
        for i in range(k, m):
            for j in range(k, n):
                v = abs(A[i][j])
                if v and (best is None or v < best):
                    best = v
                    piv = (i, j)
        if piv is None:
            break
        if piv[0] != k:
            row_swap(piv[0], k)
        if piv[1] != k:
            col_swap(piv[1], k)

        while True:
            # clear column k
            for i in range(k + 1, m):
                while A[i][k]:
                    row_sub(i, k, A[i][k] // A[k][k])
                    if A[i][k]:
                        row_swap(i, k)
            # clear row k
            for j in range(k + 1, n):
                while A[k][j]:
                    col_sub(j, k, A[k][j] // A[k][k])
                    if A[k][j]:
                        col_swap(j, k)
            if all(A[i][k] == 0 for i in range(k + 1, m)) and all(
                A[k][j] == 0 for j in range(k + 1, n)
            ):
                break

        # enforce divisibility of the remaining block by the pivot
        d = A[k][k]
        bad = None
        for i in range(k + 1, m):
            for j in range(k + 1, n):
                if A[i][j] % d:
                    bad = i
                    break
            if bad is not None:
                break
        if bad is not None:
            # fold the offending row into row k and redo this pivot
            A[k] = [x + y for x, y in zip(A[k], A[bad])]
            U[k] = [x + y for x, y in zip(U[k], U[bad])]
            continue

        if A[k][k] < 0:
            A[k] = [-x for x in A[k]]
            U[k] = [-x for x in U[k]]
        k += 1

    return U, A, V


def invariant_factors(a):
    """Nonzero diagonal of the Smith normal form of a."""
    _, d, _ = smith_normal_form(a)
    return [d[i][i] for i in range(min(len(d), len(d[0]) if d else 0)) if d[i][i]]


# ---------------------------------------------------------------------------
# Hermite normal form (row style)


def hermite_normal_form(a):
    """Return (H, U) with U·a = H in row Hermite normal form, U unimodular.

    Pivots are positive, entries above a pivot are reduced into [0, pivot).
    """
    A = copy_matrix(a)
    m = len(A)
    n = len(A[0]) if m else 0
    U = identity_matrix(m)
    r = 0
    for j in range(n):
        # smallest |nonzero| pivot in column j at or below row r
        piv = None
        best = None
        for i in range(r, m):
            v = abs(A[i][j])
            if v and (best is None or v < best):
                best = v
                piv = i
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        U[r], U[piv] = U[piv], U[r]
        while any(A[i][j] for i in range(r + 1, m)):
            for i in range(r + 1, m):
                while A[i][j]:
                    q = A[i][j] // A[r][j]
                    A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                    U[i] = [x - q * y for x, y in zip(U[i], U[r])]
                    if A[i][j]:
                        A[i], A[r] = A[r], A[i]
                        U[i], U[r] = U[r], U[i]
        if A[r][j] < 0:
            A[r] = [-x for x in A[r]]
            U[r] = [-x for x in U[r]]
        for i in range(r):
            q = A[i][j] // A[r][j]
            if q:
                A[i] = [x - q * y for x, y in zip(A[i], A[r])]
                U[i] = [x - q * y for x, y in zip(U[i], U[r])]
        r += 1
        if r == m:
            break
    return A, U


def hnf_rows(a):
    """Nonzero rows of the row Hermite normal form of a."""
    h, _ = hermite_normal_form(a)
    return [row for row in h if not is_zero_vector(row)]


def reduce_mod_rows(v, hrows):
    """Reduce a vector modulo the row span of rows already in HNF."""
    v = list(v)
    for row in hrows:
        j = next(i for i, x in enumerate(row) if x)
        q = v[j] // row[j]
        if q:
            v = [x - q * y for x, y in zip(v, row)]
    return v


def in_row_span(rows, v):
    """Is v in the integer row span of `rows`?"""
    if not rows:
        return is_zero_vector(v)
    return is_zero_vector(reduce_mod_rows(v, hnf_rows(rows)))


# ---------------------------------------------------------------------------
# determinants, inverses, solving


def det_bareiss(a):
    """Exact determinant of an integer matrix (Bareiss fraction-free)."""
    A = copy_matrix(a)
    n = len(A)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if A[k][k] == 0:
            piv = next((i for i in range(k + 1, n) if A[i][k]), None)
            if piv is None:
                return 0
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            A[i][k] = 0
        prev = A[k][k]
    return sign * A[n - 1][n - 1]


def rational_inverse(a):
    """Inverse of a square matrix, entries Fraction.  Raises on singular input."""
    n = len(a)
    A = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next((i for i in range(col, n) if A[i][col] != 0), None)
        if piv is None:
            raise ValueError("matrix is singular")
        A[col], A[piv] = A[piv], A[col]
        inv = 1 / A[col][col]
        A[col] = [x * inv for x in A[col]]
        for i in range(n):
            if i != col and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[col])]
    return [row[n:] for row in A]


def unimodular_inverse(u):
    """Integer inverse of a unimodular integer matrix."""
    inv = rational_inverse(u)
    out = []
    for row in inv:
        irow = []
        for x in row:
            assert x.denominator == 1, "matrix is not unimodular"
            irow.append(int(x))
        out.append(irow)
    return out


def solve_unique(a, b):
    """Solve a·x = b (column convention) when a has full column rank.

    Returns a list of Fractions, or None when the system is inconsistent.
    Raises ValueError when the solution is not unique.
    """
    m = len(a)
    n = len(a[0]) if m else 0
    A = [[Fraction(x) for x in row] + [Fraction(b[i])] for i, row in enumerate(a)]
    r = 0
    pivots = []
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][col]
        A[r] = [x * inv for x in A[r]]
        for i in range(m):
            if i != r and A[i][col] != 0:
                f = A[i][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        pivots.append(col)
        r += 1
    if r < n:
        raise ValueError("solution not unique (rank-deficient system)")
    for i in range(r, m):
        if A[i][n] != 0:
            return None
    x = [Fraction(0)] * n
    for row_idx, col in enumerate(pivots):
        x[col] = A[row_idx][n]
    return x


def rank_of(a):
    """Rank over the rationals."""
    m = len(a)
    if m == 0:
        return 0
    n = len(a[0])
    A = [[Fraction(x) for x in row] for row in a]
    r = 0
    for col in range(n):
        piv = next((i for i in range(r, m) if A[i][col] != 0), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        for i in range(r + 1, m):
            if A[i][col] != 0:
                f = A[i][col] / A[r][col]
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
    return r


# ---------------------------------------------------------------------------
# kernels and saturation


def integer_kernel(a):
    """Basis (list of vectors) of {x ∈ ℤⁿ : a·x = 0}; automatically saturated."""
    m = len(a)
    n = len(a[0]) if m else 0
    _, d, v = smith_normal_form(a)
    r = sum(1 for i in range(min(m, n)) if d[i][i])
    cols = transpose(v)
    return [cols[j] for j in range(r, n)]


def saturation(rows):
    """Basis of the saturation of the integer row span of `rows` in ℤⁿ."""
    _, d, v = smith_normal_form(rows)
    r = sum(1 for i in range(min(len(rows), len(rows[0]))) if d[i][i])
    vinv = unimodular_inverse(v)
    return vinv[:r]


def sublattice_index(rows, sub_rows):
    """Index of the row span of sub_rows inside the row span of rows.

    Both spans must have equal rank; vectors of sub_rows must lie in the
    span of rows.
    """
    coords = []
    rt = transpose(rows)
    for s in sub_rows:
        x = solve_unique(rt, s)
        if x is None:
            raise ValueError("vector not in the ambient row span")
        row = []
        for f in x:
            if f.denominator != 1:
                raise ValueError("vector not in the integer row span")
            row.append(int(f))
        coords.append(row)
    facs = invariant_factors(coords)
    if len(facs) < len(rows):
        raise ValueError("sublattice is rank deficient")
    out = 1
    for f in facs:
        out *= f
    return out


# ---------------------------------------------------------------------------
# LLL reduction on a Gram matrix (exact, Fraction arithmetic)


def _gram_of(u, g0):
    n = len(u)
    g0u = [mat_vec(g0, row) for row in u]
    return [[sum(a * b for a, b in zip(u[i], g0u[j])) for j in range(n)] for i in range(n)]


def _gso(gram):
    """Gram–Schmidt data from a Gram matrix: (B, mu) with B[i]=|b_i*|²."""
    n = len(gram)
    mu = [[Fraction(0)] * n for _ in range(n)]
    c = [[Fraction(0)] * n for _ in range(n)]  # c[i][j] = <b_i, b_j*>
    B = [Fraction(0)] * n
    for i in range(n):
        for j in range(i + 1):
            s = Fraction(gram[i][j])
            for k in range(j):
                s -= mu[j][k] * c[i][k]
            c[i][j] = s
            if j < i:
                if B[j] == 0:
                    raise ValueError("Gram matrix is not positive definite")
                mu[i][j] = s / B[j]
        B[i] = c[i][i]
        if B[i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
    return B, mu


def lll_reduce_gram(g0, delta=Fraction(3, 4)):
    """LLL-reduce a positive definite Gram matrix.

    Returns (g, u) with g = u·g0·uᵀ the reduced Gram and u unimodular.
    """
    n = len(g0)
    u = identity_matrix(n)
    gram = copy_matrix(g0)
    B, mu = _gso(gram)
    k = 1
    while k < n:
        # size-reduce row k
        changed = False
        for j in range(k - 1, -1, -1):
            q = round(mu[k][j])
            if q:
                u[k] = [x - q * y for x, y in zip(u[k], u[j])]
                changed = True
        if changed:
            gram = _gram_of(u, g0)
            B, mu = _gso(gram)
        if B[k] >= (delta - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1]:
            k += 1
        else:
            u[k], u[k - 1] = u[k - 1], u[k]
            gram = _gram_of(u, g0)
            B, mu = _gso(gram)
            k = max(k - 1, 1)
    return gram, u


# ---------------------------------------------------------------------------
# short vector enumeration (Fincke–Pohst with exact rational Cholesky)


def _floor_sqrt_frac(s):
    """floor(sqrt(s)) for a non-negative Fraction s."""
    return isqrt(s.numerator * s.denominator) // s.denominator


def _floor_sqrt_plus(s, c):
    """floor(sqrt(s) + c) for Fraction s ≥ 0 and Fraction c."""
    a, b = c.numerator, c.denominator
    return (_floor_sqrt_frac(s * b * b) + a) // b


def short_vectors(gram, bound):
    """All x ≠ 0 with 0 < xᵀ·gram·x ≤ bound, one per ±pair.

    `gram` must be positive definite.  Returned coordinates are w.r.t. the
    basis of `gram`; the representative of each pair has its first nonzero
    coordinate (scanning from the last index down, the recursion order)
    positive.  Pure enumeration, exact arithmetic.
    """
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise ValueError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] -= q[k][i] * q[i][l]
    bound = Fraction(bound)
    results = []
    x = [0] * n

    def rec(i, remaining, nonzero_above):
        if i < 0:
            used = bound - remaining
            if used > 0:
                results.append(tuple(x))
            return
        c = sum(q[i][j] * x[j] for j in range(i + 1, n))
        s = remaining / q[i][i]
        hi = _floor_sqrt_plus(s, -c)
        lo = -_floor_sqrt_plus(s, c)
        if not nonzero_above:
            lo = max(lo, 0)
        for xi in range(lo, hi + 1):
            x[i] = xi
            val = q[i][i] * (xi + c) ** 2
            rec(i - 1, remaining - val, nonzero_above or xi != 0)
        x[i] = 0

    rec(n - 1, bound, False)
    return results


def vectors_of_norm(gram, norm):
    """All x (one per ±pair) with xᵀ·gram·x exactly `norm` (gram pos. def.)."""
    return [x for x in short_vectors(gram, norm)
            if dot_gram(x, gram, x) == norm]
