import random
from fractions import Fraction

import pytest

from istrata import exact


def random_int_matrix(rng, m, n, lo=-9, hi=9):
    return [[rng.randint(lo, hi) for _ in range(n)] for _ in range(m)]


def is_unimodular(u):
    return abs(exact.det_bareiss(u)) == 1


class TestSmithNormalForm:
    def test_diag_reorder(self):
        u, d, v = exact.smith_normal_form([[2, 0], [0, 1]])
        assert [d[0][0], d[1][1]] == [1, 2]

    def test_hand_example(self):
        # row/column reduction by hand gives invariant factors (2, 4):
        # gcd of entries is 2; det = 16 - 24 = -8; 8/2 = 4
        assert exact.invariant_factors([[2, 4], [6, 8]]) == [2, 4]

    def test_identity(self):
        assert exact.invariant_factors(exact.identity_matrix(5)) == [1] * 5

    def test_transform_identity(self):
        rng = random.Random(0)
        for _ in range(25):
            m = rng.randint(1, 5)
            n = rng.randint(1, 5)
            a = random_int_matrix(rng, m, n)
            u, d, v = exact.smith_normal_form(a)
            assert exact.mat_mul(exact.mat_mul(u, a), v) == d
            assert is_unimodular(u) and is_unimodular(v)
            facs = [d[i][i] for i in range(min(m, n)) if d[i][i]]
            for x, y in zip(facs, facs[1:]):
                assert y % x == 0
            # off-diagonal zero
            for i in range(m):
                for j in range(n):
                    if i != j:
                        assert d[i][j] == 0

    def test_determinism(self):
        a = [[4, 6, 2], [6, 0, 8], [2, 8, 6]]
        assert exact.smith_normal_form(a) == exact.smith_normal_form(a)


class TestHermite:
    def test_transform_identity(self):
        rng = random.Random(1)
        for _ in range(25):
            a = random_int_matrix(rng, rng.randint(1, 5), rng.randint(1, 5))
            h, u = exact.hermite_normal_form(a)
            assert exact.mat_mul(u, a) == h
            assert is_unimodular(u)

    def test_pivot_normalization(self):
        h, _ = exact.hermite_normal_form([[2, 1], [0, 3]])
        # pivots positive, entry above second pivot reduced into [0, 3)
        assert h[0][0] > 0 and h[1][1] > 0
        assert 0 <= h[0][1] < h[1][1]

    def test_row_span_membership(self):
        rows = [[2, 0, 1], [0, 3, 1]]
        assert exact.in_row_span(rows, [2, 3, 2])
        assert not exact.in_row_span(rows, [1, 0, 0])


class TestDetInverse:
    def test_bareiss_matches_cofactor_2x2(self):
        rng = random.Random(2)
        for _ in range(50):
            a, b, c, d = (rng.randint(-20, 20) for _ in range(4))
            assert exact.det_bareiss([[a, b], [c, d]]) == a * d - b * c

    def test_det_multiplicative(self):
        rng = random.Random(3)
        for _ in range(10):
            a = random_int_matrix(rng, 4, 4)
            b = random_int_matrix(rng, 4, 4)
            assert exact.det_bareiss(exact.mat_mul(a, b)) == exact.det_bareiss(
                a
            ) * exact.det_bareiss(b)

    def test_rational_inverse(self):
        a = [[2, 1], [1, 1]]
        inv = exact.rational_inverse(a)
        assert exact.mat_mul(a, inv) == [[1, 0], [0, 1]]

    def test_singular_raises(self):
        with pytest.raises(ValueError):
            exact.rational_inverse([[1, 2], [2, 4]])

    def test_solve_unique(self):
        x = exact.solve_unique([[2, 0], [0, 3], [1, 1]], [4, 9, 5])
        assert x == [Fraction(2), Fraction(3)]
        assert exact.solve_unique([[2, 0], [0, 3], [1, 1]], [4, 9, 6]) is None


class TestKernels:
    def test_kernel_saturated(self):
        rng = random.Random(4)
        for _ in range(20):
            a = random_int_matrix(rng, 2, 4)
            k = exact.integer_kernel(a)
            for v in k:
                assert exact.is_zero_vector(exact.mat_vec(a, v))
            if k:
                assert all(f == 1 for f in exact.invariant_factors(k))

    def test_kernel_rank(self):
        k = exact.integer_kernel([[1, 2, 3]])
        assert len(k) == 2

    def test_saturation(self):
        sat = exact.saturation([[2, 0], [0, 2]])
        assert abs(exact.det_bareiss(sat)) == 1

    def test_sublattice_index(self):
        rows = exact.identity_matrix(3)
        sub = [[2, 0, 0], [0, 2, 0], [0, 0, 2]]
        assert exact.sublattice_index(rows, sub) == 8


class TestLLLAndShortVectors:
    def test_lll_transform(self):
        g0 = [[4, 3], [3, 4]]
        g, u = exact.lll_reduce_gram(g0)
        assert g == exact.mat_mul(exact.mat_mul(u, g0), exact.transpose(u))
        assert is_unimodular(u)

    def test_short_vectors_identity_gram(self):
        # x² + y² ≤ 4: pairs ±(1,0),(0,1),(1,1),(1,-1),(2,0),(0,2)
        vs = exact.short_vectors(exact.identity_matrix(2), 4)
        assert len(vs) == 6
        for v in vs:
            assert 0 < exact.dot_gram(v, exact.identity_matrix(2), v) <= 4

    def test_one_per_sign_pair(self):
        vs = set(exact.short_vectors(exact.identity_matrix(3), 3))
        for v in vs:
            assert tuple(-x for x in v) not in vs

    def test_vectors_of_norm_skewed_basis(self):
        # A2 Gram: 6 roots = 3 sign pairs
        a2 = [[2, -1], [-1, 2]]
        assert len(exact.vectors_of_norm(a2, 2)) == 3
        # skew the basis; count must be invariant
        u = [[1, 7], [0, 1]]
        skew = exact.mat_mul(exact.mat_mul(u, a2), exact.transpose(u))
        assert len(exact.vectors_of_norm(skew, 2)) == 3

    def test_not_positive_definite_rejected(self):
        with pytest.raises(ValueError):
            exact.short_vectors([[0, 1], [1, 0]], 2)


class TestFloorSqrtHelpers:
    def test_floor_sqrt_frac(self):
        assert exact._floor_sqrt_frac(Fraction(8)) == 2
        assert exact._floor_sqrt_frac(Fraction(9)) == 3
        assert exact._floor_sqrt_frac(Fraction(1, 2)) == 0

    def test_floor_sqrt_plus_random(self):
        rng = random.Random(5)
        for _ in range(200):
            s = Fraction(rng.randint(0, 400), rng.randint(1, 20))
            c = Fraction(rng.randint(-50, 50), rng.randint(1, 20))
            got = exact._floor_sqrt_plus(s, c)
            # floor(sqrt(s) + c) characterized by squaring, no floats:
            # got ≤ sqrt(s) + c < got + 1
            lo, hi = got - c, got + 1 - c
            assert lo <= 0 or lo * lo <= s
            assert hi > 0 and hi * hi > s
