import random
from fractions import Fraction

import pytest

from istrata.tori import (
    RationalTorus,
    TorusMorphism,
    TorusPoint,
    build_jw1_cover_diagram,
    direct_sum_morphism,
    identity_morphism,
    kernel_points,
    n_torsion,
    quotient_torus,
    stack_via_sum,
)


class TestPoints:
    def test_reduction_mod_one(self):
        p = TorusPoint((Fraction(5, 4), Fraction(-1, 3)))
        assert p.coords == (Fraction(1, 4), Fraction(2, 3))

    def test_group_ops(self):
        p = TorusPoint((Fraction(1, 2), Fraction(2, 3)))
        q = TorusPoint((Fraction(1, 2), Fraction(1, 3)))
        assert (p + q).coords == (Fraction(0), Fraction(0))
        assert (p - q).coords == (Fraction(0), Fraction(1, 3))
        assert (-p + p).is_zero()
        assert p.scale(6).is_zero()
        assert p.order() == 6


class TestTorsion:
    def test_counts(self):
        assert len(n_torsion(RationalTorus(2), 3)) == 9
        assert len(n_torsion(RationalTorus(2), 1)) == 1
        assert len(n_torsion(RationalTorus(4), 2)) == 16

    def test_all_killed(self):
        for p in n_torsion(RationalTorus(2), 3):
            assert p.scale(3).is_zero()


class TestMorphisms:
    def test_integrality_enforced(self):
        with pytest.raises(ValueError):
            TorusMorphism(RationalTorus(1), RationalTorus(1), ((Fraction(1, 2),),))

    def test_degree_multiplicative(self):
        rng = random.Random(9)
        T = RationalTorus(3)
        for _ in range(20):
            a = tuple(tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(3))
            b = tuple(tuple(rng.randint(-4, 4) for _ in range(3)) for _ in range(3))
            f = TorusMorphism(T, T, a)
            g = TorusMorphism(T, T, b)
            assert f.compose(g).degree() == f.degree() * g.degree()


class TestKernel:
    def test_diag21(self):
        f = TorusMorphism(RationalTorus(2), RationalTorus(2), ((2, 0), (0, 1)))
        grp, gens = kernel_points(f)
        assert grp.order == 2
        assert gens[0].coords == (Fraction(1, 2), Fraction(0))

    def test_identity_trivial(self):
        grp, gens = kernel_points(identity_morphism(RationalTorus(3)))
        assert grp.order == 1 and gens == []

    def test_order_equals_index(self):
        rng = random.Random(10)
        T = RationalTorus(2)
        for _ in range(20):
            m = tuple(tuple(rng.randint(-5, 5) for _ in range(2)) for _ in range(2))
            f = TorusMorphism(T, T, m)
            if f.degree() == 0:
                continue
            grp, _ = kernel_points(f)
            assert grp.order == f.degree()

    def test_non_injective_rejected(self):
        f = TorusMorphism(RationalTorus(2), RationalTorus(2), ((1, 1), (1, 1)))
        with pytest.raises(ValueError):
            kernel_points(f)


class TestQuotient:
    def test_degree_two(self):
        T = RationalTorus(2)
        eta = TorusPoint((Fraction(1, 2), Fraction(0)))
        q, proj = quotient_torus(T, [eta])
        assert proj.degree() == 2
        assert proj.apply(eta).is_zero()

    def test_trivial_group(self):
        T = RationalTorus(2)
        q, proj = quotient_torus(T, [])
        assert proj.degree() == 1

    def test_not_closed_rejected(self):
        T = RationalTorus(1)
        with pytest.raises(ValueError):
            quotient_torus(T, [TorusPoint((Fraction(1, 3),))])

    def test_kernel_of_projection_is_input(self):
        T = RationalTorus(2)
        eta = TorusPoint((Fraction(1, 2), Fraction(1, 2)))
        q, proj = quotient_torus(T, [eta])
        grp, gens = kernel_points(proj)
        assert grp.order == 2
        assert gens[0].coords in {eta.coords}


class TestJw1Diagram:
    def test_builds_with_all_assertions(self):
        d = build_jw1_cover_diagram()
        assert d.jw1.rank == 4

    def test_pair_isomorphism(self):
        d = build_jw1_cover_diagram()
        f = stack_via_sum(d.marking1, d.marking2)
        assert f.degree() == 1

    def test_sigma_pair_kernel_order_two(self):
        d = build_jw1_cover_diagram()
        for m in (d.marking1, d.marking2):
            grp, gens = kernel_points(stack_via_sum(m, d.marking_sigma))
            assert grp.order == 2
            (gen,) = gens
            assert gen.scale(2).is_zero()

    def test_swap_symmetry(self):
        # the Γ₁ ↔ Γ₂ relabeling produces the same index pattern
        d = build_jw1_cover_diagram()
        k12 = kernel_points(stack_via_sum(d.marking1, d.marking2))[0].order
        k1s = kernel_points(stack_via_sum(d.marking1, d.marking_sigma))[0].order
        k2s = kernel_points(stack_via_sum(d.marking2, d.marking_sigma))[0].order
        assert sorted([k12, k1s, k2s]) == [1, 2, 2]


class TestDirectSum:
    def test_block_structure(self):
        f = TorusMorphism(RationalTorus(1), RationalTorus(1), ((2,),))
        g = TorusMorphism(RationalTorus(1), RationalTorus(1), ((3,),))
        h = direct_sum_morphism([f, g])
        assert h.matrix == ((2, 0), (0, 3))
        assert h.degree() == 6
