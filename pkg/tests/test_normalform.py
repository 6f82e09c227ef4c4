import random
from fractions import Fraction

import pytest

from istrata.normalform import (
    ChangeOfVariables,
    WeightedPolynomial,
    apply_change,
    compose_changes,
    cstar_weights,
    leading_form_invariants,
    monomial_weight,
    random_deformation,
    reduce_to_standard_form,
    slice_coordinates,
)

Y2 = (0, 2, 0, 0)
X3 = (3, 0, 0, 0)
XZ4 = (1, 0, 4, 0)
Z6 = (0, 0, 6, 0)


def weierstrass(g2, g3, extra=None):
    d = {Y2: Fraction(-1), X3: Fraction(1), XZ4: Fraction(g2), Z6: Fraction(g3)}
    if extra:
        d.update(extra)
    return WeightedPolynomial.from_dict(d)


def random_change(rng):
    return ChangeOfVariables(
        alpha=tuple(Fraction(rng.randrange(-6, 7), 3) for _ in range(2)),
        beta=tuple(Fraction(rng.randrange(-6, 7), 2) for _ in range(4)),
        gamma=Fraction(rng.randrange(-6, 7), 5),
    )


class TestPolynomials:
    def test_weight_check(self):
        with pytest.raises(ValueError):
            WeightedPolynomial.from_dict({(1, 1, 0, 0): 1})  # weight 5

    def test_monomial_weights(self):
        assert monomial_weight(Y2) == 6
        assert monomial_weight((1, 0, 2, 2)) == 6

    def test_arithmetic(self):
        p = weierstrass(1, 0)
        q = weierstrass(0, 1)
        s = p + q
        assert s.coefficient(Y2) == -2
        assert s.coefficient(XZ4) == 1
        assert (s - p).coeffs == q.coeffs

    def test_t_part(self):
        p = weierstrass(2, 3, extra={(0, 0, 5, 1): Fraction(7)})
        assert p.t_part(1) == {(0, 0, 5, 1): Fraction(7)}
        assert len(p.t_part(0)) == 4


class TestChanges:
    def test_identity_fixes(self):
        p = random_deformation(0)
        assert apply_change(p, ChangeOfVariables.identity()).coeffs == p.coeffs

    def test_substitution_example(self):
        # x³ under x ↦ x + t² picks up 3x²t², 3xt⁴, t⁶
        p = WeightedPolynomial.from_dict({X3: 1})
        ch = ChangeOfVariables(
            alpha=(Fraction(0), Fraction(1)),
            beta=(Fraction(0),) * 4,
            gamma=Fraction(0),
        )
        q = apply_change(p, ch)
        assert q.coefficient((2, 0, 0, 2)) == 3
        assert q.coefficient((1, 0, 0, 4)) == 3
        assert q.coefficient((0, 0, 0, 6)) == 1

    def test_t0_part_fixed(self):
        rng = random.Random(3)
        for _ in range(10):
            p = random_deformation(rng.randrange(10**6))
            q = apply_change(p, random_change(rng))
            assert q.t_part(0) == p.t_part(0)

    def test_composition_matches_sequential(self):
        rng = random.Random(4)
        for _ in range(10):
            c1, c2 = random_change(rng), random_change(rng)
            p = random_deformation(rng.randrange(10**6))
            lhs = apply_change(apply_change(p, c1), c2)
            rhs = apply_change(p, compose_changes(c1, c2))
            assert lhs.coeffs == rhs.coeffs

    def test_composition_not_commutative(self):
        c1 = ChangeOfVariables(
            alpha=(Fraction(1), Fraction(0)), beta=(Fraction(0),) * 4, gamma=Fraction(0)
        )
        c2 = ChangeOfVariables(
            alpha=(Fraction(0),) * 2, beta=(Fraction(0),) * 4, gamma=Fraction(1)
        )
        assert compose_changes(c1, c2) != compose_changes(c2, c1)


class TestLeadingForm:
    def test_invariants(self):
        assert leading_form_invariants(weierstrass(5, 7)) == (-1, 1, 5, 7)

    def test_extra_t0_monomial_rejected(self):
        p = weierstrass(1, 1, extra={(1, 1, 1, 0): 1})  # xyz
        with pytest.raises(ValueError):
            leading_form_invariants(p)

    def test_missing_cubic_rejected(self):
        p = WeightedPolynomial.from_dict({Y2: -1, Z6: 1})
        with pytest.raises(ValueError):
            leading_form_invariants(p)


class TestReduction:
    KILLED_G2 = [
        (1, 1, 0, 1), (0, 1, 2, 1), (0, 1, 1, 2), (0, 1, 0, 3),
        (2, 0, 1, 1), (2, 0, 0, 2), (1, 0, 3, 1),
    ]

    @pytest.mark.parametrize("seed", range(8))
    def test_kills_targets(self, seed):
        p = random_deformation(seed)
        r = reduce_to_standard_form(p)
        assert r.branch == "g2"
        for exp in self.KILLED_G2:
            assert r.polynomial.coefficient(exp) == 0
        assert r.polynomial.t_part(0) == p.t_part(0)
        assert apply_change(p, r.change).coeffs == r.polynomial.coeffs

    def test_idempotent(self):
        r = reduce_to_standard_form(random_deformation(17))
        r2 = reduce_to_standard_form(r.polynomial)
        assert r2.change == ChangeOfVariables.identity()
        assert r2.polynomial.coeffs == r.polynomial.coeffs

    def test_g3_branch(self):
        d = random_deformation(5).as_dict()
        d.pop(XZ4)
        d[Z6] = Fraction(3)
        r = reduce_to_standard_form(WeightedPolynomial.from_dict(d))
        assert r.branch == "g3"
        assert r.polynomial.coefficient((0, 0, 5, 1)) == 0

    def test_cusp_rejected(self):
        with pytest.raises(ValueError, match="cuspidal"):
            reduce_to_standard_form(random_deformation(5, cuspidal=True))

    def test_change_invariance_of_slice(self):
        # a scrambled polynomial reduces to the same slice point
        rng = random.Random(6)
        p = random_deformation(23)
        r = reduce_to_standard_form(p)
        for _ in range(5):
            q = apply_change(p, random_change(rng))
            assert slice_coordinates(reduce_to_standard_form(q)) == slice_coordinates(r)


class TestSlice:
    def test_weights(self):
        slots = cstar_weights()
        assert [w for _, _, w in slots] == [1, 2, 2, 3, 3, 4, 4, 5, 6]
        assert [n for n, _, _ in slots] == [
            "a", "b1", "b2", "c1", "c2", "d1", "d2", "e", "f",
        ]
        for _, exp, w in slots:
            assert exp[3] == w

    def test_branches_differ_in_first_slot(self):
        assert cstar_weights("g2")[0][1] == (0, 0, 5, 1)
        assert cstar_weights("g3")[0][1] == (1, 0, 3, 1)

    def test_slice_has_nine_coordinates(self):
        r = reduce_to_standard_form(random_deformation(8))
        assert len(slice_coordinates(r)) == 9
