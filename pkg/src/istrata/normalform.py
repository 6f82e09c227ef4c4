"""Normal forms of weighted-homogeneous deformations of a Weierstrass cubic.

Polynomials live in ℚ[x, y, z, t] with weights (2, 3, 1, 1), homogeneous of
total weight 6.  The t⁰ part is required to be a Weierstrass form
c_y·y² + c_x·x³ + g₂·xz⁴ + g₃·z⁶; the coordinate changes

    x ↦ x + α₁tz + α₂t²,   y ↦ y + β₁tx + β₂tz² + β₃t²z + β₄t³,   z ↦ z + γt

fix the t⁰ part and are used to kill seven deformation monomials, leaving a
nine-dimensional slice whose coordinates carry ℂ*-weights (1,2,2,3,3,4,4,5,6).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

WEIGHTS = {"x": 2, "y": 3, "z": 1, "t": 1}
TOTAL_WEIGHT = 6

# exponent tuples are (ex, ey, ez, et)
_W = (2, 3, 1, 1)


def monomial_weight(exp):
    return sum(e * w for e, w in zip(exp, _W))


def _mono_str(exp):
    parts = []
    for name, e in zip("xyzt", exp):
        if e == 1:
            parts.append(name)
        elif e > 1:
            parts.append(f"{name}^{e}")
    return "*".join(parts) if parts else "1"


@dataclass(frozen=True)
class WeightedPolynomial:
    coeffs: tuple  # sorted tuple of (exponent tuple, Fraction), zeros dropped

    def __post_init__(self):
        for exp, c in self.coeffs:
            if monomial_weight(exp) != TOTAL_WEIGHT:
                raise ValueError(
                    f"monomial {_mono_str(exp)} has weight {monomial_weight(exp)}"
                )
            if c == 0:
                raise ValueError("zero coefficients must be dropped")

    @classmethod
    def from_dict(cls, d):
        items = tuple(
            sorted((tuple(exp), Fraction(c)) for exp, c in d.items() if c != 0)
        )
        return cls(coeffs=items)

    def as_dict(self):
        return dict(self.coeffs)

    def coefficient(self, exp):
        return self.as_dict().get(tuple(exp), Fraction(0))

    def t_part(self, k):
        """The sub-sum of monomials with t-exponent exactly k."""
        return {exp: c for exp, c in self.coeffs if exp[3] == k}

    def __add__(self, other):
        d = self.as_dict()
        for exp, c in other.coeffs:
            d[exp] = d.get(exp, Fraction(0)) + c
        return WeightedPolynomial.from_dict(d)

    def __sub__(self, other):
        d = self.as_dict()
        for exp, c in other.coeffs:
            d[exp] = d.get(exp, Fraction(0)) - c
        return WeightedPolynomial.from_dict(d)


# ---------------------------------------------------------------------------
# generic (non-homogeneous) polynomial arithmetic used for substitution


def _mul(a, b):
    out = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(u + v for u, v in zip(ea, eb))
            out[e] = out.get(e, Fraction(0)) + ca * cb
    return {e: c for e, c in out.items() if c != 0}


def _pow(a, n):
    out = {(0, 0, 0, 0): Fraction(1)}
    for _ in range(n):
        out = _mul(out, a)
    return out


def _add_into(acc, a, scale=Fraction(1)):
    for e, c in a.items():
        acc[e] = acc.get(e, Fraction(0)) + scale * c
    return acc


@dataclass(frozen=True)
class ChangeOfVariables:
    alpha: tuple  # (α₁, α₂)
    beta: tuple  # (β₁, β₂, β₃, β₄)
    gamma: Fraction

    def __post_init__(self):
        if len(self.alpha) != 2 or len(self.beta) != 4:
            raise ValueError("need two α and four β parameters")

    @classmethod
    def identity(cls):
        return cls(alpha=(Fraction(0),) * 2, beta=(Fraction(0),) * 4, gamma=Fraction(0))

    def images(self):
        """The substituted variables as exponent dictionaries."""
        a1, a2 = self.alpha
        b1, b2, b3, b4 = self.beta
        g = self.gamma
        x = {(1, 0, 0, 0): Fraction(1), (0, 0, 1, 1): Fraction(a1), (0, 0, 0, 2): Fraction(a2)}
        y = {
            (0, 1, 0, 0): Fraction(1),
            (1, 0, 0, 1): Fraction(b1),
            (0, 0, 2, 1): Fraction(b2),
            (0, 0, 1, 2): Fraction(b3),
            (0, 0, 0, 3): Fraction(b4),
        }
        z = {(0, 0, 1, 0): Fraction(1), (0, 0, 0, 1): Fraction(g)}
        t = {(0, 0, 0, 1): Fraction(1)}
        return (
            {e: c for e, c in x.items() if c != 0},
            {e: c for e, c in y.items() if c != 0},
            z if g != 0 else {(0, 0, 1, 0): Fraction(1)},
            t,
        )


def apply_change(poly, change):
    """Exact substitution; homogeneity is preserved since every replacement
    term has the weight of the variable it replaces."""
    images = change.images()
    acc = {}
    for exp, c in poly.coeffs:
        term = {(0, 0, 0, 0): Fraction(1)}
        for img, e in zip(images, exp):
            if e:
                term = _mul(term, _pow(img, e))
        _add_into(acc, term, c)
    return WeightedPolynomial.from_dict(acc)


def compose_changes(first, second):
    """The single change equivalent to applying `first` then `second`.

    Verified against the closed-form substitution law; the γ of the second
    change feeds into the α and β parameters of the first.
    """
    a11, a12 = first.alpha
    a21, a22 = second.alpha
    b11, b12, b13, b14 = first.beta
    b21, b22, b23, b24 = second.beta
    g1, g2 = first.gamma, second.gamma
    alpha = (a11 + a21, a12 + a22 + a11 * g2)
    beta = (
        b11 + b21,
        b12 + b22,
        b13 + b23 + b11 * a21 + 2 * b12 * g2,
        b14 + b24 + b11 * a22 + b12 * g2 * g2 + b13 * g2,
    )
    return ChangeOfVariables(alpha=alpha, beta=beta, gamma=g1 + g2)


# ---------------------------------------------------------------------------
# normal-form reduction

# the Weierstrass monomials allowed in the t⁰ part
_Y2 = (0, 2, 0, 0)
_X3 = (3, 0, 0, 0)
_XZ4 = (1, 0, 4, 0)
_Z6 = (0, 0, 6, 0)

# targets killed by the reduction, with the parameter that kills each
_BETA_TARGETS = ((1, 1, 0, 1), (0, 1, 2, 1), (0, 1, 1, 2), (0, 1, 0, 3))
_ALPHA_TARGETS = ((2, 0, 1, 1), (2, 0, 0, 2))
_GAMMA_TARGET_G2 = (1, 0, 3, 1)  # txz³, available when g₂ ≠ 0
_GAMMA_TARGET_G3 = (0, 0, 5, 1)  # tz⁵, available when g₃ ≠ 0


@dataclass(frozen=True)
class StandardFormResult:
    polynomial: WeightedPolynomial
    change: ChangeOfVariables
    branch: str  # which monomial the γ parameter killed


def leading_form_invariants(poly):
    """(c_y, c_x, g₂, g₃) of the t⁰ part; raises unless that part is exactly
    a Weierstrass form with c_y, c_x ≠ 0."""
    t0 = poly.t_part(0)
    allowed = {_Y2, _X3, _XZ4, _Z6}
    for exp in t0:
        if exp not in allowed:
            raise ValueError(f"t⁰ part contains {_mono_str(exp)}")
    cy = t0.get(_Y2, Fraction(0))
    cx = t0.get(_X3, Fraction(0))
    if cy == 0 or cx == 0:
        raise ValueError("t⁰ part must contain y² and x³")
    return cy, cx, t0.get(_XZ4, Fraction(0)), t0.get(_Z6, Fraction(0))


def _solve_parameter(poly, target, make_change):
    """Kill the coefficient of `target` using the one-parameter family
    u ↦ make_change(u).

    The coefficient is an affine function of u; two evaluations determine
    it, a third certifies affinity, and the slope must be nonzero.
    """
    c0 = apply_change(poly, make_change(Fraction(0))).coefficient(target)
    c1 = apply_change(poly, make_change(Fraction(1))).coefficient(target)
    c2 = apply_change(poly, make_change(Fraction(2))).coefficient(target)
    if c2 - c1 != c1 - c0:
        raise AssertionError("coefficient is not affine in the parameter")
    slope = c1 - c0
    if slope == 0:
        raise ValueError(f"cannot normalize {_mono_str(target)}: degenerate slope")
    u = -c0 / slope
    change = make_change(u)
    return apply_change(poly, change), change


def reduce_to_standard_form(poly):
    """Kill the seven normalizable deformation monomials.

    Order matters: the β parameters fix the y-linear monomials first (only
    −2·c_y·y·δ can move them), then α₁, α₂ clear tx²z and t²x² using the x³
    term, and finally γ clears txz³ (when g₂ ≠ 0) or tz⁵ (when g₂ = 0,
    g₃ ≠ 0); this order never reintroduces an earlier target.
    """
    cy, cx, g2, g3 = leading_form_invariants(poly)
    total = ChangeOfVariables.identity()
    current = poly

    def elementary(**kw):
        base = {"alpha": [Fraction(0)] * 2, "beta": [Fraction(0)] * 4, "gamma": Fraction(0)}
        for key, (idx, val) in kw.items():
            if key == "gamma":
                base["gamma"] = val
            else:
                base[key][idx] = val
        return ChangeOfVariables(
            alpha=tuple(base["alpha"]), beta=tuple(base["beta"]), gamma=base["gamma"]
        )

    for i, target in enumerate(_BETA_TARGETS):
        current, ch = _solve_parameter(
            current, target, lambda u, i=i: elementary(beta=(i, u))
        )
        total = compose_changes(total, ch)
    for i, target in enumerate(_ALPHA_TARGETS):
        current, ch = _solve_parameter(
            current, target, lambda u, i=i: elementary(alpha=(i, u))
        )
        total = compose_changes(total, ch)
    if g2 != 0:
        target, branch = _GAMMA_TARGET_G2, "g2"
    elif g3 != 0:
        target, branch = _GAMMA_TARGET_G3, "g3"
    else:
        raise ValueError("g₂ = g₃ = 0: the fibre is cuspidal, no normal form")
    current, ch = _solve_parameter(
        current, target, lambda u: elementary(gamma=(None, u))
    )
    total = compose_changes(total, ch)

    for t in _BETA_TARGETS + _ALPHA_TARGETS + (target,):
        assert current.coefficient(t) == 0
    assert current.t_part(0) == poly.t_part(0)
    assert apply_change(poly, total).coeffs == current.coeffs
    return StandardFormResult(polynomial=current, change=total, branch=branch)


# ---------------------------------------------------------------------------
# the residual slice and its torus weights


def cstar_weights(branch="g2"):
    """The nine residual coefficients with their ℂ*-weights (= t-exponents).

    Returns ((name, exponent tuple, weight), ...) in weight order
    (1, 2, 2, 3, 3, 4, 4, 5, 6).
    """
    first = _GAMMA_TARGET_G3 if branch == "g2" else _GAMMA_TARGET_G2
    slots = (
        ("a", first, 1),
        ("b1", (0, 0, 4, 2), 2),
        ("b2", (1, 0, 2, 2), 2),
        ("c1", (0, 0, 3, 3), 3),
        ("c2", (1, 0, 1, 3), 3),
        ("d1", (0, 0, 2, 4), 4),
        ("d2", (1, 0, 0, 4), 4),
        ("e", (0, 0, 1, 5), 5),
        ("f", (0, 0, 0, 6), 6),
    )
    for name, exp, w in slots:
        assert exp[3] == w and monomial_weight(exp) == TOTAL_WEIGHT
    return slots


def slice_coordinates(result):
    """Name → coefficient map of the reduced polynomial on the residual slice."""
    return {
        name: result.polynomial.coefficient(exp)
        for name, exp, _ in cstar_weights(result.branch)
    }


def random_deformation(seed, q=41, cuspidal=False):
    """Seeded weight-6 polynomial with Weierstrass t⁰ part and random
    coefficients on every t-divisible monomial."""
    rng = random.Random(seed)

    def rnd(nonzero=False):
        v = Fraction(rng.randrange(1 if nonzero else -q, q), q)
        return v

    d = {_Y2: Fraction(-1), _X3: Fraction(1)}
    if not cuspidal:
        d[_XZ4] = rnd(nonzero=True)
        d[_Z6] = rnd()
    for ex in range(4):
        for ey in range(3):
            for ez in range(7):
                for et in range(1, 7):
                    exp = (ex, ey, ez, et)
                    if monomial_weight(exp) == TOTAL_WEIGHT:
                        c = rnd()
                        if c != 0:
                            d[exp] = c
    return WeightedPolynomial.from_dict(d)
