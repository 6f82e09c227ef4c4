"""The six boundary-stratum models and their Hodge-theoretic invariants.

Each model is pure lattice-and-class data for a normal crossing surface
X₀ = Ỹ ⨿_{Dᵢ} (⨿ Zᵢ): the H² lattice of the minimal resolution Ỹ with its
double-curve classes Dᵢ and limit canonical class L, glued to del Pezzo
components Zᵢ along anticanonical curves.  From this the module computes
the rank-24 graded piece Λ = {ξ₁..ξ_k, [L]}⊥ / Σℤξᵢ, the Jacobian JW₁ with
its marked subtori, the Carlson extension map ψ on seeded generic
restriction data, and the distinguished class β₁₁ of the (2,2) stratum.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from . import exact
from .lattices import (
    IntegralLattice,
    direct_sum,
    index_of_sublattice,
    is_negative_definite,
    lattice_predicates,
    orthogonal_complement,
    quotient_by_isotropic,
)
from .roots import decompose_root_system, enumerate_roots, fundamental_weight
from .tori import (
    RationalTorus,
    TorusMorphism,
    TorusPoint,
    build_jw1_cover_diagram,
    kernel_points,
    quotient_torus,
)

STRATUM_LABELS = ("rat11", "rat21", "rat22", "enriques", "ell211", "ell111")


# ---------------------------------------------------------------------------
# component surfaces


@dataclass(frozen=True)
class ComponentSurface:
    name: str
    lattice: IntegralLattice
    canonical_class: tuple
    double_curves: dict  # curve index -> class on this component
    l_class: tuple | None = None  # only on Ỹ

    def __post_init__(self):
        for i, d in self.double_curves.items():
            kd = self.lattice.pairing(self.canonical_class, d)
            if kd + self.lattice.norm(d) != 0:
                raise ValueError(
                    f"{self.name}: adjunction fails on double curve {i}"
                )
        if self.l_class is not None:
            total = list(self.canonical_class)
            for d in self.double_curves.values():
                total = exact.vec_add(total, list(d))
            if tuple(total) != tuple(self.l_class):
                raise ValueError(f"{self.name}: [L] ≠ K + ΣDᵢ")


def del_pezzo_surface(name, degree, curve_index):
    """dP_d component: ⟨h, ε₁..ε_{9−d}⟩ = diag(1, −1⁹⁻ᵈ), anticanonical
    double curve D′ = −K = 3h − Σεᵢ."""
    n = 9 - degree
    g = [[0] * (n + 1) for _ in range(n + 1)]
    g[0][0] = 1
    for i in range(1, n + 1):
        g[i][i] = -1
    K = tuple([-3] + [1] * n)
    D = tuple(-x for x in K)
    return ComponentSurface(
        name=name,
        lattice=IntegralLattice(g),
        canonical_class=K,
        double_curves={curve_index: D},
    )


def _diag_lattice(pos, neg):
    g = [[0] * (pos + neg) for _ in range(pos + neg)]
    for i in range(pos):
        g[i][i] = 1
    for i in range(pos, pos + neg):
        g[i][i] = -1
    return IntegralLattice(g)


def _e8_root_gram():
    from .roots import build_En_lattice

    L, h, eps, kappa, alphas = build_En_lattice(8)
    return [[L.pairing(a, b) for b in alphas] for a in alphas]


@dataclass(frozen=True)
class GluedBoundaryModel:
    stratum: str
    y_tilde: ComponentSurface
    dp_components: tuple
    ambient: IntegralLattice
    xi: tuple  # ξᵢ in ambient coordinates
    l_total: tuple  # [L] in ambient coordinates

    @property
    def k(self):
        return len(self.xi)

    def embed_y(self, v):
        """Ỹ class into ambient coordinates."""
        out = list(v) + [0] * (self.ambient.rank - self.y_tilde.lattice.rank)
        return tuple(out)

    def embed_z(self, i, v):
        """Class on the i-th del Pezzo component (0-based) into the ambient."""
        off = self.y_tilde.lattice.rank
        for j in range(i):
            off += self.dp_components[j].lattice.rank
        out = [0] * self.ambient.rank
        for t, x in enumerate(v):
            out[off + t] = x
        return tuple(out)


def _rat_basis_class(rank, h=0, eps=(), extra=()):
    """Class a·h + Σ bⱼ ε_j + extras for diag(1,−1^{rank−1}) bases.

    `eps` is a list of (index, coeff) with 1-based ε indices; `extra`
    likewise for trailing basis vectors addressed by absolute position.
    """
    v = [0] * rank
    v[0] = h
    for j, c in eps:
        v[j] = c
    for j, c in extra:
        v[j] = c
    return tuple(v)


def _build_rat21():
    rank = 12  # h, ε₁..ε₉, φ₁, φ₂
    L = _diag_lattice(1, 11)
    PHI1, PHI2 = 10, 11
    d1 = _rat_basis_class(rank, h=6, eps=[(j, -2) for j in range(1, 10)],
                          extra=[(PHI1, -1), (PHI2, -1)])
    d2 = _rat_basis_class(rank, h=3, eps=[(j, -1) for j in range(1, 9)],
                          extra=[(PHI1, -1), (PHI2, -1)])
    l = _rat_basis_class(rank, h=6, eps=[(j, -2) for j in range(1, 9)] + [(9, -1)],
                         extra=[(PHI1, -1), (PHI2, -1)])
    K = tuple(a - b - c for a, b, c in zip(l, d1, d2))
    yt = ComponentSurface("Y~(2,1)", L, K, {1: d1, 2: d2}, l_class=l)
    zs = (del_pezzo_surface("Z1=dP2", 2, 1), del_pezzo_surface("Z2=dP1", 1, 2))
    return yt, zs


def _build_rat22():
    rank = 13  # h, ε₁..ε₁₁, C
    L = _diag_lattice(1, 12)
    C = 12
    d2 = _rat_basis_class(rank, h=3, eps=[(j, -1) for j in range(1, 12)])
    d1 = _rat_basis_class(rank, h=4,
                          eps=[(j, -1) for j in range(1, 11)] + [(11, -2)],
                          extra=[(C, -2)])
    l = _rat_basis_class(rank, h=4,
                         eps=[(j, -1) for j in range(1, 11)] + [(11, -2)],
                         extra=[(C, -1)])
    K = tuple(a - b - c for a, b, c in zip(l, d1, d2))
    yt = ComponentSurface("Y~(2,2)", L, K, {1: d1, 2: d2}, l_class=l)
    zs = (del_pezzo_surface("Z1=dP2", 2, 1), del_pezzo_surface("Z2=dP2", 2, 2))
    return yt, zs


def _build_rat11():
    rank = 11  # h, ε₁..ε₁₀
    L = _diag_lattice(1, 10)
    d1 = _rat_basis_class(rank, h=6,
                          eps=[(j, -2) for j in range(1, 10)] + [(10, -1)])
    d2 = _rat_basis_class(rank, h=6,
                          eps=[(j, -2) for j in range(1, 9)] + [(10, -2), (9, -1)])
    l = _rat_basis_class(rank, h=9,
                         eps=[(j, -3) for j in range(1, 9)] + [(9, -2), (10, -2)])
    K = tuple(a - b - c for a, b, c in zip(l, d1, d2))
    yt = ComponentSurface("Y~(1,1)", L, K, {1: d1, 2: d2}, l_class=l)
    zs = (del_pezzo_surface("Z1=dP1", 1, 1), del_pezzo_surface("Z2=dP1", 1, 2))
    return yt, zs


def _build_enriques():
    # U ⊕ E8 ⊕ ⟨−1⟩, basis (f₁, f₂, E8-block, e)
    g = [[0] * 11 for _ in range(11)]
    g[0][1] = g[1][0] = 1
    e8 = _e8_root_gram()
    for i in range(8):
        for j in range(8):
            g[2 + i][2 + j] = e8[i][j]
    g[10][10] = -1
    L = IntegralLattice(g)
    E = 10
    K = tuple(1 if i == E else 0 for i in range(11))
    d1 = tuple((1 if i == 0 else 0) - (1 if i == E else 0) for i in range(11))
    d2 = tuple((1 if i == 1 else 0) - (1 if i == E else 0) for i in range(11))
    l = tuple((1 if i in (0, 1) else 0) - (1 if i == E else 0) for i in range(11))
    yt = ComponentSurface("Y~(Enriques)", L, K, {1: d1, 2: d2}, l_class=l)
    zs = (del_pezzo_surface("Z1=dP1", 1, 1), del_pezzo_surface("Z2=dP1", 1, 2))
    return yt, zs


def _ruled_gram(n_exc):
    # ⟨σ, f, e₁..e_n⟩ with σ²=1, σ·f=1, f²=0, eᵢ²=−1
    n = 2 + n_exc
    g = [[0] * n for _ in range(n)]
    g[0][0] = 1
    g[0][1] = g[1][0] = 1
    for i in range(2, n):
        g[i][i] = -1
    return IntegralLattice(g)


def _build_ell111():
    L = _ruled_gram(2)  # σ, f, e₁, e₂
    d1 = (2, -1, -1, 0)
    d2 = (2, -1, 0, -1)
    d3 = (1, 0, -1, -1)
    l = (3, -1, -1, -1)
    K = (-2, 1, 1, 1)
    yt = ComponentSurface("Y~(1,1,1)", L, K, {1: d1, 2: d2, 3: d3}, l_class=l)
    zs = tuple(del_pezzo_surface(f"Z{i}=dP1", 1, i) for i in (1, 2, 3))
    return yt, zs


def _build_ell211():
    L = _ruled_gram(3)  # σ, f, e₁, e₂, e₃
    d1 = (2, -1, 0, -1, -1)
    d2 = (1, 0, -1, -1, 0)
    d3 = (1, 0, -1, 0, -1)
    l = (2, 0, -1, -1, -1)
    K = (-2, 1, 1, 1, 1)
    yt = ComponentSurface("Y~(2,1,1)", L, K, {1: d1, 2: d2, 3: d3}, l_class=l)
    zs = (
        del_pezzo_surface("Z1=dP2", 2, 1),
        del_pezzo_surface("Z2=dP1", 1, 2),
        del_pezzo_surface("Z3=dP1", 1, 3),
    )
    return yt, zs


_BUILDERS = {
    "rat21": _build_rat21,
    "rat22": _build_rat22,
    "rat11": _build_rat11,
    "enriques": _build_enriques,
    "ell111": _build_ell111,
    "ell211": _build_ell211,
}


def build_stratum_model(label):
    """Explicit glued model for a stratum label; all invariants verified."""
    if label not in _BUILDERS:
        raise ValueError(f"unknown stratum label {label!r}")
    yt, zs = _BUILDERS[label]()
    ambient = direct_sum(yt.lattice, *(z.lattice for z in zs))
    model = GluedBoundaryModel(
        stratum=label,
        y_tilde=yt,
        dp_components=tuple(zs),
        ambient=ambient,
        xi=(),
        l_total=(),
    )
    xi = []
    for i, z in enumerate(zs):
        curve = i + 1
        dy = model.embed_y(yt.double_curves[curve])
        dz = model.embed_z(i, z.double_curves[curve])
        xi.append(tuple(a - b for a, b in zip(dy, dz)))
    l_total = model.embed_y(yt.l_class)
    model = GluedBoundaryModel(
        stratum=label,
        y_tilde=yt,
        dp_components=tuple(zs),
        ambient=ambient,
        xi=tuple(xi),
        l_total=l_total,
    )
    _validate_model(model)
    return model


def _validate_model(m):
    amb = m.ambient
    k = m.k
    for i, x in enumerate(m.xi):
        if amb.norm(x) != 0:
            raise AssertionError("ξᵢ not isotropic")
        if amb.pairing(x, m.l_total) != 0:
            raise AssertionError("ξᵢ·[L] ≠ 0")
        for y in m.xi[i + 1:]:
            if amb.pairing(x, y) != 0:
                raise AssertionError("ξᵢ·ξⱼ ≠ 0")
    if amb.norm(m.l_total) != 1:
        raise AssertionError("[L]² ≠ 1")
    yt = m.y_tilde
    for i, d in yt.double_curves.items():
        if yt.lattice.pairing(yt.l_class, d) != 0:
            raise AssertionError("[L]·Dᵢ ≠ 0 on Ỹ")
        mi = -yt.lattice.norm(d)
        z = m.dp_components[i - 1]
        if z.lattice.norm(z.double_curves[i]) != mi:
            raise AssertionError("D′ᵢ² on Zᵢ ≠ mᵢ")
    if amb.rank - (2 * k + 1) != 24:
        raise AssertionError("rank bookkeeping fails")
    # the ξ span is primitive
    facs = exact.invariant_factors([list(x) for x in m.xi])
    if len(facs) != k or any(f != 1 for f in facs):
        raise AssertionError("ξ span not primitive")


# ---------------------------------------------------------------------------
# Λ = {ξ, [L]}⊥ / Σℤξᵢ


@dataclass(frozen=True)
class LambdaLattice:
    stratum: str
    lattice: IntegralLattice  # rank 24
    t_basis: tuple  # rows: basis of {ξ,[L]}⊥ in ambient coordinates
    xi_t: tuple  # ξᵢ in T coordinates
    lifts: tuple  # rows: coset lifts of the Λ basis, in T coordinates
    projection: tuple  # 24×rank(T): Λ coords of a T vector
    root_data: object  # RootDecomposition
    root_index: int  # [Λ : Λ_R]

    def lift_to_ambient(self, lam):
        """Ambient representative of a Λ vector (coset choice fixed by lifts)."""
        t_vec = [0] * len(self.t_basis)
        for c, row in zip(lam, self.lifts):
            t_vec = exact.vec_add(t_vec, exact.vec_scale(c, list(row)))
        amb = [0] * len(self.t_basis[0])
        for c, row in zip(t_vec, self.t_basis):
            amb = exact.vec_add(amb, exact.vec_scale(c, list(row)))
        return tuple(amb)

    def ambient_to_lambda(self, v):
        """Λ coordinates of an ambient vector lying in {ξ,[L]}⊥ ∩ ℤ-span(T)."""
        t = exact.solve_unique(exact.transpose([list(r) for r in self.t_basis]), list(v))
        if t is None or any(f.denominator != 1 for f in t):
            raise ValueError("vector does not lie in the complement lattice")
        t = [int(f) for f in t]
        return tuple(
            sum(self.projection[i][j] * t[j] for j in range(len(t)))
            for i in range(24)
        )


@lru_cache(maxsize=None)
def compute_lambda(label):
    """Λ of a stratum with root decomposition and [Λ : Λ_R]; cached."""
    m = build_stratum_model(label)
    amb = m.ambient
    span = [list(x) for x in m.xi] + [list(m.l_total)]
    t_basis = orthogonal_complement(amb, span)
    t_gram = [[amb.pairing(a, b) for b in t_basis] for a in t_basis]
    T = IntegralLattice(t_gram)
    t_cols = exact.transpose([list(r) for r in t_basis])
    xi_t = []
    for x in m.xi:
        c = exact.solve_unique(t_cols, list(x))
        assert c is not None and all(f.denominator == 1 for f in c)
        xi_t.append([int(f) for f in c])
    q = quotient_by_isotropic(T, xi_t)
    lam = q.lattice
    assert lam.rank == 24
    roots = enumerate_roots(lam)
    dec = decompose_root_system(lam, roots)
    simples = [list(r) for r in dec.all_simple_roots()]
    # Λ_R is spanned by the roots; for rank-24 root systems the simple
    # roots are a basis
    root_index = index_of_sublattice(lam, simples)
    return LambdaLattice(
        stratum=label,
        lattice=lam,
        t_basis=tuple(tuple(r) for r in t_basis),
        xi_t=tuple(tuple(r) for r in xi_t),
        lifts=q.lifts,
        projection=q.projection,
        root_data=dec,
        root_index=root_index,
    )


def lambda_predicates(label):
    lam = compute_lambda(label).lattice
    is_even, is_unimod, disc, _ = lattice_predicates(lam)
    return {
        "rank": lam.rank,
        "even": is_even,
        "unimodular": is_unimod,
        "negative_definite": is_negative_definite(lam),
    }


# ---------------------------------------------------------------------------
# lozenge type


@dataclass(frozen=True)
class LozengeType:
    r: int
    s: int


def lozenge_type(rank_w0, rank_w1):
    """◊_{r,s} from the weight-graded ranks: r = rank W₀, s = rank W₁ / 2
    (the (1,0) Hodge number of the weight-1 piece)."""
    if rank_w0 < 0 or rank_w1 < 0:
        raise ValueError("ranks must be non-negative")
    if rank_w1 % 2:
        raise ValueError("weight-1 rank must be even")
    return LozengeType(rank_w0, rank_w1 // 2)


# ---------------------------------------------------------------------------
# JW₁ and its marked subtori


@dataclass(frozen=True)
class JW1Data:
    stratum: str
    torus: RationalTorus  # JW₁, rank 4
    markings: tuple  # TorusMorphism JDᵢ → JW₁ per double curve
    projection_degree: int  # degree of ⊕JDᵢ-side projection onto JW₁
    eta: tuple | None = None  # Enriques gluing 2-torsion, as raw coords


DEFAULT_ENRIQUES_ETA = (Fraction(1, 2), Fraction(0), Fraction(1, 2), Fraction(0))


def compute_JW1(model, eta=None):
    """JW₁ with the inclusion morphisms of the double-curve Jacobians.

    rational strata: JW₁ = JD₁ ⊕ JD₂.  Enriques: the ⟨η⟩-quotient of
    JD₁ ⊕ JD₂ (η 2-torsion with both components nonzero).  ell111: the
    cover diagram with JΓ₁ ⊕ JΓ₂ ≅ JW₁ and the section marking.  ell211:
    JΓ ⊕ JB with two JB markings differing by the pullback isogeny.
    """
    label = model.stratum
    jd = RationalTorus(2)
    if label in ("rat11", "rat21", "rat22"):
        jw1 = RationalTorus(4)
        m1 = TorusMorphism(jd, jw1, ((1, 0), (0, 1), (0, 0), (0, 0)))
        m2 = TorusMorphism(jd, jw1, ((0, 0), (0, 0), (1, 0), (0, 1)))
        return JW1Data(label, jw1, (m1, m2), 1)
    if label == "enriques":
        coords = DEFAULT_ENRIQUES_ETA if eta is None else tuple(Fraction(c) for c in eta)
        p = TorusPoint(coords)
        if not p.scale(2).is_zero():
            raise ValueError("η must be 2-torsion")
        if all(c == 0 for c in p.coords[:2]) or all(c == 0 for c in p.coords[2:]):
            raise ValueError("η must have nonzero image in both JD factors")
        total = RationalTorus(4)
        jw1, proj = quotient_torus(total, [p])
        i1 = TorusMorphism(jd, total, ((1, 0), (0, 1), (0, 0), (0, 0)))
        i2 = TorusMorphism(jd, total, ((0, 0), (0, 0), (1, 0), (0, 1)))
        m1 = proj.compose(i1)
        m2 = proj.compose(i2)
        for m in (m1, m2):
            grp, _ = kernel_points(m)
            if grp.order != 1:
                raise ValueError("inconsistent isogeny kernels")
        return JW1Data(label, jw1, (m1, m2), proj.degree(), eta=p.coords)
    if label == "ell111":
        d = build_jw1_cover_diagram()
        return JW1Data(label, d.jw1, (d.marking1, d.marking2, d.marking_sigma), 2)
    if label == "ell211":
        jw1 = RationalTorus(4)
        m1 = TorusMorphism(jd, jw1, ((1, 0), (0, 1), (0, 0), (0, 0)))
        m2 = TorusMorphism(jd, jw1, ((0, 0), (0, 0), (1, 0), (0, 1)))
        m3 = TorusMorphism(jd, jw1, ((-2, 0), (0, -1), (-1, 0), (0, -1)))
        return JW1Data(label, jw1, (m1, m2, m3), 2)
    raise ValueError(f"unknown stratum label {label!r}")


def marking_pair_indices(jw1_data):
    """Kernel orders of the pairwise sum maps JDᵢ ⊕ JDⱼ → JW₁ (sorted)."""
    from .tori import stack_via_sum

    ms = jw1_data.markings
    out = []
    for i in range(len(ms)):
        for j in range(i + 1, len(ms)):
            grp, _ = kernel_points(stack_via_sum(ms[i], ms[j]))
            out.append(grp.order)
    return sorted(out)


# ---------------------------------------------------------------------------
# restriction data and the extension map ψ


@dataclass(frozen=True)
class RestrictionData:
    """Line-bundle restriction recipe to each double curve.

    For each curve i: the del Pezzo side sends εⱼ ↦ pⱼ (and h ↦ 0), so a
    class v restricts to (v·D′ᵢ, Σⱼ vⱼ pⱼ); the Ỹ side is a 2×rank(Ỹ)
    rational matrix constrained so that ψ kills every ξⱼ and [L].
    """

    stratum: str
    z_points: tuple  # per curve: tuple of TorusPoint (one per εⱼ of Zᵢ)
    y_matrices: tuple  # per curve: 2×rank(Ỹ) Fraction rows
    seed: int

    def z_point(self, i, v):
        """Point part of the restriction of a Zᵢ class (0-based i)."""
        pts = self.z_points[i]
        c = [Fraction(0), Fraction(0)]
        for coeff, p in zip(v[1:], pts):
            c[0] += coeff * p.coords[0]
            c[1] += coeff * p.coords[1]
        return TorusPoint(tuple(c))

    def y_point(self, i, u):
        m = self.y_matrices[i]
        return TorusPoint(
            (
                sum(m[0][j] * u[j] for j in range(len(u))),
                sum(m[1][j] * u[j] for j in range(len(u))),
            )
        )


def _greedy_basis_columns(rows):
    """Lexicographically first column subset on which `rows` has full rank."""
    m = len(rows)
    chosen = []
    for j in range(len(rows[0])):
        trial = chosen + [j]
        sub = [[row[t] for t in trial] for row in rows]
        if exact.rank_of(sub) == len(trial):
            chosen.append(j)
        if len(chosen) == m:
            return chosen
    raise ValueError("constraint classes are rank deficient")


def generate_restriction_data(model, seed):
    """Seeded generic restriction data with the ψ constraints built in."""
    rng = random.Random(seed)

    def rnd():
        return Fraction(rng.randrange(97), 97)

    yt = model.y_tilde
    n = yt.lattice.rank
    k = model.k
    z_points = []
    for z in model.dp_components:
        pts = tuple(
            TorusPoint((rnd(), rnd())) for _ in range(z.lattice.rank - 1)
        )
        z_points.append(pts)
    # constraint classes on Ỹ: D₁..D_k then L
    classes = [list(yt.double_curves[i + 1]) for i in range(k)] + [list(yt.l_class)]
    cols = _greedy_basis_columns(classes)
    sub = [[row[t] for t in cols] for row in classes]  # (k+1)×(k+1), invertible
    sub_inv = exact.rational_inverse(sub)
    y_matrices = []
    for i in range(k):
        raw = [[rnd() for _ in range(n)] for _ in range(2)]
        # targets: r(Dⱼ)=0 (j≠i), r(Dᵢ)=Σpⱼ (the K_{Zᵢ} restriction), r(L)=0
        sum_p = [Fraction(0), Fraction(0)]
        for p in z_points[i]:
            sum_p[0] += p.coords[0]
            sum_p[1] += p.coords[1]
        targets = []
        for j in range(k + 1):
            if j == i:
                targets.append(sum_p)
            else:
                targets.append([Fraction(0), Fraction(0)])
        # correct the designated columns: Δ_J·subᵀ = target − raw·classesᵀ
        rhs = []
        for r in range(2):
            row = []
            for j in range(k + 1):
                got = sum(raw[r][t] * classes[j][t] for t in range(n))
                row.append(targets[j][r] - got)
            rhs.append(row)
        # Δ_J = rhs · (subᵀ)⁻¹
        subt_inv = exact.transpose(sub_inv)
        delta = exact.mat_mul(rhs, subt_inv)
        for r in range(2):
            for idx, j in enumerate(cols):
                raw[r][j] += delta[r][idx]
        y_matrices.append(tuple(tuple(row) for row in raw))
    return RestrictionData(
        stratum=model.stratum,
        z_points=tuple(z_points),
        y_matrices=tuple(y_matrices),
        seed=seed,
    )


@dataclass(frozen=True)
class ExtensionMap:
    """ψ: Λ → JW₁ with its per-curve components and summand block table."""

    model: GluedBoundaryModel
    lam: LambdaLattice
    restriction: RestrictionData
    jw1: JW1Data

    def _split_ambient(self, v):
        yt_rank = self.model.y_tilde.lattice.rank
        u = v[:yt_rank]
        parts = []
        off = yt_rank
        for z in self.model.dp_components:
            parts.append(v[off:off + z.lattice.rank])
            off += z.lattice.rank
        return u, parts

    def psi_component_ambient(self, v, i):
        """ψᵢ of an ambient vector in {ξ,[L]}⊥ (0-based curve index)."""
        u, parts = self._split_ambient(v)
        return self.restriction.z_point(i, parts[i]) - self.restriction.y_point(i, u)

    def psi_component(self, lam_vec, i):
        return self.psi_component_ambient(self.lam.lift_to_ambient(lam_vec), i)

    def psi(self, lam_vec):
        """The assembled value in JW₁: Σᵢ ιᵢ(ψᵢ(λ))."""
        total = self.jw1.torus.zero()
        for i, m in enumerate(self.jw1.markings):
            total = total + m.apply(self.psi_component(lam_vec, i))
        return total

    def degree(self, lam_vec, i):
        """Restriction degree of λ to curve i (equal on both sides)."""
        v = self.lam.lift_to_ambient(lam_vec)
        u, parts = self._split_ambient(v)
        yt = self.model.y_tilde
        z = self.model.dp_components[i]
        dy = yt.lattice.pairing(u, yt.double_curves[i + 1])
        dz = z.lattice.pairing(parts[i], z.double_curves[i + 1])
        assert dy == dz, "restriction degrees inconsistent"
        return dy

    def block_table(self):
        """For each root summand s and curve i: True iff ψᵢ vanishes on
        every root of the summand (checked on simple roots; additive)."""
        table = []
        for label, simples in self.lam.root_data.components:
            row = []
            for i in range(self.model.k):
                zero = all(
                    self.psi_component(list(s), i).is_zero() for s in simples
                )
                row.append(zero)
            table.append((label, tuple(row)))
        return table

    def single_factor_count(self):
        """Number of root summands whose ψ lands in exactly one JD factor."""
        count = 0
        for _, flags in self.block_table():
            nonzero = [i for i, z in enumerate(flags) if not z]
            if len(nonzero) == 1:
                count += 1
        return count


def extension_map(model, lam, restriction, jw1=None):
    """Assemble ψ and verify ψ(ξᵢ) = ψ([L]) = 0 identically."""
    if jw1 is None:
        jw1 = compute_JW1(model)
    psi = ExtensionMap(model=model, lam=lam, restriction=restriction, jw1=jw1)
    for x in model.xi:
        for i in range(model.k):
            if not psi.psi_component_ambient(list(x), i).is_zero():
                raise AssertionError("ψ does not kill ξ")
    for i in range(model.k):
        if not psi.psi_component_ambient(list(model.l_total), i).is_zero():
            raise AssertionError("ψ does not kill [L]")
    return psi


# ---------------------------------------------------------------------------
# the (2,2) stratum specials


def rat22_class_solve():
    """The (a, b) solving the degree/self-intersection constraints
    3a + b = 10, (class)² = 2, and the resulting pre-blowdown class
    a·h − Σ₁¹⁰εᵢ + b·ε₁₁ (integer solution is unique)."""
    sols = []
    for a in range(-20, 21):
        b = 10 - 3 * a
        if a * a - 10 - b * b == 2:
            sols.append((a, b))
    assert sols == [(4, -2)]
    a, b = sols[0]
    cls = _rat_basis_class(13, h=a, eps=[(j, -1) for j in range(1, 11)] + [(11, b)])
    return a, b, cls


def construct_beta11(lam=None):
    """The distinguished class β₁₁ ∈ Λ of the (2,2) stratum.

    β₁₁ is the unique vector pairing δ_{j,9} with the D₁₀ simple roots and
    δ_{j,7} with one E₇ (zero on the other); integrality selects which E₇
    and which D₁₀ leaf weight (the leaf swap is the outer automorphism).
    Returns (β₁₁, coset order of β₁₁ in Λ/Λ_R).
    """
    if lam is None:
        lam = compute_lambda("rat22")
    dec = lam.root_data
    labels = [c[0] for c in dec.components]
    if labels != ["E7", "E7", "D10"]:
        raise ValueError("β₁₁ requires root decomposition E7+E7+D10")
    L = lam.lattice
    g = L.gram_lists()
    d10_idx = 2
    for e7_idx in (0, 1):
        for leaf in (9, 10):
            rows, rhs = [], []
            for ci, (_, simples) in enumerate(dec.components):
                for j, s in enumerate(simples, start=1):
                    rows.append(exact.vec_mat(list(s), g))
                    if ci == e7_idx and j == 7:
                        rhs.append(1)
                    elif ci == d10_idx and j == leaf:
                        rhs.append(1)
                    else:
                        rhs.append(0)
            x = exact.solve_unique(rows, rhs)
            if x is None:
                continue
            if all(f.denominator == 1 for f in x):
                beta = tuple(int(f) for f in x)
                assert L.norm(beta) == -4
                order = _coset_order(lam, beta)
                return beta, order
    raise ValueError("no integral β₁₁ for any labeling choice")


def _coset_order(lam, v):
    """Order of v + Λ_R in Λ/Λ_R (lcm of denominators over the root basis)."""
    simples = [list(s) for s in lam.root_data.all_simple_roots()]
    x = exact.solve_unique(exact.transpose(simples), list(v))
    assert x is not None
    order = 1
    for f in x:
        d = f.denominator
        order = order * d // _gcd(order, d)
    return order


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def beta11_weight_crosscheck(lam=None):
    """ϖ₇(E₇)² + ϖ₉(D₁₀)² = −3/2 − 5/2 = −4 from inverse Cartan data."""
    if lam is None:
        lam = compute_lambda("rat22")
    from .roots import weight_self_pairing

    dec = lam.root_data
    w7 = fundamental_weight(dec, 0, 7)
    w9 = fundamental_weight(dec, 2, 9)
    return weight_self_pairing(dec, w7) + weight_self_pairing(dec, w9)


# ---------------------------------------------------------------------------
# explicit E8 completions (the mixed summands of rat21 and ell211)


def completed_E8_roots(model):
    """Simple roots of the three E₈ summands in ambient coordinates.

    For rat21: Z₂'s κ⊥ E₈; the pure-Ỹ E₈ on ε₁..ε₈; and the E₈ completing
    Z₁'s E₇ by β = ε + ε′ with ε = −(3h−Σ₁⁸εᵢ)+ε₉+φ₁ on Ỹ and ε′ the first
    exceptional class of Z₁.  For ell211: Z₂'s and Z₃'s κ⊥ E₈s and the E₈
    completing Z₁'s E₇ by β = ε + ε′ with ε = −σ + f.  Every returned root
    lies in {ξ,[L]}⊥ and has square −2.
    """
    from .roots import build_En_lattice

    label = model.stratum
    if label not in ("rat21", "ell211"):
        raise ValueError("completed_E8_roots defined for rat21 and ell211 only")

    def dp_root_basis(i):
        z = model.dp_components[i]
        n = z.lattice.rank - 1
        _, _, _, _, alphas = build_En_lattice(n)
        return [model.embed_z(i, a) for a in alphas]

    def e7_completion(eps_y):
        # Z₁ is a dP2: its κ⊥ is an E₇; β = ε + ε′ attaches a node
        e7 = dp_root_basis(0)
        eps_z = model.embed_z(0, (0, 1, 0, 0, 0, 0, 0, 0))
        beta = tuple(a + b for a, b in zip(model.embed_y(eps_y), eps_z))
        return [beta] + e7

    if label == "rat21":
        yr = model.y_tilde.lattice.rank  # 12; basis h, ε₁..ε₉, φ₁, φ₂
        pure = []
        for i in range(1, 8):
            v = [0] * yr
            v[i + 1], v[i] = 1, -1
            pure.append(model.embed_y(v))
        v = [0] * yr
        v[0] = 1
        v[1] = v[2] = v[3] = -1
        pure.append(model.embed_y(v))
        eps_y = tuple([-3] + [1] * 8 + [1, 1, 0])  # −3h + Σ₁⁸εᵢ + ε₉ + φ₁
        groups = [dp_root_basis(1), pure, e7_completion(eps_y)]
    else:
        eps_y = (-1, 1, 0, 0, 0)  # −σ + f
        groups = [dp_root_basis(1), dp_root_basis(2), e7_completion(eps_y)]
    amb = model.ambient
    span = [list(x) for x in model.xi] + [list(model.l_total)]
    for grp in groups:
        for r in grp:
            assert amb.norm(r) == -2
            for s in span:
                assert amb.pairing(r, s) == 0
    return groups
