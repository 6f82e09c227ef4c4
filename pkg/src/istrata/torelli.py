"""Period maps, reconstruction, exceptional classes, and the stratum classifier.

The period map of an anticanonical pair (blowup of ℙ² at n points on a cubic
curve E) sends the κ⊥ basis α₁..α_n to differences of the points; it is
invertible up to translation by 3-torsion.  The classifier reads the
Hodge-theoretic fingerprint of a degeneration (Λ root label, monodromy
pair-index pattern, ψ block structure) and names the boundary stratum.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from math import isqrt

from .monodromy import build_frame, pair_index_pattern
from .roots import build_En_lattice
from .strata import (
    STRATUM_LABELS,
    build_stratum_model,
    compute_JW1,
    compute_lambda,
    extension_map,
    generate_restriction_data,
)
from .tori import RationalTorus, TorusPoint, n_torsion


# ---------------------------------------------------------------------------
# period map and reconstruction for anticanonical pairs


@dataclass(frozen=True)
class AnticanonicalConfig:
    torus: RationalTorus  # g = 2
    points: tuple  # p₁..p_n, TorusPoint

    def __post_init__(self):
        if len(self.points) < 3:
            raise ValueError("need n ≥ 3 points")

    @property
    def n(self):
        return len(self.points)


@dataclass(frozen=True)
class PeriodAssignment:
    n: int
    values: tuple  # v₁..v_n on α₁..α_n; κ ↦ 0 implicitly


def period_map(config):
    """vᵢ = p_{i+1} − pᵢ (i < n) and v_n = −p_{n−2} − p_{n−1} − p_n.

    The origin convention h ↦ 0 (three collinear points sum to zero) makes
    the κ value vanish automatically.
    """
    p = config.points
    n = config.n
    vals = [p[i + 1] - p[i] for i in range(n - 1)]
    vals.append(-(p[n - 3] + p[n - 2] + p[n - 1]))
    return PeriodAssignment(n=n, values=tuple(vals))


@dataclass(frozen=True)
class ReconstructionResult:
    orbit: tuple  # 9 configurations related by E[3] translation
    canonical: AnticanonicalConfig  # lexicographically least flattened tuple


def _flatten(config):
    return tuple(c for p in config.points for c in p.coords)


def reconstruct_points(periods, n=None):
    """Invert the period map up to translation by a 3-torsion point.

    With cᵢ = Σ_{j<i} vⱼ (so pᵢ = p₁ + cᵢ), the last period forces
    3p₁ = −(v_n + c_{n−2} + c_{n−1} + c_n); the nine solutions differ by
    E[3] and each reproduces the input periods exactly.
    """
    if n is None:
        n = periods.n
    if n < 3 or n != periods.n:
        raise ValueError("period count mismatch")
    v = periods.values
    T = RationalTorus(2)
    c = [T.zero()]
    for i in range(n - 1):
        c.append(c[-1] + v[i])
    w = -(v[n - 1] + c[n - 3] + c[n - 2] + c[n - 1])
    base = TorusPoint(tuple(x / 3 for x in w.coords))
    orbit = []
    for t in n_torsion(T, 3):
        p1 = base + t
        config = AnticanonicalConfig(T, tuple(p1 + ci for ci in c))
        assert period_map(config).values == v
        orbit.append(config)
    canonical = min(orbit, key=_flatten)
    return ReconstructionResult(orbit=tuple(orbit), canonical=canonical)


def canonical_translate(config):
    """Lex-least E[3] translate — the comparison form for round-trip tests."""
    T = config.torus
    orbit = [
        AnticanonicalConfig(T, tuple(p + t for p in config.points))
        for t in n_torsion(T, 3)
    ]
    return min(orbit, key=_flatten)


# ---------------------------------------------------------------------------
# exceptional classes


def is_exceptional(n, alpha):
    """Membership test α² = α·K = −1 in the blowup basis ⟨h, ε₁..ε_n⟩."""
    L, h, eps, kappa, alphas = build_En_lattice(n)
    return L.norm(alpha) == -1 and L.pairing(alpha, kappa) == 1


def is_effective(alpha, y):
    """Effectiveness of an exceptional class against a nef class y: α·y ≥ 0."""
    n = len(alpha) - 1
    L, *_ = build_En_lattice(n)
    return L.pairing(alpha, y) >= 0


def enumerate_exceptional(n):
    """All classes a·h + Σbᵢεᵢ with α² = α·K = −1, for n ≤ 8.

    The constraints are a² − Σbᵢ² = −1 and 3a + Σbᵢ = 1; Cauchy–Schwarz
    bounds a by (9−n)a² − 6a + 1 − n ≤ 0, which is a finite interval only
    for n ≤ 8 (at n = 9 the class set is infinite).
    """
    if n < 3:
        raise ValueError("n must be ≥ 3")
    if n >= 9:
        raise ValueError("exceptional-class set is infinite for n ≥ 9")
    out = []
    for a in range(-3 * n, 3 * n + 1):
        if (9 - n) * a * a - 6 * a + 1 - n > 0:
            continue
        q = a * a + 1  # Σb², must be ≥ 0
        s = 1 - 3 * a  # Σb
        for b in _signed_vectors(n, s, q):
            out.append(tuple([a] + b))
    return sorted(out)


def _signed_vectors(slots, target_sum, target_sq):
    """Integer vectors of given length with prescribed sum and sum of squares."""
    results = []
    vec = []

    def rec(i, s, q):
        if i == slots:
            if s == 0 and q == 0:
                results.append(list(vec))
            return
        rem = slots - i
        # feasibility: |s| ≤ rem·max|b| and s² ≤ rem·q (Cauchy–Schwarz)
        if q < 0 or s * s > rem * q:
            return
        bound = isqrt(q)
        for b in range(-bound, bound + 1):
            vec.append(b)
            rec(i + 1, s - b, q - b * b)
            vec.pop()

    rec(0, target_sum, target_sq)
    return results


def exceptional_via_weyl_orbit(n):
    """Independent oracle: the Weyl orbit of ε_n under the κ⊥ reflections."""
    L, h, eps, kappa, alphas = build_En_lattice(n)

    def reflect(x, a):
        c = L.pairing(x, a)
        return tuple(u + c * v for u, v in zip(x, a))

    seen = {tuple(eps[-1])}
    frontier = [tuple(eps[-1])]
    while frontier:
        nxt = []
        for x in frontier:
            for a in alphas:
                y = reflect(x, a)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return sorted(seen)


# ---------------------------------------------------------------------------
# boundary datasets and the classifier


@dataclass(frozen=True)
class SummandData:
    label: str
    simple_roots: tuple  # in Λ coordinates
    zero_flags: tuple  # per double curve: ψᵢ ≡ 0 on the summand
    psi_points: tuple  # per curve: tuple of TorusPoint on the simple roots


@dataclass(frozen=True)
class BoundaryDataset:
    k: int
    pair_pattern: tuple  # monodromy pair-index multiset, sorted
    root_label: str
    summands: tuple  # SummandData
    jw1_pair_indices: tuple  # ((i, j), kernel order) per unordered curve pair
    version: int = 1

    def __post_init__(self):
        rank = sum(len(s.simple_roots) for s in self.summands)
        if rank != 24:
            raise ValueError("summand ranks must total 24")
        for s in self.summands:
            if len(s.zero_flags) != self.k or len(s.psi_points) != self.k:
                raise ValueError("per-curve data length mismatch")

    def single_factor_count(self):
        count = 0
        for s in self.summands:
            if sum(1 for z in s.zero_flags if not z) == 1:
                count += 1
        return count


def _pairwise_marking_indices(jw1):
    """((i, j), kernel order of JDᵢ ⊕ JDⱼ → JW₁) for each unordered pair."""
    from .tori import kernel_points, stack_via_sum

    ms = jw1.markings
    out = []
    for i, j in itertools.combinations(range(len(ms)), 2):
        grp, _ = kernel_points(stack_via_sum(ms[i], ms[j]))
        out.append(((i, j), grp.order))
    return tuple(out)


def _ell111_summand_bases(model, lam):
    """The standard κ⊥ bases of the three dP1 components, in Λ coordinates.

    Using the exceptional-basis order (α₁..α₇ the ε-differences, α₈ the
    cubic class) keys the stored ψ values directly to the period map.
    """
    out = []
    for i, z in enumerate(model.dp_components):
        n = z.lattice.rank - 1
        _, _, _, _, alphas = build_En_lattice(n)
        basis = [lam.ambient_to_lambda(model.embed_z(i, a)) for a in alphas]
        out.append(tuple(basis))
    return out


def gen_fixture(label, seed):
    """Reproducible BoundaryDataset for a stratum, plus the generating
    descriptor used by round-trip tests."""
    if label not in STRATUM_LABELS:
        raise ValueError(f"unknown stratum label {label!r}")
    model = build_stratum_model(label)
    lam = compute_lambda(label)
    frame = build_frame(label)
    jw1 = compute_JW1(model)
    restriction = generate_restriction_data(model, seed)
    psi = extension_map(model, lam, restriction, jw1)
    if label == "ell111":
        summand_bases = [("E8", basis) for basis in _ell111_summand_bases(model, lam)]
    else:
        summand_bases = [(lbl, simples) for lbl, simples in lam.root_data.components]
    summands = []
    for lbl, simples in summand_bases:
        flags, points = [], []
        for i in range(model.k):
            vals = tuple(psi.psi_component(list(s), i) for s in simples)
            flags.append(all(v.is_zero() for v in vals))
            points.append(vals)
        summands.append(
            SummandData(
                label=lbl,
                simple_roots=tuple(tuple(s) for s in simples),
                zero_flags=tuple(flags),
                psi_points=tuple(points),
            )
        )
    ds = BoundaryDataset(
        k=model.k,
        pair_pattern=tuple(pair_index_pattern(frame)),
        root_label=lam.root_data.label,
        summands=tuple(summands),
        jw1_pair_indices=_pairwise_marking_indices(jw1),
    )
    descriptor = {
        "stratum": label,
        "seed": seed,
        "z_configs": tuple(
            AnticanonicalConfig(RationalTorus(2), pts) if len(pts) >= 3 else pts
            for pts in restriction.z_points
        ),
    }
    return ds, descriptor


def classify_stratum(ds):
    """Name the boundary stratum from its fingerprint; returns
    (label, certificate).  Unrecognized patterns give the explicit
    "outside classified strata" outcome instead of an error."""
    cert = {
        "root_label": ds.root_label,
        "k": ds.k,
        "pair_pattern": list(ds.pair_pattern),
    }
    if ds.root_label == "E7+E7+D10":
        cert["rule"] = "root label E7+E7+D10 is unique to the (2,2) stratum"
        return "rat22", cert
    if ds.root_label != "E8+E8+E8":
        cert["rule"] = "root label outside the classified list"
        return "outside classified strata", cert
    pattern = sorted(ds.pair_pattern)
    if ds.k == 3:
        if pattern == [1, 2, 2]:
            cert["rule"] = "k=3 with one isomorphic marking pair"
            return "ell111", cert
        if pattern == [1, 1, 2]:
            cert["rule"] = "k=3 with two isomorphic marking pairs"
            return "ell211", cert
        cert["rule"] = "k=3 pattern unrecognized"
        return "outside classified strata", cert
    if ds.k == 2:
        if pattern == [2]:
            cert["rule"] = "k=2 with non-isomorphic W1 sum"
            return "enriques", cert
        sf = ds.single_factor_count()
        cert["single_factor_summands"] = sf
        if sf == 2:
            cert["rule"] = "two root summands confined to single JD factors"
            return "rat11", cert
        if sf == 1:
            cert["rule"] = "one root summand confined to a single JD factor"
            return "rat21", cert
        cert["rule"] = "k=2 ψ block structure unrecognized"
        return "outside classified strata", cert
    cert["rule"] = "k outside classified range"
    return "outside classified strata", cert


# ---------------------------------------------------------------------------
# (1,1,1) reconstruction


@dataclass(frozen=True)
class Ell111Descriptor:
    distinguished_pair: tuple  # the two curve indices (0-based) with index-1 sum
    section_curve: int  # the remaining curve, identified with the base B
    configs: tuple  # canonical point configs for the two distinguished curves
    orbits: tuple  # full 9-element reconstruction orbits


def reconstruct_111(ds):
    """Recover the two dP1 point configurations (up to 3-torsion and the
    curve swap) from an ell111 dataset.

    The pair {D₁, D₂} is distinguished as the unique marking pair whose sum
    map is an isomorphism; each distinguished curve carries exactly one ψ
    summand, whose 8 stored periods feed the period-map inversion.
    """
    label, _ = classify_stratum(ds)
    if label != "ell111":
        raise ValueError("dataset does not classify as ell111")
    iso_pairs = [pair for pair, idx in ds.jw1_pair_indices if idx == 1]
    if len(iso_pairs) != 1:
        raise ValueError("expected a unique isomorphic marking pair")
    distinguished = iso_pairs[0]
    section = next(i for i in range(ds.k) if i not in distinguished)
    curve_summand = {}
    for s in ds.summands:
        nonzero = [i for i, z in enumerate(s.zero_flags) if not z]
        if len(nonzero) == 1 and nonzero[0] in distinguished:
            curve_summand.setdefault(nonzero[0], s)
    if sorted(curve_summand) != sorted(distinguished):
        raise ValueError("distinguished curves lack single-factor summands")
    orbits = []
    configs = []
    for i in distinguished:
        s = curve_summand[i]
        periods = PeriodAssignment(n=8, values=tuple(s.psi_points[i]))
        rec = reconstruct_points(periods)
        orbits.append(rec.orbit)
        configs.append(rec.canonical)
    return Ell111Descriptor(
        distinguished_pair=distinguished,
        section_curve=section,
        configs=tuple(configs),
        orbits=tuple(orbits),
    )


def descriptors_equivalent(reconstructed, generating_configs):
    """Round-trip oracle: the reconstructed configs match the generating
    ones up to E[3] translation per component and the swap of the two
    distinguished curves."""
    recs = [canonical_translate(c) for c in reconstructed.configs]
    gens = [canonical_translate(c) for c in generating_configs]
    for perm in ([0, 1], [1, 0]):
        if all(_flatten(recs[i]) == _flatten(gens[p]) for i, p in enumerate(perm)):
            return True
    return False


def classifier_confusion_matrix(seeds):
    """Label → classified-label counts over gen_fixture datasets."""
    out = {}
    for label in STRATUM_LABELS:
        row = {}
        for seed in seeds:
            ds, _ = gen_fixture(label, seed)
            got, _ = classify_stratum(ds)
            row[got] = row.get(got, 0) + 1
        out[label] = row
    return out
