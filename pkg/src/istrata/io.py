"""JSON serialization for lattices, torus points, datasets, and polynomials.

All rational numbers travel as "p/q" strings (or "p" when integral) so that
files round-trip exactly; floating point is never produced or accepted.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .lattices import IntegralLattice
from .normalform import WeightedPolynomial
from .torelli import BoundaryDataset, SummandData
from .tori import TorusPoint

FORMAT_VERSION = 1


def fraction_to_str(f):
    f = Fraction(f)
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def fraction_from_str(s):
    if isinstance(s, int):
        return Fraction(s)
    if isinstance(s, str) and "." not in s:
        return Fraction(s)
    raise ValueError(f"not an exact rational: {s!r}")


def lattice_to_json(lattice):
    return {"rank": lattice.rank, "gram": [list(row) for row in lattice.gram]}


def lattice_from_json(obj):
    gram = obj["gram"]
    if len(gram) != obj["rank"]:
        raise ValueError("rank does not match the Gram matrix")
    return IntegralLattice(gram)


def point_to_json(p):
    return [fraction_to_str(c) for c in p.coords]


def point_from_json(obj):
    return TorusPoint(tuple(fraction_from_str(c) for c in obj))


def polynomial_to_json(poly):
    return {
        ",".join(str(e) for e in exp): fraction_to_str(c) for exp, c in poly.coeffs
    }


def polynomial_from_json(obj):
    d = {}
    for key, val in obj.items():
        exp = tuple(int(e) for e in key.split(","))
        if len(exp) != 4:
            raise ValueError(f"bad exponent key {key!r}")
        d[exp] = fraction_from_str(val)
    return WeightedPolynomial.from_dict(d)


def dataset_to_json(ds):
    return {
        "version": ds.version,
        "k": ds.k,
        "pair_pattern": list(ds.pair_pattern),
        "root_label": ds.root_label,
        "jw1_pair_indices": [[list(pair), order] for pair, order in ds.jw1_pair_indices],
        "summands": [
            {
                "label": s.label,
                "simple_roots": [list(r) for r in s.simple_roots],
                "zero_flags": list(s.zero_flags),
                "psi_points": [[point_to_json(p) for p in pts] for pts in s.psi_points],
            }
            for s in ds.summands
        ],
    }


def dataset_from_json(obj):
    if obj.get("version") != FORMAT_VERSION:
        raise ValueError("unsupported dataset version")
    summands = tuple(
        SummandData(
            label=s["label"],
            simple_roots=tuple(tuple(r) for r in s["simple_roots"]),
            zero_flags=tuple(bool(z) for z in s["zero_flags"]),
            psi_points=tuple(
                tuple(point_from_json(p) for p in pts) for pts in s["psi_points"]
            ),
        )
        for s in obj["summands"]
    )
    return BoundaryDataset(
        k=obj["k"],
        pair_pattern=tuple(obj["pair_pattern"]),
        root_label=obj["root_label"],
        summands=summands,
        jw1_pair_indices=tuple(
            (tuple(pair), order) for pair, order in obj["jw1_pair_indices"]
        ),
    )


def dumps(obj):
    """Deterministic JSON text."""
    return json.dumps(obj, sort_keys=True, indent=2)


def load_path(path):
    with open(path) as fh:
        return json.load(fh)
