"""Reduce a weighted-homogeneous deformation to its standard form.

A degree-6 polynomial in ℚ[x,y,z,t] with weights (2,3,1,1) and Weierstrass
t⁰ part admits coordinate changes x ↦ x + α₁tz + α₂t², y ↦ y + (β-terms),
z ↦ z + γt fixing the t⁰ part.  Seven deformation coefficients can be
killed; the residual nine-dimensional slice carries ℂ*-weights
(1,2,2,3,3,4,4,5,6).

Run:  python3 demos/normal_form_walkthrough.py
"""

from istrata.io import fraction_to_str
from istrata.normalform import (
    cstar_weights,
    random_deformation,
    reduce_to_standard_form,
    slice_coordinates,
)


def main():
    poly = random_deformation(seed=2024)
    print(f"input has {len(poly.coeffs)} monomials")
    result = reduce_to_standard_form(poly)
    ch = result.change
    print(f"\nreduction branch: {result.branch}")
    print(f"α = ({', '.join(fraction_to_str(a) for a in ch.alpha)})")
    print(f"β = ({', '.join(fraction_to_str(b) for b in ch.beta)})")
    print(f"γ = {fraction_to_str(ch.gamma)}")

    print("\nresidual slice coordinates (name: weight = value):")
    coords = slice_coordinates(result)
    for name, exp, weight in cstar_weights(result.branch):
        print(f"  {name:2s}: weight {weight} = {fraction_to_str(coords[name])}")

    assert result.polynomial.t_part(0) == poly.t_part(0)
    print("\nthe t⁰ Weierstrass part is untouched  ✓")


if __name__ == "__main__":
    main()
