"""Bessel polynomials and the short-chord distribution on perfect matchings.

theta_n(x - 1) lists how many perfect matchings on 2n points have i short chords.

Run: python demos/05_bessel.py
"""
from shortchords.bessel import bessel_theta, schur_coeffs_via_bessel, shift_expand, short_chord_distribution

for n in range(6):
    theta = bessel_theta(n)
    shifted = shift_expand(theta, -1)
    print(f"theta_{n} = {theta}")
    print(f"   theta_{n}(x-1) = {shifted}   brute force: {short_chord_distribution(n)}")

print("\nSchur coefficients read off Bessel polynomials:")
for n, f in [(6, 0), (3, 1), (10, 2)]:
    print(f"  M_{n},{f}: {schur_coeffs_via_bessel(n, f)}")
