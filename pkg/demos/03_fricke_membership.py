"""Fricke-space membership for the six simplest hyperbolic surfaces.

Trace coordinates turn "is this a hyperbolic structure?" into explicit
inequalities: an octant condition for the three-holed sphere, a cubic
inequality for the one-holed torus, linear/quadratic conditions for
the two nonorientable surfaces, and a component selection on a quartic
hypersurface for the four-holed sphere.
"""

import math

from slchar.fricke import (
    CharacterS04,
    member_c02,
    member_c11,
    member_s03,
    member_s04,
    member_s11,
    h1z2_action,
)
from slchar.hypgeom import hexagon_certificate

print("Three-holed sphere: closed octants, all |trace| >= 2")
print("-" * 60)
for char in [(-3, -3, -3), (-2, -2, -2), (-3, 3, 3), (-3, -3, 0)]:
    res = member_s03(*char)
    cusps = f", cusps {res.cusps}" if res.cusps else ""
    print(f"  {str(char):16s} -> {res.verdict.value}{cusps}")

print()
print("Every slice point bounds a right hexagon (certificate):")
cert = hexagon_certificate(-3, -3, -3)
for p in cert.pairs:
    print(f"  <hat {p.names[0]}, hat {p.names[1]}> = {p.inner:+.4f}  ({p.status})")
print(f"  verdict: {cert.verdict}, global sign: {cert.sign_choice}")

print()
print("One-holed torus: x^2 + y^2 + z^2 - xyz <= 0")
print("-" * 60)
for char in [(3, 3, 3), (5, 5, 5), (3, 3, 10), (0, 0, 0)]:
    res = member_s11(*char)
    print(f"  {str(char):16s} -> {res.verdict.value} (kappa = {res.kappa:g})")
print("  sign lifts act on coordinates:", h1z2_action(3, -3, -3))

print()
print("Nonorientable surfaces")
print("-" * 60)
print("  two-holed cross-surface (2,2,-2):", member_c02(2, 2, -2))
print("  two-holed cross-surface (0,0,-2):", member_c02(0, 0, -2))
print("  one-holed Klein bottle (1,1,0):  ", member_c11(1, 1, 0))
print("  one-holed Klein bottle (1,1,3):  ", member_c11(1, 1, 3))

print()
print("Four-holed sphere: on-variety + hyperbola component")
print("-" * 60)
examples = [
    ("relative Euler class 0 (not Fricke)", CharacterS04(2, 2, 2, 2, -3, 2, 7)),
    ("Fricke point", CharacterS04(3, 3, 3, 3, -3, -18 - 10 * math.sqrt(5),
                                  -18 - 10 * math.sqrt(5))),
    ("off the variety", CharacterS04(3, 3, 3, 3, -3, 0, 0)),
]
for label, ch in examples:
    res = member_s04(ch)
    extra = ""
    if res.f_plus is not None:
        extra = f", F+ = {res.f_plus:+.3f}, F- = {res.f_minus:+.3f}"
    print(f"  {label}: {res.verdict.value} (residual {res.residual:.1e}{extra})")
