"""Fenchel-Nielsen coordinates on the one-holed torus.

A hyperbolic structure is pinned down by the length l of a simple
closed geodesic, the twist tau along it, and the boundary length b.
The conversion to trace coordinates goes through explicit matrices;
the boundary constraint kappa(x, y, z) = -2 cosh(b/2) certifies it.
"""

import math

from slchar.fricke import FNCoords, fn_to_traces, member_s11, pants_curve_count

print("A cusped square torus: l = 2 arccosh(3/2), tau = 0, b = 0")
print("-" * 60)
res = fn_to_traces(FNCoords(l=2 * math.acosh(1.5), tau=0.0, b=0.0))
print(f"  (x, y, z) = ({res.x:.6f}, {res.y:.6f}, {res.z:.6f})")
print(f"  kappa = {res.kappa:.12f}  (cusp: boundary trace -2)")

print()
print("Twisting moves y and z but fixes x and the boundary")
print("-" * 60)
for tau in (-2.0, -1.0, 0.0, 1.0, 2.0):
    res = fn_to_traces(FNCoords(l=1.5, tau=tau, b=1.0))
    print(f"  tau = {tau:+.1f}: (x, y, z) = "
          f"({res.x:.4f}, {res.y:.4f}, {res.z:.4f}), kappa = {res.kappa:.6f}")

print()
print("The image always lands in the Fricke slice")
print("-" * 60)
import random

rnd = random.Random(0)
count = 0
for _ in range(200):
    coords = FNCoords(l=rnd.uniform(0.1, 5), tau=rnd.uniform(-4, 4),
                      b=rnd.uniform(0.01, 4))
    res = fn_to_traces(coords)
    assert member_s11(*res.traces()).verdict.value == "member-slice"
    assert abs(res.kappa + 2 * math.cosh(coords.b / 2)) < 1e-9
    count += 1
print(f"  {count} random (l, tau, b) points verified")

print()
print("Pants decompositions: interior curve counts 3(g-1) + n")
print("-" * 60)
for g, n in [(1, 1), (0, 4), (1, 2), (2, 0)]:
    print(f"  genus {g}, {n} boundary components: {pants_curve_count(g, n)} curves")
