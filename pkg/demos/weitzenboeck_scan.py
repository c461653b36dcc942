"""Probe positivity of the boundary quadratic form b.

The form b acts on 1-forms on the tube boundary torus, expanded in Fourier
modes on the unit square.  It is nonnegative whenever the principal
curvatures satisfy 1/sqrt(3) <= k1 <= k2 <= sqrt(3) (with k1 k2 = 1) and
the spectral shift epsilon is at most 2 k1.  Outside that window positivity
genuinely fails: at k2 = 2 the single mode sigma = sin(2 pi x2) theta2
gives b = -pi^2.
"""

import math

import numpy as np

from dehnfill import BoundaryCurvature, FourierMode1Form, boundary_form_b, random_form

rng = np.random.default_rng(7)

print("scan inside the certified curvature window:")
for k1 in np.linspace(1.0 / math.sqrt(3.0), 1.0, 5):
    k2 = 1.0 / k1
    curv = BoundaryCurvature(k1=k1, k2=k2, epsilon=min(2.0 * k1, 1.0))
    worst = min(boundary_form_b(curv, random_form(rng)) for _ in range(200))
    print(f"  k1 = {k1:.4f}, k2 = {k2:.4f}: min b over 200 random forms = {worst:.3e}")
    assert worst >= -1e-10

print()
print("outside the window the form goes negative:")
curv = BoundaryCurvature(k1=0.5, k2=2.0, epsilon=0.0)
sigma = FourierMode1Form({(0, 1): (0.0, -0.5j), (0, -1): (0.0, 0.5j)})
b = boundary_form_b(curv, sigma)
print(f"  k2 = 2, sigma = sin(2 pi x2) theta2: b = {b:.6f} (exact -pi^2 = {-math.pi**2:.6f})")
assert abs(b + math.pi**2) < 1e-12
