"""
Distances on the disc
=====================

Half the log of the least dilatation needed to move one point to another
with the boundary fixed defines a distance; near the diagonal it is a
quarter of the hyperbolic distance.  Inverting K(x) answers the question of
how far a K-quasiconformal map can push a point.
"""

import numpy as np

from qcdisplace import gehring_h, hyperbolic_distance, kra_distance, shift_between, shift_dilatation

z1, z2 = 0.3 + 0.1j, -0.2 + 0.4j
print("hyperbolic:", hyperbolic_distance(z1, z2), " Kra:", kra_distance(z1, z2))
print("shift between them sends z1 to", shift_between(z1, z2, z1))

for eps in (1e-1, 1e-3, 1e-6):
    print(f"ratio Kra/hyperbolic at distance {eps:g}: {kra_distance(0, eps) / hyperbolic_distance(0, eps):.6f}")

print("\n   K      h(K)     x = tanh(h/2)")
for K in (1.01, 1.1, 1.5, 2, 4, 10):
    h = gehring_h(K)
    print(f"{K:5g}  {h:.6f}  {np.tanh(h / 2):.6f}")

x = 0.6
print("\nround trip at x = 0.6:", gehring_h(shift_dilatation(x)) - hyperbolic_distance(0, x))
