"""
The extremal shift of the disc
==============================

For 0 < x < 1 we build the boundary-fixing map f with f(0) = -x and the
smallest maximal dilatation, then look at it from several sides: its
normalisation, its constant Beltrami modulus, and a picture of the image of
a polar grid (written to shift_grid.svg).
"""

import math

import numpy as np

from qcdisplace import build_shift, displacement_bound
from qcdisplace.cli import shift_svg
from qcdisplace.shift import beltrami_field
from qcdisplace.verify import disc_samples, measured_dilatation

x = 0.25
f = build_shift(x)
print(f)
print("outer radius of the slit annulus map:", f.R, " from the boundary image:", f.phi_map.boundary_radius())
print("f(0) =", f(0))

theta = np.linspace(0, 2 * math.pi, 9)[:-1]
print("on the circle |f(z) - z| <=", np.max(np.abs(f(np.exp(1j * theta)) - np.exp(1j * theta))))

# away from the segment [-x, 0] the pointwise dilatation is the same everywhere
z = disc_samples(300, r_max=0.95)
z = z[np.abs(z - np.clip(z.real, -x, 0)) > 0.02]
K = measured_dilatation(f, z)
print(f"measured dilatation: min {K.min():.9f}  max {K.max():.9f}  closed form {f.K:.9f}")

mu, q = beltrami_field(f, z[:5])
print("mu * q/|q| (should all equal k =", f.k, "):")
print(np.round(mu * q / np.abs(q), 9))

# small x: K = 1 + x + o(x), and the displacement bound is nearly sharp
for t in (1e-1, 1e-2, 1e-3):
    g = build_shift(t)
    print(f"x={t:g}: (K-1-x)/x = {(g.K - 1 - t) / t:.3e}   2(sqrt K - 1)/x = {displacement_bound(g.K) / t:.5f}")

with open("shift_grid.svg", "w", encoding="utf-8") as fh:
    fh.write(shift_svg(f))
print("wrote shift_grid.svg")
