"""
Independent numerical checks
============================

Everything above rests on elliptic-function formulas.  This demo compares
them with things computed in completely different ways: a finite-volume
Laplace solver for ring and quadrilateral modules and for the slit-disc
map, and a brute-force minimax over piecewise-linear maps of a triangulated
disc.
"""

import math
import time

from qcdisplace import build_slit_annulus_map, phi, quad_module_from_crossratio, shift_dilatation
from qcdisplace.verify import (
    GrotzschRing,
    SlitDisc,
    competitor_dilatation_sweep,
    discrete_min_dilatation,
    laplace_quad_module,
    laplace_ring_module,
    laplace_slit_map,
)

t0 = time.perf_counter()
m = laplace_ring_module(GrotzschRing(0.25))
print(f"phi(4): grid {math.exp(2 * math.pi * m):.6f}  AGM {phi(4):.6f}")

m = laplace_ring_module(SlitDisc(0.5))
print(f"R for slit i[-0.5, 0.5]: grid {math.exp(2 * math.pi * m):.6f}  elliptic {build_slit_annulus_map(0.5).R:.6f}")
print(f"phi(0.9): grid {laplace_slit_map(0.5, 0.9).real:.6f}  Jacobi sn {build_slit_annulus_map(0.5)(0.9).real:.6f}")
print(f"quadrilateral 0,1,4,inf: grid {laplace_quad_module(4.0):.6f}  AGM {quad_module_from_crossratio(4).m:.6f}")
print(f"  ({time.perf_counter() - t0:.1f}s)")

x = 0.25
K = shift_dilatation(x)
print(f"\nK({x}) = {K:.6f}")
print(f"discrete minimax over a triangulated disc: {discrete_min_dilatation(x):.6f}")
for fam, params in (("radial_bump", [0.9, 0.7, 0.5]), ("mobius_patch", [0.9, 0.7, 0.5, 0.4, 0.35])):
    vals = competitor_dilatation_sweep(x, fam, params)
    print(f"{fam:>13}: " + "  ".join(f"{v:.3f}" for v in vals))
