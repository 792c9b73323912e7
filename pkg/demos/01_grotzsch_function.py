"""
The Grötzsch modulus function
=============================

Φ(R) is defined through the module of the plane minus the closed unit disc
and the ray [R, ∞).  Here it is evaluated with two AGMs and its three
classical properties are checked on the spot.
"""

import math

import numpy as np

from qcdisplace import agm, phi
from qcdisplace.modulus import grotzsch_mu

# Gauss: agm(1, sqrt 2) is the reciprocal of his constant
print("agm(1, sqrt 2) =", agm(1, math.sqrt(2)))

# a few values of Φ; it sits strictly between R and 4R
for R in (1.5, 2, 4, 10, 100):
    print(f"phi({R:>5}) = {phi(R):.12f}   phi/R = {phi(R) / R:.6f}")

# the gap 4R - Φ(R) closes roughly like 1/R
for R in (10.0, 100.0, 1000.0):
    print(f"4R - phi(R) at R = {R:g}: {4 * R - phi(R):.3e}")

# functional equation Φ((a + 1/a)/2) = sqrt(Φ(1/a^2))
a = np.linspace(0.05, 0.95, 7)
res = [phi(0.5 * (t + 1 / t)) / math.sqrt(phi(1 / t**2)) - 1 for t in a]
print("functional equation, max relative residual:", max(map(abs, res)))

# μ and its complement multiply to π²/4
print("mu(0.3) mu(sqrt(0.91)) - pi^2/4 =", grotzsch_mu(0.3) * grotzsch_mu(math.sqrt(0.91)) - math.pi**2 / 4)
