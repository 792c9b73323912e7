"""Conformal modules of rings and quadrilaterals, and the Grötzsch function Φ.

Ring modules use the normalisation ``log(R) / (2*pi)`` for a ring equivalent
to ``1 < |w| < R``; quadrilateral modules are plain side ratios of the
equivalent rectangle with vertical side 1.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import DomainError
from .specfun import agm

__all__ = [
    "RingModule",
    "QuadModule",
    "grotzsch_mu",
    "phi",
    "inverse_grotzsch_mu",
    "annulus_module",
    "quad_module_from_crossratio",
]


@dataclass(frozen=True)
class RingModule:
    value: float

    def __post_init__(self):
        if not (self.value >= 0):
            raise DomainError(f"ring module must be nonnegative, got {self.value!r}")

    @property
    def radius_ratio(self) -> float:
        """Outer/inner radius of the equivalent round annulus."""
        return math.exp(2.0 * math.pi * self.value)


@dataclass(frozen=True)
class QuadModule:
    m: float

    def __post_init__(self):
        if not (self.m > 0):
            raise DomainError(f"quadrilateral module must be positive, got {self.m!r}")


def grotzsch_mu(r: float) -> float:
    """μ(r) = (π/2) K'(r) / K(r), the module (times 2π) of the unit disc slit along [0, r].

    Both integrals are taken through the AGM so the ratio reduces to
    ``(π/2) agm(1, r') / agm(1, r)``; no complement is ever formed by
    subtraction from 1.
    """
    r = float(r)
    if not (0.0 < r < 1.0):
        raise DomainError(f"grotzsch_mu needs 0 < r < 1, got {r!r}")
    r_c = math.sqrt((1.0 - r) * (1.0 + r))
    return 0.5 * math.pi * agm(1.0, r_c) / agm(1.0, r)


def inverse_grotzsch_mu(value: float) -> float:
    """Solve μ(r) = value for r in (0, 1) by bisection in r.

    μ is strictly decreasing, so plain bisection is safe; it runs until the
    bracket collapses to adjacent floats.
    """
    value = float(value)
    if not (value > 0 and math.isfinite(value)):
        raise DomainError(f"μ takes values in (0, inf), got {value!r}")
    # μ(r) ~ log(4/r) for small r gives a starting lower bracket
    lo = min(0.5, 4.0 * math.exp(-value) * 0.5)
    while grotzsch_mu(lo) < value:
        lo *= 0.5
        if lo < 1e-300:
            raise DomainError(f"μ value {value!r} too large to invert")
    hi = 1.0
    while True:
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            return mid
        if grotzsch_mu(mid) > value:
            lo = mid
        else:
            hi = mid


def phi(R: float) -> float:
    """Grötzsch function: the ring C \\ (closed disc ∪ [R, ∞)) has module log Φ(R) / 2π.

    Inversion z -> 1/z turns that ring into the disc slit along [0, 1/R], so
    Φ(R) = exp(μ(1/R)).
    """
    R = float(R)
    if not (R > 1.0) or not math.isfinite(R):
        raise DomainError(f"phi needs a finite R > 1, got {R!r}")
    return math.exp(grotzsch_mu(1.0 / R))


def annulus_module(r_in: float, r_out: float) -> RingModule:
    if not (0.0 < r_in < r_out):
        raise DomainError(f"annulus needs 0 < r_in < r_out, got ({r_in!r}, {r_out!r})")
    return RingModule(math.log(r_out / r_in) / (2.0 * math.pi))


def quad_module_from_crossratio(lam: float) -> QuadModule:
    """Module of the upper half-plane with vertices 0, 1, λ, ∞ (in that order).

    The Schwarz-Christoffel integrand 1/sqrt(t(t-1)(t-λ)) integrates to
    (2/√λ) K(k) over [0, 1] and (2/√λ) K'(k) over [1, λ], with k = 1/√λ, so the
    rectangle has side ratio K(k) / K'(k).
    """
    lam = float(lam)
    if not (lam > 1.0) or not math.isfinite(lam):
        raise DomainError(f"cross-ratio parameter must exceed 1, got {lam!r}")
    k = 1.0 / math.sqrt(lam)
    k_c = math.sqrt(1.0 - 1.0 / lam)
    # K(k)/K'(k) = agm(1, k) / agm(1, k')
    return QuadModule(agm(1.0, k) / agm(1.0, k_c))
