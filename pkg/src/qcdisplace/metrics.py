"""Distances on the unit disc built from the extremal displacement problem.

``kra_distance`` is half the log of the least dilatation needed to move one
point to another with the boundary held fixed; ``gehring_h`` is the largest
hyperbolic displacement a boundary-fixing K-q.c. map can achieve.
"""
from __future__ import annotations

import functools
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError
from .modulus import grotzsch_mu
from .shift import ShiftMap, build_shift, evaluate_shift, shift_dilatation

__all__ = [
    "DiscPointPair",
    "pseudo_hyperbolic",
    "hyperbolic_distance",
    "disc_automorphism",
    "kra_distance",
    "shift_between",
    "gehring_h",
]


def _check_disc(*pts):
    for p in pts:
        if not abs(p) < 1.0:
            raise DomainError(f"point {p!r} is not inside the open unit disc")


def pseudo_hyperbolic(z1: complex, z2: complex) -> float:
    z1, z2 = complex(z1), complex(z2)
    _check_disc(z1, z2)
    return abs(z1 - z2) / abs(1.0 - z1.conjugate() * z2)


@dataclass(frozen=True)
class DiscPointPair:
    z1: complex
    z2: complex

    @property
    def rho(self) -> float:
        return pseudo_hyperbolic(self.z1, self.z2)


def hyperbolic_distance(z1: complex, z2: complex) -> float:
    """Curvature -1 distance, via cosh d = 1 + 2|z1-z2|^2 / ((1-|z1|^2)(1-|z2|^2))."""
    z1, z2 = complex(z1), complex(z2)
    _check_disc(z1, z2)
    num = 2.0 * abs(z1 - z2) ** 2
    den = (1.0 - abs(z1)) * (1.0 + abs(z1)) * (1.0 - abs(z2)) * (1.0 + abs(z2))
    d = num / den
    return math.log1p(d + math.sqrt(d * (d + 2.0)))


def disc_automorphism(z1: complex, z2: complex):
    """(M, M_inv) with M(z1) = 0 and M(z2) = -rho on the negative real axis."""
    z1, z2 = complex(z1), complex(z2)
    m = (z2 - z1) / (1.0 - z1.conjugate() * z2)
    if m == 0:
        raise DomainError("z1 and z2 coincide")
    rot = -abs(m) / m
    c1 = z1.conjugate()

    def fwd(z):
        z = np.asarray(z, dtype=complex)
        return rot * (z - z1) / (1.0 - c1 * z)

    def inv(w):
        w = np.asarray(w, dtype=complex) / rot
        return (w + z1) / (1.0 + c1 * w)

    return fwd, inv


def _half_log_K(rho: float) -> float:
    # 1/2 log K = log((Φ+1)/(Φ-1)) with 1/Φ(1/rho) = exp(-μ(rho))
    mu = grotzsch_mu(rho)
    return math.log1p(2.0 * math.exp(-mu) / -math.expm1(-mu))


def kra_distance(z1: complex, z2: complex) -> float:
    rho = pseudo_hyperbolic(z1, z2)
    if rho == 0.0:
        return 0.0
    return _half_log_K(rho)


@functools.lru_cache(maxsize=64)
def _cached_shift(rho: float, tol: float) -> ShiftMap:
    return build_shift(rho, tol)


def shift_between(z1: complex, z2: complex, z, tol: float = 1e-9):
    """Extremal boundary-fixing map sending z1 to z2, evaluated at ``z``.

    Conjugates the normalised map by the automorphism M sending z1 to 0 and
    z2 to -rho: the result is M^-1(f(M(z))).
    """
    z1, z2 = complex(z1), complex(z2)
    _check_disc(z1, z2)
    if z1 == z2:
        raise DomainError("shift_between needs distinct points")
    fwd, inv = disc_automorphism(z1, z2)
    rho = pseudo_hyperbolic(z1, z2)
    f = _cached_shift(rho, float(tol))
    z = np.asarray(z, dtype=complex)
    if np.any(np.abs(z) > 1.0 + 1e-12):
        raise DomainError("shift_between is defined on the closed unit disc only")
    out = inv(evaluate_shift(f, fwd(z)))
    return out[()] if np.ndim(out) == 0 else out


def gehring_h(K: float, tol: float = 1e-12, max_iter: int = 200) -> float:
    """Largest hyperbolic displacement of a boundary-fixing K-q.c. self-map of D.

    Finds x with K(x) = K (bisection, then safeguarded Newton) and returns
    d(0, x).  Convergence is judged on the excess: |K(x) - K| <= tol (K - 1).
    """
    K = float(K)
    if not (K > 1.0) or not math.isfinite(K):
        raise DomainError("K must exceed 1")
    target = K - 1.0

    def excess(x):
        return shift_dilatation(x) - 1.0

    lo, hi = 0.0, 0.5
    while excess(hi) < target:
        lo = hi
        hi = 0.5 * (1.0 + hi)
        if hi >= 1.0:
            raise ConvergenceError(f"K = {K!r} is too large to bracket")
    # bisection down to a coarse relative bracket, then Newton
    for _ in range(max_iter):
        if hi - lo <= 1e-3 * hi:
            break
        mid = 0.5 * (lo + hi)
        if excess(mid) < target:
            lo = mid
        else:
            hi = mid
    x = 0.5 * (lo + hi)
    for _ in range(max_iter):
        r = excess(x) - target
        if abs(r) <= tol * target:
            return 2.0 * math.atanh(x)
        if r < 0:
            lo = x
        else:
            hi = x
        step = 1e-7 * x
        slope = (excess(x + step) - excess(x - step)) / (2.0 * step)
        nx = x - r / slope if slope > 0 else 0.5 * (lo + hi)
        if not (lo < nx < hi):
            nx = 0.5 * (lo + hi)
        if nx == x:
            return 2.0 * math.atanh(x)
        x = nx
    raise ConvergenceError("gehring_h root finder did not converge", abs(r) / target)
