"""Pointwise dilatation by finite differences, and hand-built competitors.

Every competitor here fixes the unit circle pointwise and sends 0 to -x, so
the extremal theory says none of them can have maximal dilatation below K(x).
"""
from __future__ import annotations

import math

import numpy as np

from .. import _fd
from ..affine import Ellipse, ellipse_extremal_map
from ..errors import DomainError, NumericError
from ..shift import build_shift

__all__ = [
    "SEED",
    "measured_dilatation",
    "max_measured_dilatation",
    "disc_samples",
    "bump",
    "radial_bump",
    "mobius_patch",
    "perturbed",
    "competitor",
    "competitor_dilatation_sweep",
    "ellipse_competitor_dilatation",
]

SEED = 20240917


def measured_dilatation(fn, z, h: float = 1e-5):
    """(|f_z| + |f_zbar|) / (|f_z| - |f_zbar|) from central differences of ``fn``."""
    fz, fzb = _fd.wirtinger(fn, z, h)
    a, b = np.abs(fz), np.abs(fzb)
    if np.any(a * a - b * b <= 0):
        raise NumericError("non-positive Jacobian estimate")
    K = (a + b) / (a - b)
    return K[()] if np.ndim(K) == 0 else K


def max_measured_dilatation(fn, z, h: float = 1e-5) -> float:
    try:
        return float(np.max(measured_dilatation(fn, z, h)))
    except NumericError:
        return math.inf


def disc_samples(n: int, r_max: float = 0.97, r_min: float = 0.0, seed: int = SEED):
    """Deterministic area-uniform samples in the annulus r_min <= |z| <= r_max."""
    rng = np.random.default_rng(seed)
    r = np.sqrt(rng.uniform(r_min**2, r_max**2, n))
    return r * np.exp(1j * rng.uniform(-math.pi, math.pi, n))


def bump(t):
    """(1 - t^2)^3 on |t| < 1, zero outside; C^2 with bump(0) = 1."""
    t = np.asarray(t, dtype=float)
    return np.where(t < 1.0, np.clip(1.0 - t * t, 0.0, None) ** 3, 0.0)


def radial_bump(x: float, rho: float):
    """z -> z - x * bump(|z| / rho): translation of the centre, damped to zero at |z| = rho."""
    if not 0 < rho <= 1:
        raise DomainError(f"bump radius must lie in (0, 1], got {rho!r}")

    def f(z):
        z = np.asarray(z, dtype=complex)
        return z - x * bump(np.abs(z) / rho)

    return f


def mobius_patch(x: float, sigma: float):
    """Disc automorphism of |z| < sigma that drags 0 to -x, relaxed to the identity at |z| = sigma.

    With w = z / sigma and c = (x / sigma)(1 - |w|^2) the map is
    sigma (w - c) / (1 - c w); identity outside the patch.  The patch must
    contain -x, so sigma > x.
    """
    if not x < sigma <= 1:
        raise DomainError(f"patch radius must lie in ({x}, 1], got {sigma!r}")

    def f(z):
        w = np.asarray(z, dtype=complex) / sigma
        c = (x / sigma) * np.clip(1.0 - np.abs(w) ** 2, 0.0, None)
        return sigma * (w - c) / (1.0 - c * w)

    return f


def perturbed(fn, eps: float, centre: complex = 0.35 + 0.3j, radius: float = 0.25):
    """fn composed with z -> z + eps * z * bump(|z - centre| / radius).

    The inner map is the identity near 0 and near the circle, so the
    composition keeps the normalisation of ``fn``.
    """

    def f(z):
        z = np.asarray(z, dtype=complex)
        return fn(z + eps * z * bump(np.abs(z - centre) / radius))

    return f


def competitor(x: float, family: str, param: float, tol: float = 1e-9):
    if family == "radial_bump":
        return radial_bump(x, param)
    if family == "mobius_patch":
        return mobius_patch(x, param)
    if family == "extremal":
        return build_shift(x, tol)
    if family == "perturbed_extremal":
        return perturbed(build_shift(x, tol), param)
    raise DomainError(f"unknown competitor family {family!r}")


def _sweep_samples(x: float, n: int):
    z = disc_samples(n)
    # keep clear of the singular point 0 and the segment [-x, 0] of the extremal map
    seg = np.clip(z.real, -x, 0.0)
    return z[np.abs(z - seg) > 0.02]


def competitor_dilatation_sweep(x: float, family: str, params, n_samples: int = 4000, h: float = 1e-5):
    """Largest measured dilatation of each competitor in ``family``.

    A competitor that folds over (non-positive Jacobian somewhere) reports inf.
    """
    if not 0 < x < 1:
        raise DomainError(f"displacement x must lie in (0, 1), got {x!r}")
    z = _sweep_samples(x, n_samples)
    return [max_measured_dilatation(competitor(x, family, p), z, h) for p in params]


def ellipse_competitor_dilatation(alpha: float, beta: float, eps: float, n_samples: int = 4000, h: float = 1e-6):
    """Largest measured dilatation of the ellipse swap composed with a compact bump.

    The bump is supported well inside E(alpha, beta), so boundary values agree
    with the affine extremal map.
    """
    e = Ellipse(alpha, beta)
    h0 = ellipse_extremal_map(e)
    radius = 0.4 * min(alpha, beta)
    centre = 0.2 * alpha + 0.1j * beta

    def g(z):
        z = np.asarray(z, dtype=complex)
        return h0(z + eps * (z - centre + 0.3) * bump(np.abs(z - centre) / radius))

    z = disc_samples(n_samples, r_max=0.97, seed=SEED + 1)
    z = alpha * z.real + 1j * beta * z.imag
    return max_measured_dilatation(g, z, h)
