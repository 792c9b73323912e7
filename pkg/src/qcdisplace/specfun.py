"""Arithmetic-geometric mean, complete elliptic integrals and Jacobi sn.

Everything here is written against numpy and carries no hidden state beyond
the AGM tolerance, which lives in a context variable so that concurrent
callers can set it independently.
"""
from __future__ import annotations

import contextlib
import contextvars
import math
from dataclasses import dataclass

import numpy as np

from .errors import ConvergenceError, DomainError

__all__ = [
    "EllipticModulus",
    "agm",
    "agm_tolerance",
    "get_agm_rtol",
    "complete_elliptic_K",
    "complementary_K",
    "carlson_rf",
    "jacobi_ellipj_real",
    "jacobi_ellipj",
    "jacobi_sn",
    "inverse_sn",
]

_AGM_RTOL = contextvars.ContextVar("agm_rtol", default=1e-15)
_MAX_AGM_STEPS = 64


def get_agm_rtol() -> float:
    return _AGM_RTOL.get()


@contextlib.contextmanager
def agm_tolerance(rtol: float):
    """Temporarily change the relative stopping threshold of :func:`agm`."""
    if not (rtol > 0 and math.isfinite(rtol)):
        raise DomainError(f"AGM tolerance must be a positive finite number, got {rtol!r}")
    token = _AGM_RTOL.set(float(rtol))
    try:
        yield
    finally:
        _AGM_RTOL.reset(token)


@dataclass(frozen=True)
class EllipticModulus:
    """Modulus ``k`` together with its complement ``sqrt(1 - k**2)``.

    The complement is formed as ``sqrt((1-k)(1+k))`` which keeps full relative
    accuracy when ``k`` is close to 1.
    """

    k: float
    k_prime: float

    @classmethod
    def from_k(cls, k: float) -> "EllipticModulus":
        k = float(k)
        if not (0.0 <= k < 1.0):
            raise DomainError(f"elliptic modulus must satisfy 0 <= k < 1, got {k!r}")
        return cls(k, math.sqrt((1.0 - k) * (1.0 + k)))


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of ``a > 0`` and ``b >= 0``."""
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise DomainError(f"agm needs finite arguments, got ({a!r}, {b!r})")
    if a < 0 or b < 0 or (a == 0 and b == 0):
        raise DomainError(f"agm needs a > 0 and b >= 0, got ({a!r}, {b!r})")
    if a == 0 or b == 0:
        return 0.0
    rtol = _AGM_RTOL.get()
    for _ in range(_MAX_AGM_STEPS):
        if abs(a - b) <= rtol * a:
            return 0.5 * (a + b)
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    # quadratic convergence makes this unreachable for sane tolerances
    raise ConvergenceError("agm did not converge", residual=abs(a - b) / a)


def complete_elliptic_K(k: float) -> float:
    """Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k'))."""
    m = EllipticModulus.from_k(k)
    return math.pi / (2.0 * agm(1.0, m.k_prime))


def complementary_K(k: float) -> float:
    """K'(k) = K(sqrt(1 - k^2)) computed as pi / (2 agm(1, k)).

    This avoids forming ``sqrt(1 - k**2)`` and so stays accurate for tiny k.
    """
    k = float(k)
    if not (0.0 < k <= 1.0):
        raise DomainError(f"complementary_K needs 0 < k <= 1, got {k!r}")
    return math.pi / (2.0 * agm(1.0, k))


def carlson_rf(x, y, z, rtol: float = 1e-16, max_iter: int = 100):
    """Carlson's symmetric integral R_F(x, y, z) for real or complex arrays.

    Uses the duplication theorem with principal square roots; valid whenever
    the arguments avoid the closed negative real axis (at most one may be 0).
    """
    x, y, z = np.broadcast_arrays(*(np.asarray(v, dtype=complex) for v in (x, y, z)))
    x = x.copy()
    y = y.copy()
    z = z.copy()
    a0 = (x + y + z) / 3.0
    q = (3.0 * rtol) ** (-1.0 / 6.0) * np.maximum.reduce([np.abs(a0 - x), np.abs(a0 - y), np.abs(a0 - z)])
    a = a0.copy()
    for _ in range(max_iter):
        if np.all(q < np.abs(a)):
            break
        sx, sy, sz = np.sqrt(x), np.sqrt(y), np.sqrt(z)
        lam = sx * sy + sy * sz + sz * sx
        x = (x + lam) / 4.0
        y = (y + lam) / 4.0
        z = (z + lam) / 4.0
        a = (a + lam) / 4.0
        q = q / 4.0
    else:
        raise ConvergenceError("carlson_rf did not converge")
    xs = (a - x) / a
    ys = (a - y) / a
    zs = -(xs + ys)
    e2 = xs * ys - zs * zs
    e3 = xs * ys * zs
    poly = 1.0 - e2 / 10.0 + e3 / 14.0 + e2 * e2 / 24.0 - 3.0 * e2 * e3 / 44.0
    return poly / np.sqrt(a)


def _landen_chain(k: float):
    """Descending Landen / AGM sequence (a_n, c_n) for modulus k."""
    m = EllipticModulus.from_k(k)
    a, b, c = 1.0, m.k_prime, m.k
    aa, cc = [a], [c]
    for _ in range(_MAX_AGM_STEPS):
        if abs(c) <= 1e-16 * a:
            break
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        aa.append(a)
        cc.append(c)
    return aa, cc


def jacobi_ellipj_real(u, k: float):
    """sn, cn, dn of real ``u`` for modulus ``k`` via the descending Landen chain."""
    u = np.asarray(u, dtype=float)
    if k == 0.0:
        return np.sin(u), np.cos(u), np.ones_like(u)
    kk = complete_elliptic_K(k)
    # reduce to [-2K, 2K) so that the 2^N a_N u amplification stays harmless
    u = np.mod(u + 2.0 * kk, 4.0 * kk) - 2.0 * kk
    aa, cc = _landen_chain(k)
    n = len(aa) - 1
    phase = (2.0**n) * aa[n] * u
    for j in range(n, 0, -1):
        phase = 0.5 * (phase + np.arcsin(np.clip(cc[j] / aa[j] * np.sin(phase), -1.0, 1.0)))
    sn = np.sin(phase)
    cn = np.cos(phase)
    dn = np.sqrt(1.0 - (k * sn) ** 2)
    return sn, cn, dn


def jacobi_ellipj(u, k: float):
    """sn, cn, dn of complex ``u`` using the imaginary-argument addition formulas."""
    if not (0.0 < k < 1.0):
        raise DomainError(f"jacobi functions need 0 < k < 1, got {k!r}")
    u = np.asarray(u, dtype=complex)
    if not np.all(np.isfinite(u)):
        raise DomainError("jacobi functions need finite arguments")
    kp = EllipticModulus.from_k(k).k_prime
    s, c, d = jacobi_ellipj_real(u.real, k)
    s1, c1, d1 = jacobi_ellipj_real(u.imag, kp)
    den = c1 * c1 + (k * s * s1) ** 2
    with np.errstate(divide="ignore", invalid="ignore"):
        sn = (s * d1 + 1j * c * d * s1 * c1) / den
        cn = (c * c1 - 1j * s * d * s1 * d1) / den
        dn = (d * c1 * d1 - 1j * k * k * s * c * s1) / den
    return sn, cn, dn


def jacobi_sn(u, k: float):
    """Jacobi elliptic sine sn(u, k) for complex ``u`` and 0 < k < 1."""
    sn = jacobi_ellipj(u, k)[0]
    return sn[()] if np.ndim(sn) == 0 else sn


def inverse_sn(t, k: float):
    """Principal inverse of sn: ``t * R_F(1 - t^2, 1 - k^2 t^2, 1)``.

    The result lies in the rectangle ``|Re u| <= K, |Im u| < K'``; the branch
    cuts are the real half-lines ``|t| >= 1``.
    """
    t = np.asarray(t, dtype=complex)
    return t * carlson_rf(1.0 - t * t, 1.0 - (k * t) ** 2, 1.0)
