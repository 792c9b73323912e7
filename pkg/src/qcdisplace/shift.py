"""The extremal displacement map of the unit disc.

For 0 < x < 1 the map f fixes the unit circle pointwise, sends 0 to -x and
has the smallest possible maximal dilatation.  It is assembled from conformal
pieces and one affine stretch:

    z --sqrt--> D minus i[-s, s] --phi--> annulus 1 < |w| < R
      --w - 1/w--> ellipse E1 --affine--> ellipse E2
      --inverse of w + 1/w--> annulus --phi^-1--> slit disc --square--> D

with s = sqrt(x).  The slit-disc map phi is written with the Jacobi sine of
modulus x:

    phi^-1(w) = i s sn((2K/pi) (-i log w), x),   R = exp(pi K' / (4 K)),

and phi itself is recovered through Carlson's R_F.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import _fd
from .affine import AffineMap, Ellipse
from .errors import BranchAmbiguityError, ConvergenceError, DomainError, NumericError
from .modulus import phi as grotzsch_phi
from .specfun import EllipticModulus, carlson_rf, complementary_K, complete_elliptic_K, inverse_sn, jacobi_ellipj

__all__ = [
    "SlitAnnulusMap",
    "ShiftMap",
    "BeltramiSample",
    "build_slit_annulus_map",
    "joukowski",
    "joukowski_inverse",
    "covering_p",
    "covering_p_inverse",
    "lifted_affine",
    "lifted_affine_map",
    "shift_dilatation",
    "build_shift",
    "evaluate_shift",
    "beltrami_of_shift",
    "beltrami_field",
    "displacement_bound",
]

_BOUNDARY_SLACK = 1e-12


def _as_complex(z):
    return np.asarray(z, dtype=complex)


def _unwrap(a):
    return a[()] if np.ndim(a) == 0 else a


@dataclass(frozen=True)
class SlitAnnulusMap:
    """Conformal map of D minus the slit i[-s, s] onto 1 < |w| < R.

    Normalised to commute with conjugation and with z -> -z and to be real
    positive on (0, 1].  The two prime ends at the slit centre go to w = +1
    (right side) and w = -1 (left side); the slit tips go to ±i.
    """

    s: float
    R: float
    K: float = field(repr=False)
    K_prime: float = field(repr=False)

    @property
    def k(self) -> float:
        # modulus of the Jacobi functions: k = s^2
        return self.s * self.s

    @property
    def _scale(self) -> float:
        return 2.0 * self.K / math.pi

    def _u_of(self, z):
        k = self.k
        t = -1j * z / self.s
        u0 = inverse_sn(t, k)
        u = np.where(u0.imag > 0, np.where(u0.real >= 0, 2.0 * self.K, -2.0 * self.K) - u0, u0)
        # imaginary axis beyond the slit tips sits on the principal branch cut of
        # inverse_sn; there sn(±K - iy) = ±1/dn(y, k')
        cut = (t.imag == 0) & (np.abs(t.real) > 1.0)
        if np.any(cut):
            tr = np.abs(t.real[cut])
            kp = EllipticModulus.from_k(k).k_prime
            sv = np.sqrt((1.0 - 1.0 / tr) * (1.0 + 1.0 / tr)) / kp
            y = (sv * carlson_rf(1.0 - sv * sv, 1.0 - (kp * sv) ** 2, 1.0)).real
            u = u.copy()
            u[cut] = np.sign(t.real[cut]) * self.K - 1j * y
        return u

    def __call__(self, z):
        z = _as_complex(z)
        if np.any(np.abs(z) > 1.0 + _BOUNDARY_SLACK):
            raise DomainError("slit-annulus map is defined on the closed unit disc only")
        u = self._u_of(np.atleast_1d(z))
        w = np.exp(1j * math.pi * u / (2.0 * self.K))
        if not np.all(np.isfinite(w)):
            raise ConvergenceError("slit-annulus map produced non-finite values")
        return _unwrap(w.reshape(z.shape))

    def inverse(self, w):
        w = _as_complex(w)
        if np.any(w == 0):
            raise DomainError("inverse slit map is undefined at w = 0")
        u = self._scale * (-1j * np.log(w))
        return _unwrap(1j * self.s * jacobi_ellipj(u, self.k)[0])

    def derivative(self, z):
        """phi'(z) from the Jacobi derivative sn' = cn dn."""
        z = _as_complex(z)
        u = self._u_of(np.atleast_1d(z)).reshape(z.shape)
        _, cn, dn = jacobi_ellipj(u, self.k)
        w = np.exp(1j * math.pi * u / (2.0 * self.K))
        dudz = (-1j / self.s) / (cn * dn)
        return _unwrap(w * (1j * math.pi / (2.0 * self.K)) * dudz)

    def boundary_radius(self, n: int = 64) -> float:
        """Mean of |phi| over n points of the unit circle.

        Computed through the inverse-sn route, so it is independent of the
        nome formula used for ``R``.
        """
        theta = 2.0 * math.pi * (np.arange(n) + 0.5) / n
        return float(np.mean(np.abs(self(np.exp(1j * theta)))))


def build_slit_annulus_map(s: float, tol: float = 1e-9) -> SlitAnnulusMap:
    """Build phi for the slit i[-s, s] and cross-check R against sqrt(Φ(1/s²))."""
    s = float(s)
    if not (0.0 < s < 1.0):
        raise DomainError(f"slit half-length must lie in (0, 1), got {s!r}")
    k = s * s
    kk = complete_elliptic_K(k)
    kp = complementary_K(k)
    R = math.exp(math.pi * kp / (4.0 * kk))
    m = SlitAnnulusMap(s, R, kk, kp)
    expected = math.sqrt(grotzsch_phi(1.0 / k))
    residual = max(abs(R - expected), abs(m.boundary_radius() - expected)) / expected
    if residual > tol:
        raise ConvergenceError(f"outer radius check failed (relative residual {residual:.3e})", residual)
    return m


def _sign(sign) -> int:
    if sign in ("minus", "-", -1):
        return -1
    if sign in ("plus", "+", 1):
        return 1
    raise DomainError(f"sign must be 'minus' or 'plus', got {sign!r}")


def joukowski(sign, w):
    """w - 1/w (``minus``) or w + 1/w (``plus``)."""
    sg = _sign(sign)
    w = _as_complex(w)
    if np.any(w == 0):
        raise DomainError("Joukowski map is undefined at 0")
    return _unwrap(w + sg / w)


def _joukowski_outer(sg: int, v):
    # roots of w^2 - v w + sg = 0; pick the larger without cancellation
    d = np.sqrt(v * v - 4.0 * sg)
    d = np.where((np.conj(v) * d).real >= 0, d, -d)
    big = 0.5 * (v + d)
    small = sg / big
    return big, small


def joukowski_inverse(sign, v):
    """Inverse of :func:`joukowski` on the branch with |w| >= 1.

    Raises :class:`BranchAmbiguityError` strictly inside the degenerate slit,
    where both roots have modulus 1.
    """
    sg = _sign(sign)
    v = _as_complex(v)
    big, small = _joukowski_outer(sg, v)
    clash = (np.abs(np.abs(big) - 1.0) < 1e-12) & (np.abs(big - small) > 1e-9)
    if np.any(clash):
        i = np.flatnonzero(np.atleast_1d(clash))[0]
        cands = (np.atleast_1d(big)[i], np.atleast_1d(small)[i])
        raise BranchAmbiguityError(f"{v!r} lies on the slit of the Joukowski map", cands)
    return _unwrap(big)


def lifted_affine_map(R: float) -> AffineMap:
    """x + iy -> A x + i y / A with A = (R + 1/R)/(R - 1/R), as an AffineMap."""
    if not R > 1.0:
        raise DomainError(f"R must exceed 1, got {R!r}")
    A = (R * R + 1.0) / (R * R - 1.0)
    return AffineMap(0.5 * (A + 1.0 / A), 0.5 * (A - 1.0 / A))


def lifted_affine(R: float, zeta):
    return lifted_affine_map(R)(zeta)


def _ellipses(m: SlitAnnulusMap):
    R = m.R
    return Ellipse(R - 1.0 / R, R + 1.0 / R), Ellipse(R + 1.0 / R, R - 1.0 / R)


def covering_p(index: int, m: SlitAnnulusMap, zeta):
    """Two-sheeted coverings p1: E1 -> D (branched at 0 over 0) and p2: E2 -> D (over -x)."""
    if index not in (1, 2):
        raise DomainError(f"covering index must be 1 or 2, got {index!r}")
    zeta = _as_complex(zeta)
    ell = _ellipses(m)[index - 1]
    if np.any(~ell.contains(zeta, 1e-12)):
        raise DomainError(f"point outside the closed ellipse E{index}")
    w, _ = _joukowski_outer(-1 if index == 1 else 1, zeta)
    return _unwrap(m.inverse(w) ** 2)


def covering_p_inverse(index: int, m: SlitAnnulusMap, z):
    """One sheet of the inverse covering: f1(phi(sqrt z)) or f2(phi(sqrt z)).

    The other sheet is the negative of this one.
    """
    if index not in (1, 2):
        raise DomainError(f"covering index must be 1 or 2, got {index!r}")
    z = _as_complex(z)
    return joukowski(-1 if index == 1 else 1, m(np.sqrt(z)))


def shift_dilatation(x: float) -> float:
    """K(x) = ((Φ(1/x) + 1) / (Φ(1/x) - 1))^2, the extremal dilatation.

    Written through exp(-μ(x)) = 1/Φ(1/x) so that tiny x does not overflow.
    """
    from .modulus import grotzsch_mu

    x = float(x)
    if not (0.0 < x < 1.0):
        raise DomainError(f"displacement x must lie in (0, 1), got {x!r}")
    mu = grotzsch_mu(x)
    delta = 2.0 * math.exp(-mu) / -math.expm1(-mu)
    return (1.0 + delta) ** 2


@dataclass(frozen=True)
class ShiftMap:
    """The extremal boundary-fixing map of D with f(0) = -x.

    Immutable; calling it evaluates the composed pipeline.
    """

    x: float
    R: float
    K: float
    phi_map: SlitAnnulusMap = field(repr=False)

    @property
    def k(self) -> float:
        """Modulus of the Beltrami coefficient, (K - 1)/(K + 1)."""
        return (self.K - 1.0) / (self.K + 1.0)

    @property
    def grotzsch_value(self) -> float:
        """Φ(1/x) = R^2."""
        return self.R * self.R

    @property
    def stretch(self) -> AffineMap:
        return lifted_affine_map(self.R)

    def __call__(self, z):
        return evaluate_shift(self, z)


def build_shift(x: float, tol: float = 1e-9) -> ShiftMap:
    x = float(x)
    if not (0.0 < x < 1.0):
        raise DomainError(f"displacement x must lie in (0, 1), got {x!r}")
    m = build_slit_annulus_map(math.sqrt(x), tol)
    return ShiftMap(x, m.R, shift_dilatation(x), m)


def evaluate_shift(f: ShiftMap, z, root_sign: int = 1):
    """p2(stretch(p1^-1(z))) for |z| <= 1; vectorised over ``z``.

    ``root_sign`` picks the sheet of p1^-1 (principal square root or its
    negative); the result does not depend on it.
    """
    z = _as_complex(z)
    if np.any(np.abs(z) > 1.0 + _BOUNDARY_SLACK):
        raise DomainError("the shift map is defined on the closed unit disc only")
    if root_sign not in (1, -1):
        raise DomainError(f"root_sign must be +1 or -1, got {root_sign!r}")
    zeta = joukowski(-1, f.phi_map(root_sign * np.sqrt(z)))
    A = (f.R * f.R + 1.0) / (f.R * f.R - 1.0)
    xi = A * np.real(zeta) + 1j * np.imag(zeta) / A
    w2, _ = _joukowski_outer(1, np.asarray(xi))
    out = np.asarray(f.phi_map.inverse(w2)) ** 2
    if not np.all(np.isfinite(out)):
        raise ConvergenceError("shift map evaluation produced non-finite values")
    return _unwrap(out)


@dataclass(frozen=True)
class BeltramiSample:
    z: complex
    mu: complex
    q: complex


def _continuous_sqrt(z, ref):
    r = np.sqrt(z)
    return np.where((r * np.conj(ref)).real >= 0, r, -r)


def beltrami_field(f: ShiftMap, z, h: float = 1e-5):
    """Vectorised Beltrami coefficient mu and quadratic differential q.

    mu = f_zbar / f_z by central differences; q = (g')^2 with g = p1^-1 on a
    sheet chosen continuously around each sample.
    """
    z = np.atleast_1d(_as_complex(z))
    fz, fzb = _fd.wirtinger(lambda p: evaluate_shift(f, p), z, h)
    jac = np.abs(fz) ** 2 - np.abs(fzb) ** 2
    if np.any(jac <= 0):
        raise NumericError("non-positive Jacobian estimate; step too large near a singularity")
    mu = fzb / fz
    root = np.sqrt(z)

    def sheet(p):
        return joukowski(-1, f.phi_map(_continuous_sqrt(p, root)))

    gz, _ = _fd.wirtinger(sheet, z, h)
    return mu, gz * gz


def _check_beltrami_point(f: ShiftMap, z: complex, h: float):
    if abs(z) >= 1.0 - 10 * h:
        raise DomainError("Beltrami sample must be interior to the disc")
    # distance to the segment [-x, 0]
    xr = min(max(z.real, -f.x), 0.0)
    if abs(z - xr) < 10 * h:
        raise DomainError("Beltrami sample too close to the segment [-x, 0]")


def beltrami_of_shift(f: ShiftMap, z: complex, h: float = 1e-5) -> BeltramiSample:
    z = complex(z)
    _check_beltrami_point(f, z, h)
    mu, q = beltrami_field(f, z, h)
    return BeltramiSample(z, complex(mu[0]), complex(q[0]))


def displacement_bound(K: float) -> float:
    """2 (sqrt(K) - 1): no boundary-fixing K-q.c. self-map of D moves 0 further (along (-1, 0])."""
    K = float(K)
    if not K >= 1.0:
        raise DomainError(f"dilatation must be at least 1, got {K!r}")
    return 2.0 * (math.sqrt(K) - 1.0)
