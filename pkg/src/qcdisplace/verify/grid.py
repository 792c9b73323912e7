"""Finite-volume Laplace solver on polar lattices, used as an independent
oracle for ring and quadrilateral modules and for the slit-disc map.

The unknowns live on a tensor lattice (r_j, theta_k) with a single centre
node.  Both coordinate arrays may be non-uniform so that slit tips and arc
endpoints fall exactly on nodes.  The five-point stencil comes from a
finite-volume balance, which makes the system symmetric; the Dirichlet energy
u^T L u of the discrete solution is then the flux used for module estimates.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
import scipy.sparse as sp
import scipy.sparse.linalg as spla

from ..errors import ConvergenceError, DomainError

__all__ = [
    "GridField",
    "Annulus",
    "GrotzschRing",
    "SlitDisc",
    "polar_laplace",
    "laplace_ring_module",
    "laplace_quad_module",
    "laplace_slit_map",
]


@dataclass(frozen=True)
class GridField:
    """Values sampled on a rectangular (here: polar) lattice.

    ``origin``/``spacing`` describe the nominal uniform layout; the exact node
    coordinates are kept in ``axis0``/``axis1`` because the solver refines
    them piecewise.
    """

    nx: int
    ny: int
    origin: tuple
    spacing: tuple
    values: np.ndarray
    axis0: np.ndarray
    axis1: np.ndarray

    def __post_init__(self):
        if self.nx <= 0 or self.ny <= 0:
            raise DomainError("grid dimensions must be positive")
        if any(not (h > 0) for h in self.spacing):
            raise DomainError("grid spacing must be positive")
        if self.values.shape != (self.nx, self.ny):
            raise DomainError("grid values do not match the lattice dimensions")
        if not np.all(np.isfinite(self.values)):
            raise DomainError("grid values must be finite")


@dataclass(frozen=True)
class Annulus:
    r_in: float
    r_out: float


@dataclass(frozen=True)
class GrotzschRing:
    """Unit disc minus the segment [0, r]."""

    r: float


@dataclass(frozen=True)
class SlitDisc:
    """Unit disc minus the segment i[-s, s]."""

    s: float


def _piecewise(breaks, counts):
    pieces = [np.linspace(a, b, n + 1)[:-1] for a, b, n in zip(breaks[:-1], breaks[1:], counts)]
    return np.concatenate(pieces + [np.array([breaks[-1]])])


def _split_counts(breaks, total):
    lengths = np.diff(breaks)
    counts = np.maximum(1, np.round(total * lengths / lengths.sum()).astype(int))
    return counts


def polar_laplace(r, theta, fixed, values):
    """Solve the discrete Laplace equation on a polar lattice.

    ``r`` starts at 0 (centre node) and ends at the outer radius; ``theta``
    holds the angular nodes in [0, 2 pi), periodic.  ``fixed`` and ``values``
    are arrays of shape (len(r), len(theta)); row 0 refers to the centre (only
    column 0 is read).  Returns (u, energy) with u of the same shape.
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    nr, nt = len(r), len(theta)
    if r[0] != 0.0:
        raise DomainError("polar lattice must start at the centre")
    dth_fwd = np.diff(np.append(theta, theta[0] + 2 * math.pi))
    wth = 0.5 * (dth_fwd + np.roll(dth_fwd, 1))
    dr = np.diff(r)
    rw = np.empty(nr)
    rw[1:-1] = 0.5 * (dr[:-1] + dr[1:])
    rw[-1] = 0.5 * dr[-1]
    n_nodes = 1 + (nr - 1) * nt

    def idx(j, k):
        return 1 + (j - 1) * nt + k

    ks = np.arange(nt)
    rows, cols, cond = [], [], []
    for j in range(1, nr):
        rows.append(idx(j, ks))
        cols.append(idx(j, (ks + 1) % nt))
        cond.append(rw[j] / (r[j] * dth_fwd))
        rmid = 0.5 * (r[j - 1] + r[j])
        rows.append(np.zeros(nt, dtype=int) if j == 1 else idx(j - 1, ks))
        cols.append(idx(j, ks))
        cond.append(rmid * wth / dr[j - 1])
    rows = np.concatenate(rows)
    cols = np.concatenate(cols)
    cond = np.concatenate(cond)
    W = sp.coo_matrix((cond, (rows, cols)), shape=(n_nodes, n_nodes))
    W = (W + W.T).tocsr()
    L = (sp.diags(np.asarray(W.sum(axis=1)).ravel()) - W).tocsr()

    fixed = np.asarray(fixed, dtype=bool)
    values = np.asarray(values, dtype=float)
    fix_flat = np.concatenate([[fixed[0, 0]], fixed[1:].ravel()])
    val_flat = np.concatenate([[values[0, 0]], values[1:].ravel()])
    free = ~fix_flat
    u = np.where(fix_flat, val_flat, 0.0)
    A = L[free][:, free].tocsc()
    b = -(L[free][:, fix_flat] @ val_flat[fix_flat])
    sol = spla.spsolve(A, b)
    res = np.linalg.norm(A @ sol - b) / max(np.linalg.norm(b), 1e-300)
    if not np.all(np.isfinite(sol)) or res > 1e-8:
        raise ConvergenceError("sparse Laplace solve failed", res)
    u[free] = sol
    energy = float(u @ (L @ u))
    grid = np.empty((nr, nt))
    grid[0] = u[0]
    grid[1:] = u[1:].reshape(nr - 1, nt)
    return grid, energy


def _ring_lattice(domain, n):
    """Radial/angular nodes and Dirichlet data for a slit-type ring domain."""
    nt = 4 * max(1, int(math.ceil(n / 4)))
    theta = 2 * math.pi * np.arange(nt) / nt
    if isinstance(domain, GrotzschRing):
        r0 = domain.r
        if not (0 < r0 < 1):
            raise DomainError(f"Grötzsch ring needs 0 < r < 1, got {r0!r}")
        slit_cols = [0]
    elif isinstance(domain, SlitDisc):
        r0 = domain.s
        if not (0 < r0 < 1):
            raise DomainError(f"slit disc needs 0 < s < 1, got {r0!r}")
        slit_cols = [nt // 4, 3 * nt // 4]
    else:
        raise DomainError(f"unsupported domain {domain!r}")
    counts = _split_counts(np.array([0.0, r0, 1.0]), n)
    r = _piecewise([0.0, r0, 1.0], counts)
    fixed = np.zeros((len(r), nt), dtype=bool)
    values = np.zeros((len(r), nt))
    fixed[0, 0] = True
    j_tip = counts[0]
    for c in slit_cols:
        fixed[: j_tip + 1, c] = True
    fixed[-1, :] = True
    values[-1, :] = 1.0
    return r, theta, fixed, values


def _solve_ring(domain, n):
    if isinstance(domain, Annulus):
        if not (0 < domain.r_in < domain.r_out):
            raise DomainError("annulus needs 0 < r_in < r_out")
        # log-polar coordinates are conformal: a plain rectangle with the
        # standard five-point stencil
        nr = max(2, n)
        nt = max(4, n)
        rho = np.linspace(math.log(domain.r_in), math.log(domain.r_out), nr + 1)
        hr = rho[1] - rho[0]
        ht = 2 * math.pi / nt
        main = np.full(nr - 1, 2.0 * ht / hr)
        off = np.full(nr - 2, -ht / hr)
        T = sp.diags([off, main, off], [-1, 0, 1], format="csc")
        b = np.zeros(nr - 1)
        b[-1] = ht / hr
        line = spla.spsolve(T, b) if nr > 2 else np.array([])
        u_line = np.concatenate([[0.0], np.atleast_1d(line), [1.0]])
        energy = nt * (ht / hr) * float(np.sum(np.diff(u_line) ** 2))
        values = np.tile(u_line[:, None], (1, nt))
        field = GridField(nr + 1, nt, (rho[0], 0.0), (hr, ht), values, rho, ht * np.arange(nt))
        return field, energy
    r, theta, fixed, values = _ring_lattice(domain, n)
    u, energy = polar_laplace(r, theta, fixed, values)
    field = GridField(len(r), len(theta), (0.0, 0.0), (1.0 / n, theta[1]), u, r, theta)
    return field, energy


def laplace_ring_module(domain, n: int = 512, extrapolate: bool = True, return_field: bool = False):
    """Module of a ring domain from the discrete Dirichlet energy (module = 1/energy).

    With ``extrapolate`` the estimates at n and n/2 are combined by
    Richardson extrapolation for the first-order error caused by the slit
    tips.
    """
    if n < 32:
        raise DomainError(f"grid size must be at least 32, got {n!r}")
    field, energy = _solve_ring(domain, n)
    value = 1.0 / energy
    if extrapolate and not isinstance(domain, Annulus):
        _, coarse = _solve_ring(domain, n // 2)
        value = 2.0 * value - 1.0 / coarse
    return (value, field) if return_field else value


def _quad_lattice(lam, n):
    # Cayley map H -> D: 0 -> -1, 1 -> -i, lam -> (lam-i)/(lam+i), inf -> 1
    c_lam = (lam - 1j) / (lam + 1j)
    a_lam = math.atan2(c_lam.imag, c_lam.real) % (2 * math.pi)
    breaks = np.array([0.0, math.pi, 1.5 * math.pi, a_lam, 2 * math.pi])
    counts = _split_counts(breaks, 4 * max(1, int(math.ceil(n / 4))))
    theta = _piecewise(list(breaks), counts)[:-1]
    r = np.linspace(0.0, 1.0, n + 1)
    fixed = np.zeros((len(r), len(theta)), dtype=bool)
    values = np.zeros_like(fixed, dtype=float)
    start = np.concatenate([[0], np.cumsum(counts)])
    # arc (-inf, 0] -> angles [0, pi]: potential 0; arc [1, lam] -> [3pi/2, a_lam]: potential 1
    fixed[-1, start[0] : start[1] + 1] = True
    fixed[-1, start[2] : start[3] + 1] = True
    values[-1, start[2] : start[3] + 1] = 1.0
    return r, theta, fixed, values


def laplace_quad_module(lam: float, n: int = 512, extrapolate: bool = True) -> float:
    """Module of the quadrilateral (H; 0, 1, lam, inf) by a mixed boundary problem on D.

    Potential 0 on the image of (-inf, 0], 1 on the image of [1, lam],
    insulated elsewhere; the module is 1/energy.
    """
    if not lam > 1:
        raise DomainError(f"cross-ratio parameter must exceed 1, got {lam!r}")
    if n < 32:
        raise DomainError(f"grid size must be at least 32, got {n!r}")

    def once(m):
        _, energy = polar_laplace(*_quad_lattice(lam, m))
        return 1.0 / energy

    value = once(n)
    if extrapolate:
        value = 2.0 * value - once(n // 2)
    return value


def _slit_map_once(s, z, n):
    module, field = laplace_ring_module(SlitDisc(s), n, extrapolate=False, return_field=True)
    log_R = 2.0 * math.pi * module
    r, theta, u = field.axis0, field.axis1, field.values * log_R
    # Cauchy-Riemann in polar form: d(arg phi)/d theta = r d(log|phi|)/dr
    dudr = np.gradient(u, r, axis=0)
    integrand = r[:, None] * dudr
    th_ext = np.append(theta, 2 * math.pi)
    integ_ext = np.concatenate([integrand, integrand[:, :1]], axis=1)
    u_ext = np.concatenate([u, u[:, :1]], axis=1)
    arg = np.concatenate(
        [np.zeros((len(r), 1)), np.cumsum(0.5 * (integ_ext[:, 1:] + integ_ext[:, :-1]) * np.diff(th_ext), axis=1)],
        axis=1,
    )
    rz, tz = abs(z), math.atan2(z.imag, z.real) % (2 * math.pi)
    j = min(max(np.searchsorted(r, rz) - 1, 0), len(r) - 2)
    k = min(max(np.searchsorted(th_ext, tz) - 1, 0), len(th_ext) - 2)
    a = (rz - r[j]) / (r[j + 1] - r[j])
    b = (tz - th_ext[k]) / (th_ext[k + 1] - th_ext[k])

    def bilinear(g):
        return (1 - a) * (1 - b) * g[j, k] + a * (1 - b) * g[j + 1, k] + (1 - a) * b * g[j, k + 1] + a * b * g[j + 1, k + 1]

    return complex(math.exp(bilinear(u_ext)) * np.exp(1j * bilinear(arg)))


def laplace_slit_map(s: float, z: complex, n: int = 512, extrapolate: bool = True) -> complex:
    """Grid estimate of phi(z) for the slit disc D minus i[-s, s].

    log|phi| is the harmonic measure of the outer circle scaled by log R; the
    argument comes from integrating the harmonic conjugate along circles
    starting at the positive real axis, where phi is real.
    """
    z = complex(z)
    if not abs(z) < 1:
        raise DomainError("sample point must lie inside the unit disc")
    fine = _slit_map_once(s, z, n)
    if not extrapolate:
        return fine
    coarse = _slit_map_once(s, z, n // 2)
    return 2.0 * fine - coarse
