"""Desk-scale version of the displacement problem: piecewise-linear maps of a
triangulated disc, boundary vertices fixed, centre vertex sent to -x, and the
largest per-triangle affine dilatation minimised over the interior vertices.

The max is replaced by a log-sum-exp surrogate whose temperature is lowered
in stages; each stage is an L-BFGS run with the analytic gradient.  Steps that
fold a triangle get a large constant objective, which the line search rejects.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import minimize
from scipy.spatial import Delaunay
from scipy.special import logsumexp

from ..errors import DomainError

__all__ = ["TriangulatedDiscMap", "DiscreteMinimum", "disc_mesh", "discrete_min_dilatation"]

DEFAULT_REFINEMENT = 12
_BETAS = (20.0, 50.0, 100.0, 200.0, 500.0, 1000.0, 3000.0, 10000.0)
_FOLDED = 1e6


def disc_mesh(refinement: int):
    """Concentric rings of 6j vertices at radius j/refinement, Delaunay-triangulated.

    Returns (vertices, triangles) with every triangle counter-clockwise and
    vertex 0 at the origin.
    """
    if refinement < 1:
        raise DomainError(f"mesh refinement must be a positive integer, got {refinement!r}")
    pts = [np.zeros(1, dtype=complex)]
    for j in range(1, refinement + 1):
        n = 6 * j
        pts.append(j / refinement * np.exp(2j * math.pi * np.arange(n) / n))
    pts = np.concatenate(pts)
    tri = Delaunay(np.column_stack([pts.real, pts.imag])).simplices.copy()
    a, b, c = (pts[tri[:, i]] for i in range(3))
    flip = (np.conj(b - a) * (c - a)).imag < 0
    tri[flip] = tri[flip][:, [0, 2, 1]]
    return pts, tri


def _derivative_weights(pts, tri):
    # f(z) = a z + b conj(z) + c on each triangle; a, b are linear in the images
    z1 = pts[tri[:, 1]] - pts[tri[:, 0]]
    z2 = pts[tri[:, 2]] - pts[tri[:, 0]]
    det = z1 * np.conj(z2) - np.conj(z1) * z2
    A = np.stack([(np.conj(z1) - np.conj(z2)) / det, np.conj(z2) / det, -np.conj(z1) / det], axis=1)
    B = np.stack([(z2 - z1) / det, -z2 / det, z1 / det], axis=1)
    return A, B


@dataclass(frozen=True)
class TriangulatedDiscMap:
    vertices: np.ndarray
    images: np.ndarray
    triangles: np.ndarray

    def affine_parts(self):
        A, B = _derivative_weights(self.vertices, self.triangles)
        w = self.images[self.triangles]
        return (A * w).sum(axis=1), (B * w).sum(axis=1)

    def dilatations(self):
        a, b = self.affine_parts()
        aa, bb = np.abs(a), np.abs(b)
        return np.where(bb < aa, (aa + bb) / np.where(bb < aa, aa - bb, 1.0), np.inf)

    def boundary_mask(self):
        return np.abs(np.abs(self.vertices) - 1.0) < 1e-12

    def is_valid(self) -> bool:
        def oriented(p):
            a, b, c = (p[self.triangles[:, i]] for i in range(3))
            return bool(np.all((np.conj(b - a) * (c - a)).imag > 0))

        fixed = np.allclose(self.images[self.boundary_mask()], self.vertices[self.boundary_mask()], atol=0)
        return fixed and oriented(self.vertices) and oriented(self.images)


@dataclass(frozen=True)
class DiscreteMinimum:
    value: float
    converged: bool
    mapping: TriangulatedDiscMap


def _initial_images(pts, x):
    # disc automorphism moving 0 to -x, relaxed to the identity at the circle
    c = x * (1.0 - np.abs(pts) ** 2)
    return (pts - c) / (1.0 - c * pts)


def discrete_min_dilatation(x: float, mesh_refinement: int = DEFAULT_REFINEMENT, full_output: bool = False,
                            max_iter: int = 5000):
    """Smallest max-triangle dilatation found for the discretised displacement problem.

    With ``full_output`` a :class:`DiscreteMinimum` is returned; its
    ``converged`` flag is False when some stage hit the iteration budget, in
    which case ``value`` is the best value found.
    """
    x = float(x)
    if not 0.0 <= x < 1.0:
        raise DomainError(f"displacement x must lie in [0, 1), got {x!r}")
    pts, tri = disc_mesh(int(mesh_refinement))
    A, B = _derivative_weights(pts, tri)
    boundary = np.abs(np.abs(pts) - 1.0) < 1e-12
    free = ~boundary
    free[0] = False
    fi = np.flatnonzero(free)
    base = _initial_images(pts, x)
    base[0] = -x

    def images(v):
        w = base.copy()
        w[fi] = v[: len(fi)] + 1j * v[len(fi):]
        return w

    def parts(w):
        wt = w[tri]
        return (A * wt).sum(axis=1), (B * wt).sum(axis=1)

    def surrogate(v, beta):
        a, b = parts(images(v))
        aa, bb = np.abs(a), np.abs(b)
        if np.any(bb >= aa):
            return _FOLDED, np.zeros_like(v)
        K = (aa + bb) / (aa - bb)
        L = logsumexp(beta * K) / beta
        p = np.exp(beta * (K - L))
        dK_da = -2.0 * bb / (aa - bb) ** 2
        dK_db = 2.0 * aa / (aa - bb) ** 2
        ua = np.conj(a) / aa
        ub = np.conj(b) / np.where(bb > 0, bb, 1.0)
        g = (p * dK_da * ua)[:, None] * A + (p * dK_db * ub)[:, None] * B
        G = np.zeros(len(pts), dtype=complex)
        np.add.at(G, tri, g)
        return L, np.concatenate([G.real[fi], -G.imag[fi]])

    v = np.concatenate([base[fi].real, base[fi].imag])
    converged = True
    if x > 0:
        for beta in _BETAS:
            res = minimize(surrogate, v, args=(beta,), jac=True, method="L-BFGS-B",
                           options={"maxiter": max_iter, "gtol": 1e-12, "ftol": 1e-15})
            if res.fun < _FOLDED:
                v = res.x
            converged = converged and res.nit < max_iter
    mapping = TriangulatedDiscMap(pts, images(v), tri)
    value = float(np.max(mapping.dilatations()))
    if full_output:
        return DiscreteMinimum(value, converged, mapping)
    return value
