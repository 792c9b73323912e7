"""Real-linear maps z -> a z + b conj(z) and the two affine extremal problems:
side-preserving rectangle stretch, and the axis swap between ellipses.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DomainError

__all__ = [
    "AffineMap",
    "Ellipse",
    "RectanglePair",
    "affine_dilatation",
    "rect_extremal_map",
    "ellipse_extremal_map",
]


@dataclass(frozen=True)
class AffineMap:
    """z -> a*z + b*conj(z); orientation preserving when |b| < |a|."""

    a: complex
    b: complex = 0j

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        if not abs(self.b) < abs(self.a):
            raise DomainError(f"affine map needs |b| < |a|, got a={self.a!r}, b={self.b!r}")

    def __call__(self, z):
        z = np.asarray(z, dtype=complex)
        out = self.a * z + self.b * np.conj(z)
        return out[()] if out.ndim == 0 else out

    @property
    def beltrami(self) -> complex:
        return self.b / self.a

    def inverse(self) -> "AffineMap":
        det = abs(self.a) ** 2 - abs(self.b) ** 2
        return AffineMap(np.conj(self.a) / det, -self.b / det)


@dataclass(frozen=True)
class Ellipse:
    """Centred ellipse with horizontal semi-axis ``alpha`` and vertical ``beta``."""

    alpha: float
    beta: float

    def __post_init__(self):
        if not (self.alpha > 0 and self.beta > 0):
            raise DomainError(f"ellipse semi-axes must be positive, got ({self.alpha!r}, {self.beta!r})")

    def boundary(self, theta):
        theta = np.asarray(theta, dtype=float)
        return self.alpha * np.cos(theta) + 1j * self.beta * np.sin(theta)

    def level(self, z):
        """(x/alpha)^2 + (y/beta)^2; 1 on the boundary."""
        z = np.asarray(z, dtype=complex)
        return (z.real / self.alpha) ** 2 + (z.imag / self.beta) ** 2

    def contains(self, z, tol: float = 0.0):
        return self.level(z) <= 1.0 + tol


@dataclass(frozen=True)
class RectanglePair:
    """Source rectangle [0, a1] x [0, 1] and target [0, a2] x [0, 1]."""

    a1: float
    a2: float

    def __post_init__(self):
        if not (self.a1 > 0 and self.a2 > 0):
            raise DomainError(f"rectangle modules must be positive, got ({self.a1!r}, {self.a2!r})")


def affine_dilatation(m: AffineMap) -> float:
    a, b = abs(m.a), abs(m.b)
    if not b < a:
        raise DomainError("affine map is not orientation preserving")
    return (a + b) / (a - b)


def rect_extremal_map(p: RectanglePair) -> AffineMap:
    """The horizontal stretch by a2/a1, written in z, conj(z) form."""
    ratio = p.a2 / p.a1
    return AffineMap(0.5 * (1.0 + ratio), 0.5 * (ratio - 1.0))


def ellipse_extremal_map(e: Ellipse) -> AffineMap:
    """x + iy -> (β/α) x + i (α/β) y, sending E(α, β) onto E(β, α)."""
    s = e.beta / e.alpha
    return AffineMap(0.5 * (s + 1.0 / s), 0.5 * (s - 1.0 / s))
