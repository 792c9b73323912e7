"""Independent numerical checks: a Laplace grid solver, finite-difference
dilatation measurements and a discrete minimax search."""
from .dilatation import (
    SEED,
    competitor_dilatation_sweep,
    disc_samples,
    ellipse_competitor_dilatation,
    max_measured_dilatation,
    measured_dilatation,
)
from .grid import Annulus, GridField, GrotzschRing, SlitDisc, laplace_quad_module, laplace_ring_module, laplace_slit_map
from .minimax import DiscreteMinimum, TriangulatedDiscMap, disc_mesh, discrete_min_dilatation

__all__ = [
    "SEED",
    "GridField",
    "Annulus",
    "GrotzschRing",
    "SlitDisc",
    "laplace_ring_module",
    "laplace_quad_module",
    "laplace_slit_map",
    "measured_dilatation",
    "max_measured_dilatation",
    "disc_samples",
    "competitor_dilatation_sweep",
    "ellipse_competitor_dilatation",
    "TriangulatedDiscMap",
    "DiscreteMinimum",
    "disc_mesh",
    "discrete_min_dilatation",
]
