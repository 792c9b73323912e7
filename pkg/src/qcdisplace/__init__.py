"""Extremal quasiconformal displacement of the unit disc.

The core object is :class:`ShiftMap`: the boundary-fixing self-map of the
disc that moves 0 to -x with the least possible dilatation K(x).  Around it
sit the Grötzsch modulus function, the affine extremal problems, and the
hyperbolic/Kra/Gehring quantities on the disc.
"""
from .affine import AffineMap, Ellipse, RectanglePair, affine_dilatation, ellipse_extremal_map, rect_extremal_map
from .errors import BranchAmbiguityError, ConvergenceError, DomainError, NumericError
from .metrics import DiscPointPair, gehring_h, hyperbolic_distance, kra_distance, pseudo_hyperbolic, shift_between
from .modulus import QuadModule, RingModule, annulus_module, grotzsch_mu, phi, quad_module_from_crossratio
from .shift import (
    BeltramiSample,
    ShiftMap,
    SlitAnnulusMap,
    beltrami_of_shift,
    build_shift,
    build_slit_annulus_map,
    covering_p,
    displacement_bound,
    evaluate_shift,
    joukowski,
    joukowski_inverse,
    lifted_affine,
    shift_dilatation,
)
from .specfun import EllipticModulus, agm, agm_tolerance, complete_elliptic_K, jacobi_sn

__version__ = "0.1.0"

__all__ = [
    "AffineMap", "Ellipse", "RectanglePair", "affine_dilatation", "ellipse_extremal_map", "rect_extremal_map",
    "DomainError", "NumericError", "ConvergenceError", "BranchAmbiguityError",
    "DiscPointPair", "pseudo_hyperbolic", "hyperbolic_distance", "kra_distance", "shift_between", "gehring_h",
    "RingModule", "QuadModule", "grotzsch_mu", "phi", "annulus_module", "quad_module_from_crossratio",
    "SlitAnnulusMap", "ShiftMap", "BeltramiSample", "build_slit_annulus_map", "joukowski", "joukowski_inverse",
    "covering_p", "lifted_affine", "shift_dilatation", "build_shift", "evaluate_shift", "beltrami_of_shift",
    "displacement_bound",
    "EllipticModulus", "agm", "agm_tolerance", "complete_elliptic_K", "jacobi_sn",
]
