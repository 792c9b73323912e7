"""Built-in numerical checks run by ``qcdisplace verify``.

Each check returns a row {"check", "passed", "value"} where ``value`` is the
quantity compared against the threshold (a residual, a ratio or a count of
violations).
"""
from __future__ import annotations

import math

import numpy as np

from .metrics import disc_automorphism, gehring_h, hyperbolic_distance, kra_distance
from .modulus import grotzsch_mu, phi
from .shift import beltrami_field, build_shift, evaluate_shift, shift_dilatation
from .verify.dilatation import SEED, disc_samples

__all__ = ["run_suite", "SUITES"]


def _row(name, value, passed):
    return {"check": name, "passed": bool(passed), "value": float(value)}


def modulus_checks(cfg):
    from .verify.grid import GrotzschRing, laplace_ring_module

    R = np.logspace(1e-6, 3, 1000)
    p = np.array([phi(r) for r in R])
    bad = int(np.sum(~((R < p) & (p < 4 * R))))
    rows = [_row("grotzsch_bounds", bad, bad == 0)]

    deficits = [4 * r - phi(r) for r in (10.0, 100.0, 1000.0)]
    mono = deficits[0] > deficits[1] > deficits[2] > 0
    rows.append(_row("grotzsch_asymptote", abs(phi(1000.0) - 4000.0), mono and deficits[2] < 0.01))

    rng = np.random.default_rng(SEED)
    worst = 0.0
    for a in rng.uniform(0.01, 0.99, 100):
        lhs = phi(0.5 * (a + 1.0 / a))
        rhs = math.sqrt(phi(1.0 / (a * a)))
        worst = max(worst, abs(lhs - rhs) / rhs)
    rows.append(_row("functional_equation", worst, worst < 1e-10))

    m = laplace_ring_module(GrotzschRing(0.5), n=cfg.grid_n)
    rel = abs(m - grotzsch_mu(0.5) / (2 * math.pi)) / (grotzsch_mu(0.5) / (2 * math.pi))
    rows.append(_row("laplace_grotzsch_ring", rel, rel < 5e-3))
    return rows


def shift_checks(cfg):
    rows = []
    worst = 0.0
    for x in (0.1, 0.25, 0.5):
        f = build_shift(x, cfg.tolerance)
        worst = max(worst, abs(f.phi_map.boundary_radius() - math.sqrt(phi(1.0 / x))))
    rows.append(_row("outer_radius", worst, worst < 1e-9))

    f = build_shift(0.25, cfg.tolerance)
    rows.append(_row("centre_image", abs(f(0.0) + 0.25), abs(f(0.0) + 0.25) < 1e-8))
    circle = np.exp(2j * math.pi * np.arange(360) / 360)
    err = float(np.max(np.abs(f(circle) - circle)))
    rows.append(_row("boundary_fixed", err, err < 1e-6))

    z = disc_samples(200, r_max=0.95)
    err = float(np.max(np.abs(f(np.conj(z)) - np.conj(f(z)))))
    rows.append(_row("conjugation_symmetry", err, err < 1e-6))
    err = float(np.max(np.abs(evaluate_shift(f, z, 1) - evaluate_shift(f, z, -1))))
    rows.append(_row("branch_independence", err, err < 1e-10))

    seg = np.clip(z.real, -f.x, 0.0)
    zz = z[np.abs(z - seg) > 0.02][:50]
    mu, q = beltrami_field(f, zz, cfg.fd_step)
    err = float(np.max(np.abs(np.abs(mu) - f.k)))
    rows.append(_row("beltrami_modulus", err, err < 1e-3))
    err = float(np.max(np.abs(mu * q / np.abs(q) - f.k)))
    rows.append(_row("teichmuller_form", err, err < 1e-3))
    return rows


def metrics_checks(cfg):
    rows = []
    worst = 0.0
    for x in (0.1, 0.25, 0.5):
        worst = max(worst, abs(math.log(shift_dilatation(x)) - 2 * hyperbolic_distance(0, 1 / phi(1 / x))))
    rows.append(_row("log_dilatation_identity", worst, worst < 1e-10))

    rng = np.random.default_rng(SEED)
    pts = 0.9 * np.sqrt(rng.uniform(0, 1, (50, 3))) * np.exp(2j * math.pi * rng.uniform(0, 1, (50, 3)))
    worst = 0.0
    for a, b, c in pts:
        fwd, _ = disc_automorphism(c, 0.3 * b)
        worst = max(worst, abs(kra_distance(a, b) - kra_distance(fwd(a), fwd(b))))
    rows.append(_row("kra_mobius_invariance", worst, worst < 1e-12))

    worst = 0.0
    for x in (0.05, 0.25, 0.5, 0.75, 0.9):
        worst = max(worst, abs(gehring_h(shift_dilatation(x)) - hyperbolic_distance(0, x)))
    rows.append(_row("gehring_round_trip", worst, worst < 1e-8))
    return rows


SUITES = {"modulus": modulus_checks, "shift": shift_checks, "metrics": metrics_checks}


def run_suite(name: str, cfg):
    names = list(SUITES) if name == "all" else [name]
    rows = []
    for n in names:
        rows.extend(SUITES[n](cfg))
    return rows
