import math

import numpy as np
import pytest

from qcdisplace.errors import DomainError, NumericError
from qcdisplace.modulus import grotzsch_mu, quad_module_from_crossratio
from qcdisplace.shift import build_shift, build_slit_annulus_map, shift_dilatation
from qcdisplace.verify import (
    Annulus,
    GridField,
    GrotzschRing,
    SlitDisc,
    competitor_dilatation_sweep,
    disc_mesh,
    disc_samples,
    discrete_min_dilatation,
    laplace_quad_module,
    laplace_ring_module,
    max_measured_dilatation,
    measured_dilatation,
)
from qcdisplace.verify.dilatation import mobius_patch, radial_bump

K_QUARTER = 1.2896668993309636


def _field(values, spacing=(0.5, 0.5)):
    return GridField(2, 3, (0.0, 0.0), spacing, values, np.arange(2.0), np.arange(3.0))


def test_grid_field_validation():
    assert _field(np.zeros((2, 3))).values.size == 6
    with pytest.raises(DomainError):
        _field(np.zeros((2, 3)), spacing=(0.5, 0.0))
    with pytest.raises(DomainError):
        _field(np.zeros((3, 2)))
    with pytest.raises(DomainError):
        _field(np.full((2, 3), np.nan))


def test_ring_solver_returns_field():
    m, field = laplace_ring_module(GrotzschRing(0.5), n=64, return_field=True)
    assert isinstance(field, GridField)
    assert field.values.min() >= -1e-12 and field.values.max() <= 1 + 1e-12


def test_annulus_module_exact():
    assert laplace_ring_module(Annulus(1, math.exp(2 * math.pi)), n=512) == pytest.approx(1, abs=1e-3)


def test_grotzsch_ring_oracle():
    m = laplace_ring_module(GrotzschRing(0.5), n=512)
    assert m == pytest.approx(grotzsch_mu(0.5) / (2 * math.pi), rel=5e-3)


def test_slit_disc_oracle():
    R = build_slit_annulus_map(0.5).R
    assert laplace_ring_module(SlitDisc(0.5), n=512) == pytest.approx(math.log(R) / (2 * math.pi), rel=5e-3)


def test_ring_error_decreases_with_n():
    exact = grotzsch_mu(0.5) / (2 * math.pi)
    errs = [abs(laplace_ring_module(GrotzschRing(0.5), n=n) - exact) for n in (128, 256, 512)]
    assert errs[0] > errs[1] > errs[2]
    assert math.log2(errs[1] / errs[2]) >= 1
    # the raw scheme is first order because of the slit tip; it still converges monotonically
    raw = [abs(laplace_ring_module(GrotzschRing(0.5), n=n, extrapolate=False) - exact) for n in (128, 256, 512)]
    assert raw[0] > raw[1] > raw[2]


def test_quad_oracle():
    for lam in (2.0, 4.0):
        assert laplace_quad_module(lam, n=256) == pytest.approx(quad_module_from_crossratio(lam).m, rel=5e-3)


def test_laplace_rejects_small_grid():
    with pytest.raises(DomainError):
        laplace_ring_module(GrotzschRing(0.5), n=16)


def test_measured_dilatation():
    assert measured_dilatation(lambda z: z * z, 0.3 + 0.2j) == pytest.approx(1, abs=1e-6)
    z = disc_samples(100)
    assert np.all(np.abs(measured_dilatation(np.exp, z) - 1) < 1e-6)
    with pytest.raises(NumericError):
        measured_dilatation(np.conj, 0.1 + 0.1j)
    assert max_measured_dilatation(np.conj, z) == math.inf


def test_extremal_map_constant_dilatation():
    f = build_shift(0.25)
    z = disc_samples(400, r_max=0.95, seed=21)
    z = z[np.abs(z - np.clip(z.real, -0.25, 0)) > 0.02][:200]
    assert np.allclose(measured_dilatation(f, z), K_QUARTER, rtol=1e-3)


def test_competitors_respect_normalisation():
    x = 0.25
    circle = np.exp(1j * np.linspace(0, 2 * math.pi, 50))
    for g in (radial_bump(x, 0.7), mobius_patch(x, 0.5)):
        assert abs(g(0) + x) < 1e-15
        assert np.allclose(g(circle), circle, atol=1e-15)
    with pytest.raises(DomainError):
        mobius_patch(x, 0.2)


def test_competitor_sweeps():
    x = 0.25
    K = shift_dilatation(x)
    bumps = competitor_dilatation_sweep(x, "radial_bump", [0.9, 0.7, 0.5])
    assert bumps[0] > K and min(bumps) >= K - 1e-3
    patches = competitor_dilatation_sweep(x, "mobius_patch", [0.9, 0.7, 0.5, 0.4, 0.35])
    assert all(b > a for a, b in zip(patches, patches[1:]))
    assert min(patches) >= K - 1e-3
    assert competitor_dilatation_sweep(x, "extremal", [None])[0] == pytest.approx(K, abs=1e-3)
    assert min(competitor_dilatation_sweep(x, "perturbed_extremal", [0.02, 0.05])) > K
    with pytest.raises(DomainError):
        competitor_dilatation_sweep(x, "spiral", [1])


def test_disc_mesh():
    pts, tri = disc_mesh(4)
    assert pts[0] == 0 and len(pts) == 1 + 6 * (1 + 2 + 3 + 4)
    a, b, c = (pts[tri[:, i]] for i in range(3))
    assert np.all((np.conj(b - a) * (c - a)).imag > 0)
    with pytest.raises(DomainError):
        disc_mesh(0)


def test_discrete_minimum_identity():
    assert discrete_min_dilatation(0.0, mesh_refinement=4) == pytest.approx(1)


def test_discrete_minimum_near_continuum():
    res = discrete_min_dilatation(0.25, full_output=True)
    assert res.mapping.is_valid()
    assert 0.9 * K_QUARTER <= res.value <= 1.1 * K_QUARTER
    assert res.value >= 1


def test_discrete_minimum_monotone():
    vals = [discrete_min_dilatation(x, mesh_refinement=8) for x in (0.1, 0.25, 0.4)]
    assert vals[0] <= vals[1] <= vals[2]
    assert vals[0] > 1


def test_discrete_minimum_domain():
    with pytest.raises(DomainError):
        discrete_min_dilatation(1.0)
