import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qcdisplace.affine import Ellipse, affine_dilatation
from qcdisplace.errors import BranchAmbiguityError, ConvergenceError, DomainError
from qcdisplace.modulus import phi
from qcdisplace.shift import (
    beltrami_of_shift,
    build_shift,
    build_slit_annulus_map,
    covering_p,
    covering_p_inverse,
    displacement_bound,
    evaluate_shift,
    joukowski,
    joukowski_inverse,
    lifted_affine,
    lifted_affine_map,
    shift_dilatation,
)
from qcdisplace.verify import disc_samples, laplace_slit_map, measured_dilatation

# mpmath, 40 digits: root of i s sn((2K/pi)(-i log w), s^2) = z for s = 0.5
PHI_09 = 3.6525633651465996
PHI_03_04 = complex(1.5961010175599358, 1.2580592805098014)
K_QUARTER = 1.2896668993309636


@pytest.fixture(scope="module")
def m():
    return build_slit_annulus_map(0.5)


@pytest.fixture(scope="module")
def f():
    return build_shift(0.25)


def test_slit_map_normalisation(m):
    assert m.R == pytest.approx(math.sqrt(phi(4)), rel=1e-14)
    assert m(1.0) == pytest.approx(m.R, rel=1e-13)
    assert m(0.5j) == pytest.approx(1j, abs=1e-13)
    assert m(0.0) == pytest.approx(1, abs=1e-14)


def test_slit_map_against_mpmath(m):
    assert m(0.9) == pytest.approx(PHI_09, rel=1e-13)
    assert m(0.3 + 0.4j) == pytest.approx(PHI_03_04, rel=1e-13)


def test_slit_map_against_grid_oracle(m):
    assert abs(laplace_slit_map(0.5, 0.9, n=512) - m(0.9)) < 5e-5 * m.R


def test_slit_map_symmetry_and_boundary(m):
    z = disc_samples(300, r_max=0.999)
    w = m(z)
    assert np.allclose(m(np.conj(z)), np.conj(w), atol=1e-13)
    assert np.allclose(m(-z), -w, atol=1e-13)
    assert np.all((np.abs(w) > 1 - 1e-12) & (np.abs(w) < m.R + 1e-12))
    circle = np.exp(1j * np.linspace(0, 2 * math.pi, 97))
    assert np.allclose(np.abs(m(circle)), m.R, rtol=1e-13)
    slit = 1j * np.linspace(-0.5, 0.5, 41)
    assert np.allclose(np.abs(m(slit)), 1, atol=1e-12)


def test_slit_map_inverse_and_derivative(m):
    z = disc_samples(200, r_max=0.95)
    z = z[np.abs(z.real) > 1e-3]
    assert np.allclose(m.inverse(m(z)), z, atol=1e-12)
    h = 1e-6
    fd = (m(z + h) - m(z - h)) / (2 * h)
    assert np.allclose(m.derivative(z), fd, rtol=1e-7)


def test_slit_map_errors(m):
    with pytest.raises(DomainError):
        build_slit_annulus_map(1.0)
    with pytest.raises(ConvergenceError) as exc:
        build_slit_annulus_map(0.5, tol=1e-30)
    assert exc.value.residual >= 0
    with pytest.raises(DomainError):
        m(1.5)


def test_joukowski_examples():
    assert joukowski("minus", 1j) == pytest.approx(2j)
    assert joukowski("plus", 1) == 2
    assert joukowski_inverse("plus", 2) == pytest.approx(1)
    assert joukowski_inverse("minus", 2j) == pytest.approx(1j)
    R = 2.0
    img = joukowski("minus", R * np.exp(1j * np.linspace(0, 2 * math.pi, 50)))
    assert np.allclose(Ellipse(R - 1 / R, R + 1 / R).level(img), 1)
    with pytest.raises(DomainError):
        joukowski("minus", 0)
    with pytest.raises(DomainError):
        joukowski("times", 1)


def test_joukowski_branch_ambiguity():
    with pytest.raises(BranchAmbiguityError) as exc:
        joukowski_inverse("plus", 1.0)
    a, b = exc.value.candidates
    assert abs(a) == pytest.approx(1) and abs(b) == pytest.approx(1)
    with pytest.raises(BranchAmbiguityError):
        joukowski_inverse("minus", 1j)


def test_joukowski_round_trip():
    rng = np.random.default_rng(3)
    w = np.sqrt(rng.uniform(1.0001, 25, 500)) * np.exp(2j * math.pi * rng.uniform(0, 1, 500))
    for sign in ("minus", "plus"):
        v = joukowski(sign, w)
        back = joukowski_inverse(sign, v)
        assert np.max(np.abs(joukowski(sign, back) - v)) < 1e-12
        assert np.allclose(back, w, atol=1e-12)


def test_coverings(m):
    x = m.s**2
    assert covering_p(1, m, 0) == pytest.approx(0, abs=1e-15)
    assert covering_p(2, m, 0) == pytest.approx(-x, abs=1e-14)
    rng = np.random.default_rng(5)
    e1 = Ellipse(m.R - 1 / m.R, m.R + 1 / m.R)
    zeta = e1.boundary(rng.uniform(0, 2 * math.pi, 100)) * np.sqrt(rng.uniform(0, 1, 100))
    assert np.allclose(covering_p(1, m, -zeta), covering_p(1, m, zeta), atol=1e-12)
    with pytest.raises(DomainError):
        covering_p(1, m, 10.0)
    with pytest.raises(DomainError):
        covering_p(3, m, 0)


@pytest.mark.parametrize("index", [1, 2])
def test_covering_round_trip(m, index):
    z = disc_samples(500, r_max=0.999, seed=11)
    assert np.max(np.abs(covering_p(index, m, covering_p_inverse(index, m, z)) - z)) < 1e-9


def test_lifted_affine():
    R = 2.0
    th = math.pi / 4
    w = R * np.exp(1j * th)
    assert lifted_affine(R, joukowski("minus", w)) == pytest.approx(joukowski("plus", w), abs=1e-14)
    assert lifted_affine(R, 0) == 0
    assert affine_dilatation(lifted_affine_map(R)) == pytest.approx(25 / 9, rel=1e-14)
    with pytest.raises(DomainError):
        lifted_affine(1.0, 0)


def test_build_shift_examples():
    assert build_shift(0.25).K == pytest.approx(K_QUARTER, rel=1e-14)
    assert abs(build_shift(0.01).K - 1.01) < 5e-4
    for x in (0.1, 0.5, 0.9):
        f = build_shift(x)
        assert f.K > (1 + x / 2) ** 2
        P = f.grotzsch_value
        assert f.K == pytest.approx(((P + 1) / (P - 1)) ** 2, rel=1e-12)
    with pytest.raises(DomainError):
        build_shift(0)


def test_dilatation_monotone_and_unbounded():
    xs = np.linspace(0.001, 0.999, 300)
    K = [shift_dilatation(x) for x in xs]
    assert all(b > a for a, b in zip(K, K[1:]))
    tail = [shift_dilatation(1 - 10.0**-n) for n in range(1, 14)]
    assert all(b > a for a, b in zip(tail, tail[1:]))
    assert tail[-1] > 100


def test_small_x_no_overflow():
    assert shift_dilatation(1e-300) == pytest.approx(1, abs=1e-12)


def test_shift_contract(f):
    assert abs(f(0) + 0.25) < 1e-8
    circle = np.exp(2j * math.pi * np.arange(360) / 360)
    assert np.max(np.abs(f(circle) - circle)) < 1e-6
    z = disc_samples(200, r_max=0.999)
    assert np.max(np.abs(f(np.conj(z)) - np.conj(f(z)))) < 1e-6
    assert np.max(np.abs(evaluate_shift(f, z, 1) - evaluate_shift(f, z, -1))) < 1e-10
    assert np.all(np.abs(f(z)) < 1)
    with pytest.raises(DomainError):
        f(1.1)
    with pytest.raises(DomainError):
        evaluate_shift(f, 0.1, root_sign=2)


@settings(max_examples=40, deadline=None)
@given(st.floats(0.01, 0.95), st.floats(0, 2 * math.pi))
def test_shift_fixes_circle_for_any_x(x, th):
    g = build_shift(x)
    z = complex(math.cos(th), math.sin(th))
    assert abs(g(z) - z) < 1e-6


def test_constant_pointwise_dilatation(f):
    z = disc_samples(600, r_max=0.95, seed=7)
    seg = np.clip(z.real, -f.x, 0)
    z = z[np.abs(z - seg) > 0.02][:200]
    K = measured_dilatation(f, z, 1e-5)
    assert np.all(np.abs(K / f.K - 1) < 1e-3)


def test_beltrami(f):
    k = (f.K - 1) / (f.K + 1)
    assert f.k == pytest.approx(k)
    s = beltrami_of_shift(f, 0.3 + 0.4j)
    assert abs(s.mu) == pytest.approx(k, abs=1e-3)
    assert s.mu * s.q / abs(s.q) == pytest.approx(k, abs=1e-3)
    c = beltrami_of_shift(f, 0.3 - 0.4j)
    assert abs(c.mu - s.mu.conjugate()) < 1e-6
    with pytest.raises(DomainError):
        beltrami_of_shift(f, -0.1 + 1e-6j)
    with pytest.raises(DomainError):
        beltrami_of_shift(f, 0.99999)


def test_displacement_bound():
    assert displacement_bound(1) == 0
    assert displacement_bound(4) == 2
    assert 0.25 <= displacement_bound(K_QUARTER) == pytest.approx(0.2713, abs=1e-4)
    with pytest.raises(DomainError):
        displacement_bound(0.5)


@given(st.floats(1e-6, 0.999))
def test_displacement_never_exceeds_bound(x):
    assert x < displacement_bound(shift_dilatation(x))
