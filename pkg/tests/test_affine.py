import cmath
import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from qcdisplace.affine import (
    AffineMap,
    Ellipse,
    RectanglePair,
    affine_dilatation,
    ellipse_extremal_map,
    rect_extremal_map,
)
from qcdisplace.errors import DomainError
from qcdisplace.verify import ellipse_competitor_dilatation, measured_dilatation

side = st.floats(0.05, 20.0)


def test_affine_dilatation_examples():
    assert affine_dilatation(AffineMap(1, 0)) == 1
    assert affine_dilatation(AffineMap(1.5, 0.5)) == pytest.approx(2)
    for th in np.linspace(0, 2 * math.pi, 7):
        r = cmath.exp(1j * th)
        assert affine_dilatation(AffineMap(1.5 * r, 0.5 * r)) == pytest.approx(2, rel=1e-14)


def test_affine_map_rejects_folding():
    with pytest.raises(DomainError):
        AffineMap(1, 1)
    with pytest.raises(DomainError):
        AffineMap(0.5, 1j)


def test_affine_inverse_and_beltrami():
    m = AffineMap(2 + 1j, 0.5 - 0.3j)
    z = np.array([0.3 + 0.1j, -1 + 2j])
    assert np.allclose(m.inverse()(m(z)), z, atol=1e-14)
    assert abs(m.beltrami) < 1
    k = abs(m.beltrami)
    assert affine_dilatation(m) == pytest.approx((1 + k) / (1 - k))


def test_rect_examples():
    ident = rect_extremal_map(RectanglePair(1, 1))
    assert ident.a == 1 and ident.b == 0
    m = rect_extremal_map(RectanglePair(1, 2))
    assert (m.a, m.b) == (1.5, 0.5)
    assert affine_dilatation(m) == pytest.approx(2)
    assert affine_dilatation(rect_extremal_map(RectanglePair(2, 1))) == pytest.approx(2)
    with pytest.raises(DomainError):
        RectanglePair(0, 1)


@given(side, side)
def test_rect_map_properties(a1, a2):
    m = rect_extremal_map(RectanglePair(a1, a2))
    assert affine_dilatation(m) == pytest.approx(max(a1 / a2, a2 / a1), rel=1e-12)
    # vertices go to vertices and the vertical side is kept
    corners = np.array([0, a1, a1 + 1j, 1j])
    assert np.allclose(m(corners), [0, a2, a2 + 1j, 1j], atol=1e-12 * max(a1, a2))


def test_ellipse_examples():
    e = Ellipse(2, 2)
    m = ellipse_extremal_map(e)
    assert m.a == pytest.approx(1) and m.b == 0
    m = ellipse_extremal_map(Ellipse(1.5, 2.5))
    assert affine_dilatation(m) == pytest.approx(25 / 9, rel=1e-14)
    assert m(1.5) == pytest.approx(2.5)
    with pytest.raises(DomainError):
        Ellipse(-1, 1)


@given(side, side)
def test_ellipse_map_boundary(alpha, beta):
    e = Ellipse(alpha, beta)
    m = ellipse_extremal_map(e)
    img = m(e.boundary(np.linspace(0, 2 * math.pi, 100)))
    assert np.allclose(Ellipse(beta, alpha).level(img), 1, atol=1e-12)
    K = max(alpha**2 / beta**2, beta**2 / alpha**2)
    # (|a|+|b|)/(|a|-|b|) cancels, so the attainable accuracy is about eps * K
    assert affine_dilatation(m) == pytest.approx(K, rel=1e-14 * K)


def test_measured_dilatation_of_affine_map():
    m = AffineMap(1.5, 0.5)
    assert measured_dilatation(m, 0.2 - 0.4j) == pytest.approx(2, abs=1e-10)


@pytest.mark.parametrize("eps", [0.02, 0.05, 0.1])
def test_bumped_ellipse_maps_are_worse(eps):
    # compactly supported perturbations keep the boundary values and can only raise the dilatation
    K = ellipse_competitor_dilatation(1.5, 2.5, eps)
    assert K > 25 / 9 - 1e-3
    assert K > 25 / 9
