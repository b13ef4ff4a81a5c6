import math

import numpy as np
import pytest
from scipy.special import wofz

from coherent_mor.faddeeva import (
    FRACTION_RADIUS,
    SERIES_RADIUS,
    DomainError,
    w,
    w_fraction,
    w_reference,
    w_series,
    w_trapezoid,
)


def test_reference_grid_agreement(faddeeva_reference):
    z, ref = faddeeva_reference
    err = np.abs(w(z) - ref) / np.abs(ref)
    assert err.max() <= 1e-10


def test_w_origin():
    assert w(1e-300j) == pytest.approx(1.0, abs=1e-15)


def test_w_on_imaginary_axis_is_scaled_erfc():
    for y in (0.1, 1.0, 3.0, 12.0):
        expected = math.exp(y * y) * math.erfc(y)
        assert w(1j * y).real == pytest.approx(expected, rel=1e-13)
        assert abs(w(1j * y).imag) < 1e-15


def test_w_asymptote():
    z = 1e4 + 1.0j
    assert w(z) == pytest.approx(1j / (math.sqrt(math.pi) * z), rel=1e-7)


def test_w_matches_scipy():
    rng = np.random.default_rng(3)
    z = rng.uniform(-30, 30, 2000) + 1j * 10 ** rng.uniform(-5, 1.5, 2000)
    assert np.max(np.abs(w(z) - wofz(z)) / np.abs(wofz(z))) < 1e-12


def test_w_scalar_and_shape():
    assert isinstance(w(0.3 + 0.2j), complex)
    z = np.full((3, 4), 2.0 + 1.0j)
    assert w(z).shape == (3, 4)


@pytest.mark.parametrize("z", [1.0 + 0j, 1.0 - 0.1j, complex("nan"), complex(1, math.inf)])
def test_w_rejects_outside_domain(z):
    with pytest.raises(DomainError):
        w(z)


def test_reference_rejects_lower_half():
    with pytest.raises(DomainError):
        w_reference(1 - 1j)


def test_branches_agree_across_crossovers():
    phi = np.linspace(1e-4, np.pi - 1e-4, 200)
    inner = SERIES_RADIUS * np.exp(1j * phi)
    outer = FRACTION_RADIUS * np.exp(1j * phi)
    for z, a, b in ((inner, w_series, w_trapezoid), (outer, w_trapezoid, w_fraction)):
        assert np.max(np.abs(a(z) - b(z)) / np.abs(b(z))) < 1e-11


def test_reflection_symmetry():
    # W(-conj z) = conj W(z)
    z = np.array([0.3 + 0.01j, 4.0 + 2.0j, 15.0 + 0.5j])
    assert np.allclose(w(-np.conj(z)), np.conj(w(z)), rtol=1e-14, atol=0)


def test_value_at_i():
    assert w(1j) == pytest.approx(math.e * math.erfc(1.0), rel=1e-14)
    assert w_reference(1j) == pytest.approx(0.42758357615580705, rel=1e-15)


def test_log_spaced_radial_grid():
    rng = np.random.default_rng(17)
    r = 10 ** rng.uniform(-3, 4, 600)
    phi = rng.uniform(1e-5, np.pi - 1e-5, 600)
    z = r * np.exp(1j * phi)
    ref = np.array([w_reference(v) for v in z])
    assert np.max(np.abs(w(z) - ref) / np.abs(ref)) <= 1e-10


def test_reflection_symmetry_random():
    rng = np.random.default_rng(23)
    z = rng.uniform(-20, 20, 1000) + 1j * 10 ** rng.uniform(-4, 1.3, 1000)
    assert np.allclose(w(-np.conj(z)), np.conj(w(z)), rtol=1e-12, atol=0)


def test_imaginary_axis_real_positive_decreasing():
    v = w(1j * np.linspace(0.01, 50, 500))
    assert np.all(v.imag == 0) or np.max(np.abs(v.imag)) < 1e-15 * np.max(v.real)
    assert np.all(v.real > 0) and np.all(np.diff(v.real) < 0)


@pytest.mark.parametrize("y", [0.05, 1.0, 4.0])
def test_voigt_area(y):
    from scipy.integrate import quad

    area, _ = quad(lambda x: w(x + 1j * y).real, -np.inf, np.inf, limit=400, epsabs=1e-12)
    assert area == pytest.approx(math.sqrt(math.pi), abs=1e-6)
