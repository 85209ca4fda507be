import math

import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal
from scipy import integrate

from fraclap.analysis import discrete_laplacian_residual, five_point_laplacian
from fraclap.core import (AccuracyError, AccuracyWarning, DomainError, Grid1D,
                          Grid2D, LiftCoefficients, UnsupportedCaseError,
                          dirac_field_1d, dirac_field_2d,
                          fundamental_constant, harmonic_lift_2d,
                          harmonic_lift_2d_grid, lift_coefficients, phi1,
                          spectral_dirac_1d, spectral_dirac_solution_1d,
                          spectral_dirac_solution_2d)
from fraclap.core import lifting


@pytest.fixture(scope='module')
def coeffs_06():
    return lift_coefficients(0.6, count=200)


def test_phi1():
    for s in [0.3, 0.5, 0.75]:
        assert phi1(1.0, s) == 0.0 and phi1(-1.0, s) == 0.0
        assert_allclose(phi1(0.0, s), 1.0 - 2.0**(s - 1.0), rtol=1e-15)
    x = np.linspace(-1.0, 1.0, 9)
    assert_array_equal(phi1(x, 0.4), phi1(-x, 0.4))
    with pytest.raises(DomainError):
        phi1(1.5, 0.5)


def test_lift_coefficients_match_quad():
    s = 0.6
    coeffs = lift_coefficients(s, count=8)
    assert coeffs.count == 8
    assert coeffs.error_estimate <= lifting.QUADRATURE_TOL
    for k in [1, 3, 5, 15]:
        reference, _ = integrate.quad(
            lambda t: phi1(t, s) * math.sin(k * math.pi * (t + 1.0) / 2.0),
            -1.0, 1.0, epsabs=1e-14, epsrel=1e-13, limit=200)
        assert_allclose(coeffs[k], reference, rtol=0, atol=1e-9)


def test_lift_coefficients_container():
    coeffs = lift_coefficients(0.5, count=4)
    assert_array_equal(coeffs.odd_indices, [1, 3, 5, 7])
    full = coeffs.A
    assert full.shape == (8, )
    assert_array_equal(full[1::2], 0.0)
    assert_array_equal(full[0::2], coeffs.odd)
    assert coeffs[2] == 0.0
    assert coeffs[7] == coeffs.odd[3]
    with pytest.raises(IndexError):
        coeffs[9]
    with pytest.raises(DomainError):
        coeffs[0]
    assert 'count=4' in repr(coeffs)

    with pytest.raises(DomainError):
        lift_coefficients(0.5, count=0)
    with pytest.raises(DomainError):
        lift_coefficients(0.5, nodes=32)
    with pytest.raises(DomainError):
        lift_coefficients(1.0)


def test_synthesis(coeffs_06):
    x = np.linspace(-1.0, 1.0, 101)
    synth = coeffs_06.synthesize(x)
    assert synth[0] == 0.0 and synth[-1] == 0.0
    assert np.abs(synth - phi1(x, 0.6)).max() <= 5e-3


def test_cosh_ratio():
    assert_allclose(lifting.cosh_ratio(3.0, 1.0), 1.0, rtol=1e-15)
    assert_allclose(
        lifting.cosh_ratio(3.0, 0.4),
        math.cosh(3 * math.pi * 0.2) / math.cosh(3 * math.pi / 2),
        rtol=1e-13)
    assert_allclose(
        lifting.cosh_ratio(5.0, -0.4), lifting.cosh_ratio(5.0, 0.4),
        rtol=1e-15)
    with np.errstate(over='raise'):
        value = lifting.cosh_ratio(2001.0, 0.5)
    assert np.isfinite(value) and 0.0 <= value < 1e-300


@pytest.mark.parametrize('s', [0.5, 0.6, 0.75])
def test_harmonic_lift_trace(s):
    coeffs = lift_coefficients(s)
    t = np.linspace(-1.0, 1.0, 200)
    exact = (t * t + 1.0)**(s - 1.0)
    for x, y in [(t, np.ones_like(t)), (t, -np.ones_like(t)),
                 (np.ones_like(t), t), (-np.ones_like(t), t)]:
        trace = harmonic_lift_2d(x, y, s, coeffs)
        assert np.abs(trace - exact).max() <= 5e-3


def test_harmonic_lift_is_harmonic(coeffs_06):
    h = 1e-3
    for x, y in [(0.2, 0.3), (-0.5, 0.1), (0.7, -0.6), (0.0, 0.0)]:
        center = harmonic_lift_2d(x, y, 0.6, coeffs_06)
        around = sum(
            harmonic_lift_2d(x + dx, y + dy, 0.6, coeffs_06)
            for dx, dy in [(h, 0), (-h, 0), (0, h), (0, -h)])
        assert abs(around - 4.0 * center) / h**2 <= 1e-3


def test_harmonic_lift_grid(coeffs_06):
    axis = Grid1D(15).points
    grid_values = harmonic_lift_2d_grid(axis, axis, 0.6, coeffs_06)
    assert grid_values.shape == (15, 15)
    assert_array_equal(grid_values, grid_values.T)

    xx, yy = np.meshgrid(axis, axis, indexing='ij')
    assert_allclose(
        harmonic_lift_2d(xx, yy, 0.6, coeffs_06), grid_values, rtol=1e-12,
        atol=1e-13)

    y_axis = np.linspace(-0.5, 0.5, 4)
    assert harmonic_lift_2d_grid(axis, y_axis, 0.6,
                                 coeffs_06).shape == (15, 4)


def test_harmonic_lift_checks(coeffs_06):
    with pytest.raises(TypeError):
        harmonic_lift_2d(0.1, 0.2, 0.6, np.ones(3))
    with pytest.raises(DomainError):
        harmonic_lift_2d(0.1, 0.2, 0.5, coeffs_06)
    with pytest.raises(DomainError):
        harmonic_lift_2d(1.2, 0.2, 0.6, coeffs_06)
    other = LiftCoefficients(0.7, coeffs_06.odd, 64)
    with pytest.raises(DomainError):
        harmonic_lift_2d_grid([0.0], [0.0], 0.6, other)


def test_quadrature_warning(monkeypatch):
    monkeypatch.setattr(lifting, 'MAX_QUADRATURE_INTERVALS', 256)
    monkeypatch.setattr(lifting, 'QUADRATURE_TOL', 0.0)
    monkeypatch.setattr(lifting, 'QUADRATURE_FAIL_TOL', 1.0)
    with pytest.warns(AccuracyWarning):
        coeffs = lift_coefficients(0.6, count=4)
    assert coeffs.error_estimate > 0.0


def test_quadrature_failure(monkeypatch):
    monkeypatch.setattr(lifting, 'MAX_QUADRATURE_INTERVALS', 256)
    monkeypatch.setattr(lifting, 'QUADRATURE_FAIL_TOL', 0.0)
    with pytest.raises(AccuracyError):
        lift_coefficients(0.6, count=4)


def test_spectral_dirac_solution_1d():
    s = 0.3
    x = np.linspace(-1.0, 1.0, 11)
    values = spectral_dirac_solution_1d(x, s, 2000)
    assert_allclose(values[0], fundamental_constant(1, s), rtol=1e-15)
    assert_allclose(values[-1], fundamental_constant(1, s), rtol=1e-15)
    assert_allclose(
        values - spectral_dirac_1d(x, s, 2000), fundamental_constant(1, s),
        rtol=1e-13)

    with pytest.raises(UnsupportedCaseError):
        spectral_dirac_solution_1d(0.3, 0.5)


def test_spectral_dirac_solution_2d_trace(coeffs_06):
    s = 0.6
    t = np.linspace(-0.9, 0.9, 7)
    values = spectral_dirac_solution_2d(
        t, np.ones_like(t), s, 64, coeffs=coeffs_06)
    exact = fundamental_constant(2, s) * (t * t + 1.0)**(s - 1.0)
    assert np.abs(values - exact).max() <= 5e-3 * abs(
        fundamental_constant(2, s))


def test_dirac_fields(coeffs_06):
    grid = Grid1D(33)
    riesz = dirac_field_1d(grid, 0.3, formulation='riesz')
    assert np.isnan(riesz.values[16])
    assert np.all(np.isfinite(np.delete(riesz.values, 16)))
    assert riesz.is_symmetric()

    spectral = dirac_field_1d(grid, 0.55, 2000)
    assert spectral.truncation.max_index == 2000
    assert np.all(np.isfinite(spectral.values))
    assert spectral.is_symmetric()

    grid2d = Grid2D(11)
    riesz2d = dirac_field_2d(grid2d, 0.6, formulation='riesz')
    assert np.isnan(riesz2d.values[5, 5])
    assert riesz2d.is_symmetric(atol=1e-12)

    field = dirac_field_2d(Grid2D(10), 0.6, 64, coeffs=coeffs_06)
    assert field.values.shape == (10, 10)
    assert field.is_symmetric(atol=1e-9 * np.abs(field.values).max())

    with pytest.raises(TypeError):
        dirac_field_1d(grid2d, 0.3)
    with pytest.raises(TypeError):
        dirac_field_2d(grid, 0.6)


@pytest.mark.parametrize('s', [0.5, 0.6, 0.75])
def test_harmonic_lift_residual(s):
    coeffs = lift_coefficients(s)
    h = 1e-3
    for corner in [-0.003, 0.944, -0.95]:
        axis = corner + h * np.arange(7)
        values = harmonic_lift_2d_grid(axis, axis[::-1], s, coeffs)
        assert discrete_laplacian_residual(values, h=h) <= 1e-3


@pytest.mark.parametrize('s', [0.5, 0.6, 0.75])
def test_harmonic_lift_interior(s):
    coeffs = lift_coefficients(s)
    axis = np.linspace(-0.95, 0.95, 50)
    x, y = np.meshgrid(axis, axis, indexing='ij')
    residual = five_point_laplacian(
        lambda a, b: harmonic_lift_2d(a, b, s, coeffs), x, y, 1e-3)
    assert residual.shape == (50, 50)
    assert np.abs(residual).max() <= 1e-3


@pytest.mark.parametrize('s', [0.5, 0.6, 0.75])
def test_harmonic_lift_maximum_principle(s):
    coeffs = lift_coefficients(s)
    axis = Grid1D(101).points
    values = harmonic_lift_2d_grid(axis, axis, s, coeffs)
    boundary = np.concatenate(
        [values[0], values[-1], values[:, 0], values[:, -1]])
    interior = values[1:-1, 1:-1]
    assert interior.max() <= boundary.max() + 1e-9
    assert interior.min() >= boundary.min() - 1e-9
    # the boundary data (t^2 + 1)^{s-1} ranges over [2^{s-1}, 1]
    assert interior.max() < 1.0
    assert interior.min() > 2.0**(s - 1.0)
