import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from fraclap.analysis import (QuadratureRule, apply_spectral_operator,
                              classical_reference, coefficient_oracle,
                              discrete_laplacian_residual,
                              five_point_laplacian, truncated_expansion)
from fraclap.core import (AccuracyWarning, DomainError, Field, Grid1D, Grid2D,
                          constant_rhs_field,
                          fourier_coefficients_constant_rhs)


def test_quadrature_rule():
    for kind, nodes in [('gauss', 11), ('trapezoid', 2), ('simpson', 10)]:
        with pytest.raises(DomainError):
            QuadratureRule(kind, nodes)

    simpson = QuadratureRule('simpson', 11)
    assert_allclose(simpson.weights.sum(), 2.0, rtol=1e-15)
    x = simpson.points
    assert_allclose(simpson.integrate(x**3 + x**2), 2.0 / 3.0, rtol=1e-14)

    trapezoid = QuadratureRule('trapezoid', 5, 0.0, 2.0)
    assert_allclose(trapezoid.step, 0.5)
    assert_allclose(
        trapezoid.integrate(3.0 * trapezoid.points + 1.0), 8.0, rtol=1e-15)
    with pytest.raises(DomainError):
        trapezoid.integrate(np.ones(4))


def test_coefficient_oracle_eigenfunction():
    rule = QuadratureRule('trapezoid', 257)
    samples = np.sin(3 * math.pi * (rule.points + 1.0) / 2.0)
    assert_allclose(coefficient_oracle(samples, 3, rule), 1.0, rtol=1e-12)
    assert abs(coefficient_oracle(samples, 5, rule)) <= 1e-12

    with pytest.warns(AccuracyWarning):
        coefficient_oracle(samples, 40, rule)
    with pytest.raises(DomainError):
        coefficient_oracle(samples, 0, rule)
    with pytest.raises(DomainError):
        coefficient_oracle(samples[:-1], 3, rule)
    samples[4] = np.nan
    with pytest.raises(DomainError):
        coefficient_oracle(samples, 3, rule)


def test_coefficient_oracle_matches_series():
    grid = Grid1D(4097)
    field = constant_rhs_field(grid, 0.5, 10000)
    rule = QuadratureRule('simpson', grid.num)
    analytic = fourier_coefficients_constant_rhs(0.5, 5)
    for k in range(1, 6):
        assert_allclose(
            coefficient_oracle(field, k, rule), analytic[k - 1], rtol=0,
            atol=1e-5)


def test_apply_spectral_operator():
    coeffs = fourier_coefficients_constant_rhs(0.5, 2001)
    x = np.array([-0.5, 0.0, 0.5])
    assert_allclose(
        apply_spectral_operator(coeffs, 0.5, x), 1.0, rtol=0, atol=5e-3)

    # s = 1 recovers -u'' of the classical solution
    coeffs = fourier_coefficients_constant_rhs(1.0, 2001)
    assert_allclose(
        apply_spectral_operator(coeffs, 1.0, x), 1.0, rtol=0, atol=5e-3)

    assert_allclose(truncated_expansion([0.0, 0.0, 1.0], 0.0), -1.0)
    assert truncated_expansion([1.0, 2.0], np.zeros((2, 3))).shape == (2, 3)


def test_classical_reference():
    x = np.array([-1.0, -0.5, 0.0, 0.5, 1.0])
    assert_allclose(
        classical_reference('constant_rhs_1d', x),
        [0.0, 0.375, 0.5, 0.375, 0.0])
    assert_allclose(
        classical_reference('dirac_1d', x), [0.0, 0.25, 0.5, 0.25, 0.0])
    assert classical_reference('dirac_1d', 0.0) == 0.5
    with pytest.raises(DomainError):
        classical_reference('dirac_2d', x)
    with pytest.raises(DomainError):
        classical_reference('dirac_1d', 1.5)


def test_five_point_laplacian():
    value = five_point_laplacian(lambda x, y: x * x + y * y, 0.3, 0.2, 1e-3)
    assert_allclose(value, 4.0, rtol=1e-6)


def test_discrete_laplacian_residual():
    grid = Grid2D(21)
    xx, yy = grid.mesh()
    field = Field(grid, xx**2 - yy**2, 'spectral', None, 0.5)
    assert discrete_laplacian_residual(field) < 1e-8
    assert_allclose(
        discrete_laplacian_residual(xx**2 + yy**2, h=grid.step[0]), 4.0,
        rtol=1e-9)

    with pytest.raises(DomainError):
        discrete_laplacian_residual(
            Field(Grid2D(21, 11), np.zeros((21, 11)), 'spectral', None, 0.5))
    with pytest.raises(DomainError):
        discrete_laplacian_residual(
            Field(Grid1D(21), np.zeros(21), 'spectral', None, 0.5))
    with pytest.raises(DomainError):
        discrete_laplacian_residual(np.zeros((4, 4)), h=0.1)
    with pytest.raises(DomainError):
        discrete_laplacian_residual(np.zeros((8, 8)))


def test_simpson_order():
    # f = 1 against e_5, exact value 4 / (5 pi)
    exact = 4.0 / (5.0 * math.pi)
    errors = []
    for nodes in [65, 129, 257]:
        rule = QuadratureRule('simpson', nodes)
        errors.append(
            abs(coefficient_oracle(np.ones(nodes), 5, rule) - exact))
    assert errors[0] / errors[1] >= 8.0
    assert errors[1] / errors[2] >= 8.0


def test_discrete_laplacian_exact_cases():
    grid = Grid2D(201)
    xx, yy = grid.mesh()
    assert discrete_laplacian_residual(np.full((201, 201), 3.0),
                                       h=0.01) == 0.0
    field = Field(grid, xx**2 - yy**2, 'spectral', None, 0.5)
    assert discrete_laplacian_residual(field) <= 1e-9
