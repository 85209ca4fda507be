"""Harmonic lifting of the spectral Dirac problem.

The spectral solution with a Dirac right-hand side and the boundary data of
the Riesz fundamental solution splits into the homogeneous series
``w_{n,s}`` plus the harmonic function carrying the boundary data. In 1D the
harmonic part is the constant ``a(1,s)``; on the square it is built from the
sine coefficients of ``phi_1``.
"""
import logging
import math
import warnings

import numpy as np

from .domain import Field, Grid1D, Grid2D, as_power
from .errors import (AccuracyError, AccuracyWarning, DomainError,
                     UnsupportedCaseError)
from .riesz import fundamental_solution
from .special_fn import fundamental_constant
from .spectral_series import (spectral_dirac_1d, spectral_dirac_2d,
                              spectral_dirac_2d_grid)
from .summation import DEFAULT_MAX_INDEX_2D, accumulate_series, as_truncation

logger = logging.getLogger(__name__)

DEFAULT_LIFT_COUNT = 500
MIN_QUADRATURE_NODES = 64
MAX_QUADRATURE_INTERVALS = 1 << 20
QUADRATURE_TOL = 1e-10
QUADRATURE_FAIL_TOL = 1e-9
COEFF_CHUNK = 32


def phi1(x, s):
    """Boundary datum ``(x^2 + 1)^{s-1} - 2^{s-1}`` shifted to vanish at
    ``x = +-1``."""
    s = float(as_power(s))
    x = np.asarray(x, dtype=np.float64)
    if np.any(np.abs(x) > 1.0):
        raise DomainError('phi1 is defined on [-1, 1]')
    values = (x * x + 1.0)**(s - 1.0) - 2.0**(s - 1.0)
    return float(values) if values.ndim == 0 else values


class LiftCoefficients(object):
    """Sine coefficients ``A_k = int_{-1}^{1} phi_1(x) e_k(x) dx``.

    Only odd k carry information; ``A_{2k}`` is identically 0.

    Args:
        s (FracPower): Fractional power the coefficients belong to.
        odd (np.ndarray): ``A_1, A_3, ..., A_{2 count - 1}``.
        quadrature_nodes (int): Initial number of Simpson intervals.
        error_estimate (float): Largest Richardson estimate over all
            coefficients.
    """

    def __init__(self, s, odd, quadrature_nodes, error_estimate=0.0):
        self.s = as_power(s)
        self.odd = np.asarray(odd, dtype=np.float64)
        self.quadrature_nodes = int(quadrature_nodes)
        self.error_estimate = float(error_estimate)

    @property
    def count(self):
        return self.odd.size

    @property
    def odd_indices(self):
        return 2 * np.arange(self.count) + 1

    @property
    def A(self):
        """All coefficients, entry ``k - 1`` holding ``A_k``."""
        full = np.zeros(2 * self.count, dtype=np.float64)
        full[0::2] = self.odd
        return full

    def __getitem__(self, k):
        if int(k) != k or k < 1:
            raise DomainError(f'Coefficient index must be a positive '
                              f'integer, but got {k}')
        if k % 2 == 0:
            return 0.0
        if k > 2 * self.count - 1:
            raise IndexError(f'Only {self.count} odd coefficients are kept, '
                             f'but A_{k} was requested')
        return float(self.odd[(k - 1) // 2])

    def synthesize(self, x):
        """Fourier sine synthesis ``sum_k A_k e_k(x)``."""
        x = np.asarray(x, dtype=np.float64)
        flat = x.ravel()
        sines = np.sin(
            np.outer(self.odd_indices, (flat + 1.0) * (math.pi / 2.0)))
        values = self.odd @ sines
        values[np.abs(flat) == 1.0] = 0.0
        values = values.reshape(x.shape)
        return float(values) if values.ndim == 0 else values

    def __repr__(self):
        return (f'{self.__class__.__name__}(s={float(self.s)}, '
                f'count={self.count}, '
                f'quadrature_nodes={self.quadrature_nodes})')


def _simpson_chunk(freqs, s, nodes):
    """Composite Simpson for ``2 int_0^1 phi_1(x) sin(f pi (x+1)/2) dx``,
    doubling the intervals until the Richardson estimate drops below the
    tolerance.

    Old nodes are reused: after doubling, every old node becomes an even
    node and only the new midpoints are evaluated.
    """

    def integrand(x):
        return phi1(x, s)[None, :] * np.sin(
            np.outer(freqs, (x + 1.0) * (math.pi / 2.0)))

    # resolve the highest frequency with a few intervals per half period
    intervals = nodes
    while intervals < 4 * freqs[-1]:
        intervals *= 2

    grid = np.linspace(0.0, 1.0, intervals + 1)
    values = integrand(grid)
    ends = values[:, 0] + values[:, -1]
    odd_sum = values[:, 1:-1:2].sum(axis=1)
    even_sum = values[:, 2:-1:2].sum(axis=1)
    estimate = (ends + 4.0 * odd_sum + 2.0 * even_sum) / (3.0 * intervals)

    error = np.inf
    while intervals < MAX_QUADRATURE_INTERVALS:
        intervals *= 2
        step = 1.0 / intervals
        midpoints = (2.0 * np.arange(intervals // 2) + 1.0) * step
        even_sum = even_sum + odd_sum
        odd_sum = integrand(midpoints).sum(axis=1)
        refined = step / 3.0 * (ends + 4.0 * odd_sum + 2.0 * even_sum)
        error = float(np.max(np.abs(refined - estimate))) / 15.0
        estimate = refined
        if error <= QUADRATURE_TOL:
            break
    return 2.0 * estimate, error


def lift_coefficients(s, count=DEFAULT_LIFT_COUNT, nodes=MIN_QUADRATURE_NODES):
    """Sine coefficients of ``phi_1`` by adaptive composite Simpson.

    ``A_{2k+1} = 2 int_0^1 phi_1(x) sin((2k+1) pi (x+1)/2) dx``, the factor
    2 coming from the parity of ``phi_1``.

    Args:
        s (float): Fractional power.
        count (int): Number of odd coefficients. Default: 500.
        nodes (int): Initial number of Simpson intervals, at least 64.
            Default: 64.

    Returns:
        LiftCoefficients: The coefficients.

    Raises:
        AccuracyError: If the Richardson estimate still exceeds 1e-9 at the
            finest refinement level.
    """
    s = as_power(s)
    if int(count) != count or count < 1:
        raise DomainError(f'count must be a positive integer, but got {count}')
    if int(nodes) != nodes or nodes < MIN_QUADRATURE_NODES or nodes % 2:
        raise DomainError(f'nodes must be an even integer >= '
                          f'{MIN_QUADRATURE_NODES}, but got {nodes}')

    freqs = 2.0 * np.arange(int(count), dtype=np.float64) + 1.0
    odd = np.empty_like(freqs)
    worst = 0.0
    for start in range(0, freqs.size, COEFF_CHUNK):
        stop = min(start + COEFF_CHUNK, freqs.size)
        odd[start:stop], error = _simpson_chunk(freqs[start:stop], float(s),
                                                int(nodes))
        worst = max(worst, error)

    if worst > QUADRATURE_FAIL_TOL:
        raise AccuracyError(f'Lift coefficient quadrature did not converge: '
                            f'Richardson estimate {worst:.3e} exceeds '
                            f'{QUADRATURE_FAIL_TOL:.0e}')
    if worst > QUADRATURE_TOL:
        msg = (f'Lift coefficient quadrature stopped at Richardson estimate '
               f'{worst:.3e} above {QUADRATURE_TOL:.0e}')
        logger.warning(msg)
        warnings.warn(msg, AccuracyWarning)
    return LiftCoefficients(s, odd, nodes, worst)


def cosh_ratio(k, y):
    """``cosh(k pi y / 2) / cosh(k pi / 2)`` without overflow."""
    k = np.asarray(k, dtype=np.float64)
    ay = np.abs(np.asarray(y, dtype=np.float64))
    return (np.exp(k * math.pi * (ay - 1.0) / 2.0) *
            (1.0 + np.exp(-k * math.pi * ay)) / (1.0 + np.exp(-k * math.pi)))


def _check_coeffs(coeffs, s):
    if not isinstance(coeffs, LiftCoefficients):
        raise TypeError(f'coeffs must be LiftCoefficients, '
                        f'but got {type(coeffs)}')
    if not math.isclose(float(coeffs.s), float(s), rel_tol=0, abs_tol=1e-12):
        raise DomainError(f'Lift coefficients were computed for '
                          f's={float(coeffs.s)}, but s={float(s)} was given')


def _half_lift(x, y, coeffs):
    """``sum_k A_k e_k(x) cosh(k pi y/2) / cosh(k pi/2)`` at paired
    points."""
    odd = coeffs.odd_indices.astype(np.float64)

    def term_block(start, stop):
        k = odd[start:stop, None]
        sines = np.sin(k * (x[None, :] + 1.0) * (math.pi / 2.0))
        return coeffs.odd[start:stop, None] * sines * cosh_ratio(
            k, y[None, :])

    values = accumulate_series(term_block, coeffs.count, shape=x.shape)
    values[np.abs(x) == 1.0] = 0.0
    return values


def harmonic_lift_2d(x, y, s, coeffs):
    """Harmonic function on the square with boundary data
    ``(t^2 + 1)^{s-1}`` on every side.

    ``v(x, y) = v~(x, y) + v~(y, x) + 2^{s-1}`` where ``v~`` carries
    ``phi_1`` on the sides ``y = +-1`` and vanishes on ``x = +-1``.
    """
    s = as_power(s)
    _check_coeffs(coeffs, s)
    x, y = np.broadcast_arrays(
        np.asarray(x, dtype=np.float64), np.asarray(y, dtype=np.float64))
    if np.any(np.abs(x) > 1.0) or np.any(np.abs(y) > 1.0):
        raise DomainError('The lift is defined on [-1, 1]^2')
    flat_x, flat_y = x.ravel(), y.ravel()
    values = (_half_lift(flat_x, flat_y, coeffs) +
              _half_lift(flat_y, flat_x, coeffs) + 2.0**(float(s) - 1.0))
    values = values.reshape(x.shape)
    return float(values) if values.ndim == 0 else values


def harmonic_lift_2d_grid(x_points, y_points, s, coeffs):
    """:func:`harmonic_lift_2d` on a tensor grid, shape ``(nx, ny)``."""
    s = as_power(s)
    _check_coeffs(coeffs, s)
    x_points = np.asarray(x_points, dtype=np.float64).ravel()
    y_points = np.asarray(y_points, dtype=np.float64).ravel()
    odd = coeffs.odd_indices.astype(np.float64)[:, None]

    def half(along, across):
        sines = np.sin(odd * (along[None, :] + 1.0) * (math.pi / 2.0))
        sines[:, np.abs(along) == 1.0] = 0.0
        return (coeffs.odd[:, None] * sines).T @ cosh_ratio(
            odd, across[None, :])

    return (half(x_points, y_points) + half(y_points, x_points).T +
            2.0**(float(s) - 1.0))


def spectral_dirac_solution_1d(x, s, trunc=None):
    """Spectral solution on (-1, 1) with a Dirac mass at 0 and the Riesz
    boundary values, ``w_{1,s}(x) + a(1,s)``.

    Raises:
        UnsupportedCaseError: For ``s = 1/2``, where no constant lift exists.
    """
    s = as_power(s)
    if s.is_half:
        raise UnsupportedCaseError('The 1D spectral Dirac solution is not '
                                   'defined for s = 1/2 (log-case)')
    return spectral_dirac_1d(x, s, trunc) + fundamental_constant(1, s)


def spectral_dirac_solution_2d(x, y, s, trunc=None, coeffs=None):
    """``w_{2,s}(x, y) + a(2,s) v(x, y)`` with ``v`` from
    :func:`harmonic_lift_2d`."""
    s = as_power(s)
    if coeffs is None:
        coeffs = lift_coefficients(s)
    trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_2D)
    return spectral_dirac_2d(x, y, s, trunc) + fundamental_constant(
        2, s) * harmonic_lift_2d(x, y, s, coeffs)


def spectral_dirac_solution_2d_grid(x_points, y_points, s, trunc=None,
                                    coeffs=None, w=None):
    """Grid version of :func:`spectral_dirac_solution_2d`.

    Args:
        w (np.ndarray | None): Precomputed
            :func:`spectral_dirac_2d_grid` values for the same arguments.
    """
    s = as_power(s)
    if coeffs is None:
        coeffs = lift_coefficients(s)
    if w is None:
        trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_2D)
        w = spectral_dirac_2d_grid(x_points, y_points, s, trunc)
    return w + fundamental_constant(2, s) * harmonic_lift_2d_grid(
        x_points, y_points, s, coeffs)


def _fundamental_off_origin(points, n, s):
    """Fundamental solution with NaN at the origin."""
    r = np.abs(points) if n == 1 else np.hypot(*points)
    values = np.full(r.shape, np.nan)
    mask = r > 0
    if n == 1:
        values[mask] = fundamental_solution(points[mask], 1, s)
    else:
        stacked = np.stack([p[mask] for p in points], axis=-1)
        values[mask] = fundamental_solution(stacked, 2, s)
    return values


def dirac_field_1d(grid, s, trunc=None, formulation='spectral'):
    """Sample a 1D Dirac solution; the Riesz one is NaN at the origin."""
    if not isinstance(grid, Grid1D):
        raise TypeError(f'grid must be Grid1D, but got {type(grid)}')
    s = as_power(s)
    if formulation == 'riesz':
        return Field(grid, _fundamental_off_origin(grid.points, 1, s),
                     'riesz', None, s)
    trunc = as_truncation(trunc)
    return Field(grid, spectral_dirac_solution_1d(grid.points, s, trunc),
                 formulation, trunc, s)


def dirac_field_2d(grid, s, trunc=None, coeffs=None, formulation='spectral'):
    """Sample a Dirac solution on a square grid."""
    if not isinstance(grid, Grid2D):
        raise TypeError(f'grid must be Grid2D, but got {type(grid)}')
    s = as_power(s)
    if formulation == 'riesz':
        return Field(grid, _fundamental_off_origin(grid.mesh(), 2, s),
                     'riesz', None, s)
    trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_2D)
    values = spectral_dirac_solution_2d_grid(grid.x_axis.points,
                                             grid.y_axis.points, s, trunc,
                                             coeffs)
    return Field(grid, values, formulation, trunc, s)
