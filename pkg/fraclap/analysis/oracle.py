"""Brute-force cross-checks for the analytic evaluators.

Nothing here calls into the series or closed-form modules: eigenfunctions,
weights and stencils are re-derived locally so that the oracles stay an
independent witness.
"""
import logging
import math
import warnings

import numpy as np

from ..core.domain import Field, Grid2D, as_power
from ..core.errors import AccuracyWarning, DomainError

logger = logging.getLogger(__name__)

QUADRATURE_KINDS = ('trapezoid', 'simpson')
CLASSICAL_PROBLEMS = ('constant_rhs_1d', 'dirac_1d')
NODES_PER_FREQUENCY = 8


class QuadratureRule(object):
    """Composite Newton-Cotes rule on ``[lower, upper]``.

    Args:
        kind (str): ``'trapezoid'`` or ``'simpson'``.
        nodes (int): Number of nodes, endpoints included. Simpson needs an
            odd count.
        lower (float): Default: -1.
        upper (float): Default: 1.
    """

    def __init__(self, kind, nodes, lower=-1.0, upper=1.0):
        if kind not in QUADRATURE_KINDS:
            raise DomainError(f'kind must be one of {QUADRATURE_KINDS}, '
                              f'but got {kind!r}')
        if int(nodes) != nodes or nodes < 3:
            raise DomainError(f'A quadrature rule needs at least 3 nodes, '
                              f'but got {nodes}')
        if kind == 'simpson' and nodes % 2 == 0:
            raise DomainError(f'Simpson rules need an odd node count, '
                              f'but got {nodes}')
        self.kind = kind
        self.nodes = int(nodes)
        self.lower = float(lower)
        self.upper = float(upper)

    @property
    def step(self):
        return (self.upper - self.lower) / (self.nodes - 1)

    @property
    def points(self):
        return np.linspace(self.lower, self.upper, self.nodes)

    @property
    def weights(self):
        weights = np.ones(self.nodes)
        if self.kind == 'trapezoid':
            weights[[0, -1]] = 0.5
            return weights * self.step
        weights[1:-1:2] = 4.0
        weights[2:-1:2] = 2.0
        return weights * self.step / 3.0

    def integrate(self, values):
        values = np.asarray(values, dtype=np.float64)
        if values.shape[-1] != self.nodes:
            raise DomainError(f'Expected {self.nodes} samples, '
                              f'but got {values.shape[-1]}')
        return values @ self.weights

    def __repr__(self):
        return (f'{self.__class__.__name__}(kind={self.kind!r}, '
                f'nodes={self.nodes}, lower={self.lower}, '
                f'upper={self.upper})')


def _sine_mode(k, x):
    return np.sin(k * math.pi * (x + 1.0) / 2.0)


def coefficient_oracle(field, k, rule):
    """Quadrature of ``field * e_k`` over (-1, 1).

    Args:
        field (Field | array): Samples at ``rule.points``.
        k (int): Eigenfunction index.
        rule (QuadratureRule): The rule; its nodes must coincide with the
            samples.

    Returns:
        float: Approximation of ``(field, e_k)``.
    """
    if int(k) != k or k < 1:
        raise DomainError(f'k must be a positive integer, but got {k}')
    values = field.values if isinstance(field, Field) else np.asarray(
        field, dtype=np.float64)
    if values.ndim != 1 or values.size != rule.nodes:
        raise DomainError(f'Expected {rule.nodes} samples of a 1D field, '
                          f'but got shape {values.shape}')
    if not np.all(np.isfinite(values)):
        raise DomainError('coefficient_oracle needs finite samples')
    if rule.nodes < NODES_PER_FREQUENCY * k:
        msg = (f'{rule.nodes} nodes under-resolve e_{k}; at least '
               f'{NODES_PER_FREQUENCY * k} are needed')
        logger.warning(msg)
        warnings.warn(msg, AccuracyWarning)
    return float(rule.integrate(values * _sine_mode(k, rule.points)))


def apply_spectral_operator(coeffs, s, x):
    """Truncated spectral operator ``sum_k (k pi/2)^{2s} c_k e_k(x)``.

    Args:
        coeffs (Sequence[float]): Entry ``k - 1`` holds ``c_k``.
        s (float): Fractional power, 1 admitted.
        x (float | array): Points.
    """
    s = float(as_power(s, allow_classical=True))
    coeffs = np.asarray(coeffs, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    k = np.arange(1, coeffs.size + 1, dtype=np.float64)
    return truncated_expansion(coeffs * (k * math.pi / 2.0)**(2.0 * s), x)


def truncated_expansion(coeffs, x):
    """``sum_k c_k e_k(x)``, the partial Fourier sum of a datum."""
    coeffs = np.asarray(coeffs, dtype=np.float64)
    x = np.asarray(x, dtype=np.float64)
    k = np.arange(1, coeffs.size + 1, dtype=np.float64)
    values = np.tensordot(coeffs, _sine_mode(k[:, None], x.ravel()[None, :]),
                          axes=1).reshape(x.shape)
    return float(values) if values.ndim == 0 else values


def classical_reference(problem, x):
    """Classical (s = 1) solutions on (-1, 1) with zero boundary values.

    ``'constant_rhs_1d'``: ``(1 - x^2)/2``; ``'dirac_1d'``:
    ``(1 - |x|)/2``.
    """
    if problem not in CLASSICAL_PROBLEMS:
        raise DomainError(f'problem must be one of {CLASSICAL_PROBLEMS}, '
                          f'but got {problem!r}')
    x = np.asarray(x, dtype=np.float64)
    if np.any(np.abs(x) > 1.0):
        raise DomainError('Classical references are defined on [-1, 1]')
    if problem == 'constant_rhs_1d':
        values = (1.0 - x) * (1.0 + x) / 2.0
    else:
        values = (1.0 - np.abs(x)) / 2.0
    return float(values) if values.ndim == 0 else values


def five_point_laplacian(fn, x, y, h):
    """5-point Laplacian of a callable ``fn(x, y)`` at ``(x, y)``."""
    center = fn(x, y)
    return (fn(x + h, y) + fn(x - h, y) + fn(x, y + h) + fn(x, y - h) -
            4.0 * center) / (h * h)


def discrete_laplacian_residual(field2d, h=None):
    """Largest 5-point Laplacian over the interior of a uniform 2D grid.

    Args:
        field2d (Field | np.ndarray): Samples with shape ``(nx, ny)``.
        h (float | None): Grid spacing; taken from the field's grid when
            omitted.

    Returns:
        float: ``max |Delta_h u|`` over interior nodes.
    """
    if isinstance(field2d, Field):
        if not isinstance(field2d.grid, Grid2D):
            raise DomainError('discrete_laplacian_residual needs a 2D field')
        step_x, step_y = field2d.grid.step
        if h is None:
            if not math.isclose(step_x, step_y):
                raise DomainError('The grid spacing differs between axes')
            h = step_x
        values = field2d.values
    else:
        values = np.asarray(field2d, dtype=np.float64)
    if h is None or not h > 0:
        raise DomainError(f'Grid spacing must be positive, but got {h}')
    if values.ndim != 2 or min(values.shape) < 5:
        raise DomainError(f'Need at least 5 points per axis, but got shape '
                          f'{values.shape}')
    residual = (values[2:, 1:-1] + values[:-2, 1:-1] + values[1:-1, 2:] +
                values[1:-1, :-2] - 4.0 * values[1:-1, 1:-1]) / (h * h)
    return float(np.max(np.abs(residual)))
