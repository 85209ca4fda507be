"""Closed-form solutions of the Riesz formulation on the unit ball."""
import math

import numpy as np

from .domain import as_power, check_dimension
from .errors import DomainError, SingularityError
from .special_fn import fundamental_constant, is_log_case, riesz_ball_constant

# Normalization of the 1D half-Laplacian fundamental solution a_log*ln|x|.
LOG_CASE_CONSTANT = -1.0 / math.pi

BOUNDARY_TOL = 1e-14


def _norm(x, n):
    """Euclidean norm of a point (or a stack of points along the last axis
    for n = 2)."""
    x = np.asarray(x, dtype=np.float64)
    if n == 1:
        return np.abs(x)
    if x.shape[-1:] != (2, ):
        raise DomainError(f'2D points need a trailing axis of length 2, '
                          f'but got shape {x.shape}')
    return np.hypot(x[..., 0], x[..., 1])


def _scalar_or_array(values):
    return float(values) if np.ndim(values) == 0 else values


def riesz_constant_rhs(x, n, s):
    """Riesz solution ``c(n,s)(1 - |x|^2)^s`` of the unit right-hand side.

    Args:
        x (float | array): A point of the closed unit ball. For ``n = 2``
            the coordinates run along the last axis.
        n (int): Spatial dimension.
        s (float): Fractional power.

    Returns:
        float | np.ndarray: The solution, exactly 0 on the unit sphere.
    """
    check_dimension(n)
    s = float(as_power(s))
    r = _norm(x, n)
    if np.any(r > 1.0 + BOUNDARY_TOL):
        raise DomainError(f'riesz_constant_rhs is defined on the closed unit '
                          f'ball, but got |x| = {np.max(r)}')
    # (1 - r)(1 + r) keeps full precision next to the sphere
    gap = np.clip((1.0 - r) * (1.0 + r), 0.0, None)
    values = riesz_ball_constant(n, s) * gap**s
    return _scalar_or_array(values)


def fundamental_solution(x, n, s, log_constant=LOG_CASE_CONSTANT):
    """Fundamental solution of the Riesz fractional Laplacian.

    Power case: ``a(n,s)|x|^{2s-n}``. When ``2s = n`` it falls back to
    ``log_constant * ln|x|``.

    Args:
        x (float | array): Non-zero point(s).
        n (int): Spatial dimension.
        s (float): Fractional power.
        log_constant (float): Normalization of the logarithmic branch.
            Default: -1/pi.

    Returns:
        float | np.ndarray: Values at ``x``.
    """
    check_dimension(n)
    s = float(as_power(s))
    r = _norm(x, n)
    if np.any(r == 0.0):
        raise SingularityError('The fundamental solution is singular at the '
                               'origin')
    if is_log_case(n, s):
        return _scalar_or_array(log_constant * np.log(r))
    values = fundamental_constant(n, s) * r**(2.0 * s - n)
    return _scalar_or_array(values)


def riesz_exterior_trace(x, n, s, log_constant=LOG_CASE_CONSTANT):
    """Exterior data of the Dirac problem, i.e. the fundamental solution
    restricted to ``|x| >= 1``."""
    check_dimension(n)
    r = _norm(x, n)
    if np.any(r < 1.0):
        raise DomainError(f'The exterior trace is defined for |x| >= 1, '
                          f'but got |x| = {np.min(r)}')
    return fundamental_solution(x, n, s, log_constant=log_constant)


def dirac_boundary_trace_2d(t, s):
    """Trace ``a(2,s)(t^2 + 1)^{s-1}`` of the fundamental solution on the
    sides of the square ``[-1, 1]^2``.

    The same function serves all four sides.
    """
    s = float(as_power(s))
    t = np.asarray(t, dtype=np.float64)
    if np.any(np.abs(t) > 1.0):
        raise DomainError(f'Boundary coordinate must lie in [-1, 1], '
                          f'but got {t[np.abs(t) > 1.0].ravel()[0]}')
    values = fundamental_constant(2, s) * (t * t + 1.0)**(s - 1.0)
    return _scalar_or_array(values)
