"""Boundary-layer analysis of the unit right-hand side solutions."""
import numpy as np

from ..core.domain import as_power
from ..core.errors import DomainError
from ..core.riesz import riesz_constant_rhs
from ..core.special_fn import riesz_ball_constant
from ..core.spectral_series import (spectral_constant_rhs_1d,
                                    spectral_constant_rhs_from_left)
from ..core.summation import DEFAULT_MAX_INDEX_EXPONENT, as_truncation

TABLE_S = (0.25, 0.5, 0.75)
TABLE_H = 2.0**-10
TABLE_J = (1, 20)
LOG_EXPONENT = 0.85
# exponent that reproduces the reference log-model row at h = 2^-10
REFERENCE_LOG_EXPONENT = 0.82

EXPONENT_H = 1e-6
EXPONENT_J = (1, 20)

RATIO_FORMULATIONS = ('riesz', 'spectral', 'spectral_log')


def _j_values(j_range, h):
    first, last = j_range
    if int(first) != first or int(last) != last or not 1 <= first <= last:
        raise DomainError(f'j_range must satisfy 1 <= first <= last, '
                          f'but got {j_range}')
    if not h > 0:
        raise DomainError(f'Grid step must be positive, but got {h}')
    if last * h >= 2.0:
        raise DomainError(f'j * h must stay below 2, but got {last * h}')
    return np.arange(int(first), int(last) + 1, dtype=np.float64)


class RatioRow(object):
    """One row of the boundary-layer ratio table.

    The ratios are ``u(-1 + j h) / model(j h)`` for every j of the range.
    """

    def __init__(self, s, formulation, exponent_model, j_range, h, ratios):
        if formulation not in RATIO_FORMULATIONS:
            raise DomainError(f'formulation must be one of '
                              f'{RATIO_FORMULATIONS}, but got {formulation!r}')
        self.s = as_power(s)
        self.formulation = formulation
        self.exponent_model = exponent_model
        self.j_range = tuple(int(j) for j in j_range)
        self.h = float(h)
        self.ratios = np.asarray(ratios, dtype=np.float64)

    @property
    def min(self):
        return float(self.ratios.min())

    @property
    def max(self):
        return float(self.ratios.max())

    @property
    def spread(self):
        return self.max / self.min

    def to_dict(self):
        return dict(
            s=float(self.s),
            formulation=self.formulation,
            model=self.exponent_model,
            j_first=self.j_range[0],
            j_last=self.j_range[1],
            h=self.h,
            min=self.min,
            max=self.max)

    def __repr__(self):
        return (f'{self.__class__.__name__}(s={float(self.s)}, '
                f'formulation={self.formulation!r}, '
                f'model={self.exponent_model!r}, min={self.min:.4f}, '
                f'max={self.max:.4f})')


def riesz_ratios(s, dist):
    """``u^R(-1 + d) / d^s``."""
    s = as_power(s)
    return riesz_constant_rhs(dist - 1.0, 1, s) / dist**float(s)


def spectral_ratios(s, dist, trunc=None, log_exponent=None):
    """``u_s(-1 + d) / d^{min(2s,1)}``, or ``u_s / (d |ln d|^k)`` when
    ``log_exponent`` k is given."""
    s = as_power(s)
    values = spectral_constant_rhs_from_left(dist, s, trunc)
    if log_exponent is None:
        return values / dist**s.boundary_exponent
    return values / (dist * np.abs(np.log(dist))**log_exponent)


def boundary_ratio_table(s_list=TABLE_S,
                         h=TABLE_H,
                         j_range=TABLE_J,
                         trunc=None,
                         log_exponent=LOG_EXPONENT):
    """Steepness of the boundary layers next to ``x = -1``.

    Rows come in the order Riesz (one per s), spectral (one per s), then the
    logarithmic models, one per exponent, for every ``s = 1/2`` of the
    list.

    Args:
        s_list (Sequence[float]): Fractional powers.
        h (float): Grid step. Default: 2^-10.
        j_range (tuple[int]): Inclusive range of j. Default: (1, 20).
        trunc (TruncationPolicy | int | None): Spectral truncation.
        log_exponent (float | Sequence[float]): Power of ``|ln d|`` in the
            s = 1/2 model, one row per value. Default: 0.85.

    Returns:
        list[RatioRow]: The rows.
    """
    s_list = [as_power(s) for s in s_list]
    log_exponents = [float(k) for k in np.atleast_1d(log_exponent)]
    trunc = as_truncation(trunc)
    dist = _j_values(j_range, h) * h

    rows = []
    for s in s_list:
        rows.append(
            RatioRow(s, 'riesz', f'dist^{float(s):g}', j_range, h,
                     riesz_ratios(s, dist)))
    for s in s_list:
        rows.append(
            RatioRow(s, 'spectral', f'dist^{s.boundary_exponent:g}', j_range,
                     h, spectral_ratios(s, dist, trunc)))
    for s in s_list:
        if not s.is_half:
            continue
        for k in log_exponents:
            rows.append(
                RatioRow(s, 'spectral_log', f'dist*|ln dist|^{k:g}', j_range,
                         h, spectral_ratios(s, dist, trunc, k)))
    return rows


class ExponentEstimate(object):
    """Pointwise estimates ``k_j`` of the logarithmic exponent at s = 1/2.

    The values are kept raw; :attr:`median` is the headline estimate.
    """

    def __init__(self, h, j_range, k_values, trunc):
        self.h = float(h)
        self.j_range = tuple(int(j) for j in j_range)
        self.k_values = np.asarray(k_values, dtype=np.float64)
        self.trunc = trunc

    @property
    def j_values(self):
        return np.arange(self.j_range[0], self.j_range[1] + 1)

    @property
    def median(self):
        return float(np.median(self.k_values))

    def to_dict(self):
        return dict(
            h=self.h,
            j_range=list(self.j_range),
            k_values=self.k_values.tolist(),
            median=self.median,
            trunc=self.trunc.to_dict())

    def __repr__(self):
        return (f'{self.__class__.__name__}(h={self.h}, '
                f'j_range={self.j_range}, median={self.median:.4f})')


def log_exponent_estimate(h=EXPONENT_H, j_range=EXPONENT_J, trunc=None):
    """Estimate k in ``u_{1/2}(x) ~ (x+1) |ln(x+1)|^k`` near ``x = -1``.

    ``k_j = ln(u(-1 + j h) / (j h)) / ln|ln(j h)|``.

    Args:
        h (float): Grid step. Default: 1e-6.
        j_range (tuple[int]): Inclusive range of j. Default: (1, 20).
        trunc (TruncationPolicy | int | None): Truncation, 1e6 terms when
            omitted.

    Returns:
        ExponentEstimate: One k per j.
    """
    trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_EXPONENT)
    dist = _j_values(j_range, h) * h
    if np.any(np.abs(np.log(dist)) <= 1.0):
        raise DomainError(f'|ln(j h)| must exceed 1 for every j, but '
                          f'j h reaches {dist.max()}')
    values = spectral_constant_rhs_from_left(dist, 0.5, trunc)
    k_values = np.log(values / dist) / np.log(np.abs(np.log(dist)))
    return ExponentEstimate(h, j_range, k_values, trunc)


class MaxValueCurves(object):
    """Values at ``x = 0`` of both unit right-hand side solutions over s."""

    def __init__(self, s_values, riesz, spectral):
        self.s_values = np.asarray(s_values, dtype=np.float64)
        self.riesz = np.asarray(riesz, dtype=np.float64)
        self.spectral = np.asarray(spectral, dtype=np.float64)

    def argmax_riesz(self, lower=0.0, upper=1.0):
        """s of the largest Riesz value with ``lower < s < upper``."""
        mask = (self.s_values > lower) & (self.s_values < upper)
        if not np.any(mask):
            raise DomainError(f'No s in ({lower}, {upper})')
        idx = np.flatnonzero(mask)[np.argmax(self.riesz[mask])]
        return float(self.s_values[idx])

    def to_dict(self):
        return dict(
            s=self.s_values.tolist(),
            u_riesz=self.riesz.tolist(),
            u_spectral=self.spectral.tolist())


def max_value_curves(s_grid, trunc=None):
    """``(u^R_s(0), u_s(0)) = (c(1,s), spectral series at 0)`` per s.

    ``s = 1`` is admitted as the classical limit.
    """
    trunc = as_truncation(trunc)
    s_grid = [as_power(s, allow_classical=True) for s in s_grid]
    riesz = [riesz_ball_constant(1, s, allow_classical=True) for s in s_grid]
    spectral = [spectral_constant_rhs_1d(0.0, s, trunc) for s in s_grid]
    return MaxValueCurves([float(s) for s in s_grid], riesz, spectral)


def pointwise_domination(s, points, trunc=None):
    """``u^R_s(x) - u_s(x)`` at ``points``; non-negative inside (-1, 1)."""
    s = as_power(s)
    return riesz_constant_rhs(points, 1, s) - spectral_constant_rhs_1d(
        points, s, trunc)


def boundary_envelope(s, eps):
    """Bounds ``[c (2 - eps_max)^s, c 2^s]`` of ``u^R(-1+eps)/eps^s``."""
    s = as_power(s)
    c = riesz_ball_constant(1, s)
    eps = np.asarray(eps, dtype=np.float64)
    return c * (2.0 - eps.max())**float(s), c * 2.0**float(s)
