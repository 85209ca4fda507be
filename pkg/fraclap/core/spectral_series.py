"""Eigenfunction series of the spectral fractional Laplacian.

The Dirichlet Laplacian on (-1, 1) has eigenpairs ``((k pi / 2)^2,
sin(k pi (x + 1) / 2))``; on the square the eigenfunctions are products of
two of them. Every solution here is an odd-frequency series over these
eigenfunctions, truncated and accumulated according to a
:class:`TruncationPolicy`.
"""
import math

import numpy as np
from scipy import special

from .domain import Field, Grid1D, as_power
from .errors import DomainError, SingularityError, UnsupportedCaseError
from .riesz import riesz_constant_rhs
from .summation import (DEFAULT_BLOCK_SIZE, DEFAULT_MAX_INDEX_2D,
                        TruncationPolicy, accumulate_series, as_truncation)

KERNEL_SINGULAR_TOL = 1e-14
KERNEL_FALLBACK_TOL = 1e-6

# upper bound on the number of floats held by one block of terms
MAX_BLOCK_ELEMENTS = 1 << 22
ROW_CHUNK = 32

PROBE_SERIES = ('w1_at_0', 'w2_at_origin', 'vN_prime_at_0')
PROBE_BUDGET = 100000000
PROBE_CHUNK = 1 << 20
ROW_DIRECT_TERMS = 16
STABILIZED_TOL = 1e-4


class EigenPair1D(object):
    """Dirichlet eigenpair ``((k pi/2)^2, sin(k pi (x+1)/2))`` on (-1, 1).

    Calling the pair evaluates the eigenfunction; it is exactly 0 at
    ``x = +-1``.
    """

    def __init__(self, k):
        if int(k) != k or k < 1:
            raise DomainError(f'Eigen index must be a positive integer, '
                              f'but got {k}')
        self.k = int(k)

    @property
    def eigenvalue(self):
        return (self.k * math.pi / 2.0)**2

    def __call__(self, x):
        x = np.asarray(x, dtype=np.float64)
        values = np.sin(self.k * math.pi * (x + 1.0) / 2.0)
        values = np.where(np.abs(x) == 1.0, 0.0, values)
        return float(values) if values.ndim == 0 else values

    def __repr__(self):
        return f'{self.__class__.__name__}(k={self.k})'


class EigenPair2D(object):
    """Dirichlet eigenpair of the square, ``e_k(x) e_m(y)``."""

    def __init__(self, k, m):
        self.x_pair = EigenPair1D(k)
        self.y_pair = EigenPair1D(m)

    @property
    def k(self):
        return self.x_pair.k

    @property
    def m(self):
        return self.y_pair.k

    @property
    def eigenvalue(self):
        return (self.k**2 + self.m**2) * math.pi**2 / 4.0

    def __call__(self, x, y):
        return self.x_pair(x) * self.y_pair(y)

    def __repr__(self):
        return f'{self.__class__.__name__}(k={self.k}, m={self.m})'


def eigenpair_1d(k):
    return EigenPair1D(k)


def eigenpair_2d(k, m):
    return EigenPair2D(k, m)


def _as_points(x, bound=1.0):
    x = np.asarray(x, dtype=np.float64)
    if not np.all(np.isfinite(x)):
        raise DomainError('Evaluation points must be finite')
    outside = x[np.abs(x) > bound]
    if outside.size:
        raise DomainError(f'Evaluation points must lie in [-{bound}, '
                          f'{bound}], but got {outside[0]}')
    return x


def _odd(start, stop):
    return 2.0 * np.arange(start, stop, dtype=np.float64) + 1.0


def _block_size(num_points):
    return int(max(1, min(DEFAULT_BLOCK_SIZE,
                          MAX_BLOCK_ELEMENTS // max(num_points, 1))))


def _odd_series(coeff_fn, trig, phase, trunc):
    """Sum ``coeff_fn(2m+1) * trig((2m+1) * phase)`` over m.

    ``phase`` is a flat array of angles, one per evaluation point.
    """

    def term_block(start, stop):
        odd = _odd(start, stop)
        return coeff_fn(odd)[:, None] * trig(np.outer(odd, phase))

    return accumulate_series(
        term_block,
        trunc.max_index,
        trunc.accumulation,
        block_size=_block_size(phase.size),
        shape=phase.shape)


def _reshape(values, shape):
    values = values.reshape(shape)
    return float(values) if values.ndim == 0 else values


def constant_rhs_tail_bound(s, max_index):
    """Upper bound of the terms ``m >= max_index`` dropped from the unit
    right-hand side series."""
    s = float(as_power(s, allow_classical=True))
    return (2.0 * (2.0 / math.pi)**(2.0 * s + 1.0) *
            (2.0 * max_index - 1.0)**(-2.0 * s) / (4.0 * s))


def fourier_coefficients_constant_rhs(s, count):
    """Coefficients ``(u, e_k)`` of the spectral solution for f = 1.

    Args:
        s (float): Fractional power in (0, 1].
        count (int): Number of coefficients.

    Returns:
        np.ndarray: Entry ``k - 1`` holds ``(u, e_k)``; even k give 0.
    """
    s = float(as_power(s, allow_classical=True))
    if int(count) != count or count < 1:
        raise DomainError(f'count must be a positive integer, but got {count}')
    k = np.arange(1, int(count) + 1, dtype=np.float64)
    coeffs = 2.0 * (2.0 / math.pi)**(2.0 * s + 1.0) * k**(-(2.0 * s + 1.0))
    coeffs[1::2] = 0.0
    return coeffs


def fourier_coefficients_dirac_1d(s, count):
    """Coefficients ``(w, e_k)``: ``(-1)^m ((2m+1) pi/2)^{-2s}`` at
    ``k = 2m+1`` and 0 at even k."""
    s = float(as_power(s, allow_classical=True))
    if int(count) != count or count < 1:
        raise DomainError(f'count must be a positive integer, but got {count}')
    k = np.arange(1, int(count) + 1, dtype=np.float64)
    coeffs = (k * math.pi / 2.0)**(-2.0 * s)
    coeffs[1::2] = 0.0
    coeffs[2::4] *= -1.0
    return coeffs


def spectral_constant_rhs_from_left(dist, s, trunc=None):
    """Spectral solution for f = 1 at ``x = -1 + dist``.

    Taking the distance to the left end as argument avoids the cancellation
    of forming ``x + 1`` in the boundary layer.

    Args:
        dist (float | array): Distance to ``x = -1``, in [0, 2].
        s (float): Fractional power in (0, 1].
        trunc (TruncationPolicy | int | None): Series truncation.

    Returns:
        float | np.ndarray: Partial sums.
    """
    s = float(as_power(s, allow_classical=True))
    trunc = as_truncation(trunc)
    dist = np.asarray(dist, dtype=np.float64)
    if np.any(dist < 0.0) or np.any(dist > 2.0):
        raise DomainError('Distance to the left end must lie in [0, 2]')
    scale = 2.0 * (2.0 / math.pi)**(2.0 * s + 1.0)
    flat = dist.ravel()
    values = _odd_series(lambda odd: scale * odd**(-(2.0 * s + 1.0)),
                         np.sin, flat * (math.pi / 2.0), trunc)
    values[(flat == 0.0) | (flat == 2.0)] = 0.0
    return _reshape(values, dist.shape)


def spectral_constant_rhs_1d(x, s, trunc=None):
    """Spectral solution of ``(-Delta)^s u = 1`` on (-1, 1).

    ``u_s(x) = 2 (2/pi)^{2s+1} sum_m (2m+1)^{-2s-1} sin((2m+1) pi (x+1)/2)``,
    summed over ``m < trunc.max_index``. ``s = 1`` gives the classical
    solution ``(1 - x^2)/2``.
    """
    x = _as_points(x)
    # the solution is even, evaluate through the distance to the boundary
    return spectral_constant_rhs_from_left(1.0 - np.abs(x), s, trunc)


def spectral_dirac_1d(x, s, trunc=None):
    """Homogeneous spectral solution with a Dirac mass at the origin.

    ``w_{1,s}(x) = (2/pi)^{2s} sum_m (2m+1)^{-2s} cos((2m+1) pi x / 2)``.
    The series diverges at ``x = 0`` for ``s <= 1/2``; the partial sum is
    returned regardless.
    """
    s = float(as_power(s, allow_classical=True))
    trunc = as_truncation(trunc)
    x = _as_points(x)
    flat = np.abs(x).ravel()
    scale = (2.0 / math.pi)**(2.0 * s)
    values = _odd_series(lambda odd: scale * odd**(-2.0 * s), np.cos,
                         flat * (math.pi / 2.0), trunc)
    values[flat == 1.0] = 0.0
    return _reshape(values, x.shape)


def spectral_dirac_1d_sine_form(x, s, trunc=None):
    """Same series written over the eigenfunctions,
    ``sum_m (-1)^m ((2m+1) pi/2)^{-2s} e_{2m+1}(x)``."""
    s = float(as_power(s, allow_classical=True))
    trunc = as_truncation(trunc)
    x = _as_points(x)
    flat = x.ravel()

    def coeff_fn(odd):
        signs = np.where(np.mod(odd, 4.0) == 1.0, 1.0, -1.0)
        return signs * (odd * math.pi / 2.0)**(-2.0 * s)

    values = _odd_series(coeff_fn, np.sin, (flat + 1.0) * (math.pi / 2.0),
                         trunc)
    values[np.abs(flat) == 1.0] = 0.0
    return _reshape(values, x.shape)


def dirichlet_kernel_sum(p, P, x):
    """Closed form of ``sum_{m=p}^{P-1} cos((2m+1) pi x / 2)``.

    Equals ``(sin(P pi x) - sin(p pi x)) / (2 sin(pi x / 2))``.

    Args:
        p (int): First index.
        P (int): One past the last index, ``P > p >= 0``.
        x (float | array): Points with ``sin(pi x / 2) != 0``.
    """
    if int(p) != p or int(P) != P or not 0 <= p < P:
        raise DomainError(f'Need integers 0 <= p < P, but got p={p}, P={P}')
    x = np.asarray(x, dtype=np.float64)
    half_sine = np.sin(math.pi * x / 2.0)
    if np.any(np.abs(half_sine) < KERNEL_SINGULAR_TOL):
        raise SingularityError('Dirichlet kernel denominator sin(pi x/2) '
                               'vanishes')
    values = (np.sin(P * math.pi * x) -
              np.sin(p * math.pi * x)) / (2.0 * half_sine)
    return float(values) if values.ndim == 0 else values


def partial_sum_vN(y, N):
    """``v_N(y) = 2 sum_{m<N} 4 / (pi^2 (2m+1)^2) sin((2m+1) pi y / 2)``."""
    if int(N) != N or N < 1:
        raise DomainError(f'N must be a positive integer, but got {N}')
    y = np.asarray(y, dtype=np.float64)
    trunc = TruncationPolicy(int(N))
    values = _odd_series(lambda odd: 8.0 / (math.pi * odd)**2, np.sin,
                         y.ravel() * (math.pi / 2.0), trunc)
    return _reshape(values, y.shape)


def vN_second_derivative(y, N):
    """Closed form ``v_N''(y) = -(1 - cos(N pi y)) / sin(pi y / 2)``."""
    if int(N) != N or N < 1:
        raise DomainError(f'N must be a positive integer, but got {N}')
    y = np.asarray(y, dtype=np.float64)
    half_sine = np.sin(math.pi * y / 2.0)
    if np.any(y == 0.0) or np.any(np.abs(half_sine) < KERNEL_SINGULAR_TOL):
        raise SingularityError('v_N second derivative is singular at y = 0')
    values = -(1.0 - np.cos(N * math.pi * y)) / half_sine
    return float(values) if values.ndim == 0 else values


def vN_first_derivative_at_zero(N):
    """``v_N'(0) = (4/pi) sum_{m<N} 1/(2m+1)``, unbounded in N."""
    if int(N) != N or N < 1:
        raise DomainError(f'N must be a positive integer, but got {N}')
    trunc = TruncationPolicy(int(N))
    return float(
        accumulate_series(lambda start, stop: 4.0 / (math.pi * _odd(
            start, stop)), trunc.max_index, trunc.accumulation))


def _kernel_matrix(num_terms, y):
    """``B[j, p] = sum_{m <= j} cos((2m+1) pi y_p / 2)``.

    Columns with ``|sin(pi y/2)| <= 1e-6`` are accumulated term by term,
    the others use the closed form.
    """
    half_sine = np.sin(math.pi * y / 2.0)
    regular = np.abs(half_sine) > KERNEL_FALLBACK_TOL
    kernel = np.empty((num_terms, y.size), dtype=np.float64)
    count = np.arange(1, num_terms + 1, dtype=np.float64)
    if np.any(regular):
        kernel[:, regular] = np.sin(np.outer(count, math.pi * y[regular])) \
            / (2.0 * half_sine[regular])
    if not np.all(regular):
        odd = _odd(0, num_terms)
        kernel[:, ~regular] = np.cumsum(
            np.cos(np.outer(odd, math.pi * y[~regular] / 2.0)), axis=0)
    return kernel


def _row_weights(k_start, k_stop, num_terms, s):
    """Summation-by-parts weights of the inner series.

    Row ``k`` holds ``alpha_m - alpha_{m+1}`` with
    ``alpha_m = ((2k+1)^2 + (2m+1)^2)^{-s}``, the last entry being
    ``alpha_{M-1}`` itself.
    """
    a2 = _odd(k_start, k_stop)[:, None]**2
    b2 = _odd(0, num_terms)[None, :]**2
    alpha = (a2 + b2)**(-s)
    weights = np.empty_like(alpha)
    weights[:, :-1] = alpha[:, :-1] - alpha[:, 1:]
    weights[:, -1] = alpha[:, -1]
    return weights


def dirac_2d_row_sums(y, s, trunc=None):
    """Inner sums ``R_k(y) = sum_{m<M} ((2k+1)^2 + (2m+1)^2)^{-s}
    cos((2m+1) pi y / 2)`` for ``k < M``.

    Summation by parts turns each row into a sum of non-negative weights
    times Dirichlet kernels, so ``|R_k(y)| <= alpha_0 / (2 |sin(pi y/2)|)``.

    Returns:
        np.ndarray: Shape ``(M, *y.shape)``.
    """
    s = float(as_power(s, allow_classical=True))
    trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_2D)
    y = _as_points(y)
    flat = y.ravel()
    num_terms = trunc.max_index
    kernel = _kernel_matrix(num_terms, flat)
    rows = np.empty((num_terms, flat.size), dtype=np.float64)
    for start in range(0, num_terms, ROW_CHUNK):
        stop = min(start + ROW_CHUNK, num_terms)
        rows[start:stop] = _row_weights(start, stop, num_terms, s) @ kernel
    return rows.reshape((num_terms, ) + y.shape)


def _outer_sum(rows, x, s, trunc):
    """Sum ``(2/pi)^{2s} cos((2k+1) pi x/2) rows[k]`` over k ascending."""
    scale = (2.0 / math.pi)**(2.0 * s)
    out_shape = np.broadcast_shapes(x.shape, rows.shape[1:])

    def term_block(start, stop):
        cosines = np.cos(np.multiply.outer(_odd(start, stop), x) * math.pi /
                         2.0)
        return scale * cosines * rows[start:stop]

    return accumulate_series(
        term_block,
        trunc.max_index,
        trunc.accumulation,
        block_size=_block_size(int(np.prod(out_shape))),
        shape=out_shape)


def spectral_dirac_2d(x, y, s, trunc=None):
    """Homogeneous spectral solution on the square with a Dirac mass at 0.

    ``w_{2,s}(x, y) = (2/pi)^{2s} sum_{k,m} ((2k+1)^2 + (2m+1)^2)^{-s}
    cos((2k+1) pi x/2) cos((2m+1) pi y/2)``, both indices below
    ``trunc.max_index``. For every k the inner sum over m is formed first
    (see :func:`dirac_2d_row_sums`), then rows are accumulated in ascending
    k.
    """
    s = float(as_power(s, allow_classical=True))
    trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_2D)
    x, y = np.broadcast_arrays(_as_points(x), _as_points(y))
    flat_x, flat_y = x.ravel(), y.ravel()
    rows = dirac_2d_row_sums(flat_y, s, trunc)
    values = _outer_sum(rows, flat_x, s, trunc)
    values[(np.abs(flat_x) == 1.0) | (np.abs(flat_y) == 1.0)] = 0.0
    return _reshape(values, x.shape)


def spectral_dirac_2d_grid(x_points, y_points, s, trunc=None):
    """Evaluate :func:`spectral_dirac_2d` on the tensor grid
    ``x_points x y_points``.

    The inner sums depend on y only and are computed once per grid column.

    Returns:
        np.ndarray: Shape ``(len(x_points), len(y_points))``.
    """
    s = float(as_power(s, allow_classical=True))
    trunc = as_truncation(trunc, DEFAULT_MAX_INDEX_2D)
    x_points = _as_points(x_points).ravel()
    y_points = _as_points(y_points).ravel()
    rows = dirac_2d_row_sums(y_points, s, trunc)
    values = _outer_sum(rows[:, None, :], x_points[:, None], s, trunc)
    values[np.abs(x_points) == 1.0, :] = 0.0
    values[:, np.abs(y_points) == 1.0] = 0.0
    return values


def constant_rhs_field(grid, s, trunc=None, formulation='spectral'):
    """Sample the unit right-hand side solution on a 1D grid.

    The spectral field carries the rigorous tail bound in its truncation.
    """
    if not isinstance(grid, Grid1D):
        raise UnsupportedCaseError('The unit right-hand side solutions are '
                                   'sampled on 1D grids only')
    s = as_power(s, allow_classical=formulation == 'spectral')
    if formulation == 'riesz':
        values = riesz_constant_rhs(grid.points, 1, s)
        return Field(grid, values, 'riesz', None, s)

    trunc = as_truncation(trunc)
    trunc = trunc.with_tail(constant_rhs_tail_bound(s, trunc.max_index))
    values = spectral_constant_rhs_1d(grid.points, s, trunc)
    return Field(grid, values, formulation, trunc, s)


class SeriesProbeReport(object):
    """Growth report of a divergence probe.

    Attributes:
        series (str): Probed series tag.
        param (float): ``s`` or ``N``.
        thresholds (list[float]): Requested thresholds.
        crossings (list[int | None]): Number of terms after which the partial
            sum first exceeds each threshold, None if not crossed within the
            budget.
        trajectory (list[tuple]): ``(terms, partial_sum)`` checkpoints.
        terms_used (int): Terms summed before stopping.
        final_value (float): Last partial sum.
        converges (bool): Whether the series is known to converge.
        stabilized (bool | None): For convergent series, whether the last
            tenfold increase of the term count moved the sum by at most 1e-4.
        tail_bound (float | None): Bound of the dropped tail if convergent.
        lower_bound (float | None): Logarithmic lower bound of the partial
            sum for the harmonic cases.
    """

    def __init__(self, series, param, thresholds, crossings, trajectory,
                 terms_used, final_value, converges, stabilized=None,
                 tail_bound=None, lower_bound=None, budget=PROBE_BUDGET):
        self.series = series
        self.param = param
        self.thresholds = list(thresholds)
        self.crossings = list(crossings)
        self.trajectory = list(trajectory)
        self.terms_used = int(terms_used)
        self.final_value = float(final_value)
        self.converges = converges
        self.stabilized = stabilized
        self.tail_bound = tail_bound
        self.lower_bound = lower_bound
        self.budget = budget

    def crossed(self, threshold):
        return self.crossings[self.thresholds.index(threshold)] is not None

    @property
    def all_crossed(self):
        return all(c is not None for c in self.crossings)

    def to_dict(self):
        return dict(
            series=self.series,
            param=self.param,
            thresholds=self.thresholds,
            crossings=self.crossings,
            trajectory=[list(item) for item in self.trajectory],
            terms_used=self.terms_used,
            final_value=self.final_value,
            converges=self.converges,
            stabilized=self.stabilized,
            tail_bound=self.tail_bound,
            lower_bound=self.lower_bound,
            budget=self.budget)

    def __repr__(self):
        return (f'{self.__class__.__name__}(series={self.series!r}, '
                f'param={self.param}, crossings={self.crossings}, '
                f'final_value={self.final_value})')


def _decades(limit):
    marks, mark = [], 10
    while mark < limit:
        marks.append(mark)
        mark *= 10
    marks.append(limit)
    return marks


def _probe_increasing(chunk_fn, num_items, thresholds, stop_when_crossed,
                      chunk_size=PROBE_CHUNK):
    """Run the partial sums of a positive series chunk by chunk.

    Returns the item-count at each threshold crossing, checkpoint values at
    the decades, the number of items consumed and the final sum.
    """
    marks = _decades(num_items)
    crossings = [None] * len(thresholds)
    trajectory = []
    total, start = 0.0, 0
    while start < num_items:
        stop = min(start + chunk_size, num_items)
        partial = total + np.cumsum(chunk_fn(start, stop))
        for i, threshold in enumerate(thresholds):
            if crossings[i] is None and partial[-1] > threshold:
                idx = int(np.searchsorted(partial, threshold, side='right'))
                crossings[i] = start + idx + 1
        for mark in marks:
            if start < mark <= stop:
                trajectory.append((mark, float(partial[mark - start - 1])))
        total, start = float(partial[-1]), stop
        if stop_when_crossed and all(c is not None for c in crossings):
            break
    if not trajectory or trajectory[-1][0] != start:
        trajectory.append((start, total))
    return crossings, trajectory, start, total


def _completed_rows(k_start, k_stop, s):
    """Limits ``sum_{m>=0} ((2k+1)^2 + (2m+1)^2)^{-s}`` for s > 1/2.

    The first terms are summed directly and the rest by Euler-Maclaurin
    with the integral written as an incomplete beta function.
    """
    a = _odd(k_start, k_stop)
    a2 = a[:, None]**2
    direct = np.sum((a2 + _odd(0, ROW_DIRECT_TERMS)[None, :]**2)**(-s),
                    axis=1)
    u0 = 2.0 * ROW_DIRECT_TERMS + 1.0
    head = (a * a + u0 * u0)**(-s)
    slope = -4.0 * s * u0 * (a * a + u0 * u0)**(-s - 1.0)
    integral = 0.25 * a**(1.0 - 2.0 * s) * special.beta(s - 0.5, 0.5) * \
        special.betainc(s - 0.5, 0.5, a * a / (a * a + u0 * u0))
    return direct + integral + head / 2.0 - slope / 12.0


def _square_increments(k_start, k_stop, s):
    """``D_K = S(K+1) - S(K)`` for the square truncations
    ``S(K) = sum_{k,m<K}``, without the prefactor."""
    rows = np.arange(k_start, k_stop)
    a2 = _odd(k_start, k_stop)[:, None]**2
    b2 = _odd(0, k_stop)[None, :]**2
    terms = (a2 + b2)**(-s)
    below = np.arange(k_stop)[None, :] < rows[:, None]
    diag = terms[np.arange(rows.size), rows]
    return diag + 2.0 * np.sum(np.where(below, terms, 0.0), axis=1)


def divergence_probe(series, param, thresholds=(10.0, ), budget=PROBE_BUDGET):
    """Computational witness for the growth of a positive series.

    Args:
        series (str): ``'w1_at_0'`` (``w_{1,s}(0)``), ``'w2_at_origin'``
            (``w_{2,s}(0, 0)``) or ``'vN_prime_at_0'`` (``v_N'(0)``).
        param (float | int): ``s`` for the Dirac series, the largest ``N``
            for ``v_N'(0)``.
        thresholds (Sequence[float]): Values whose crossing is reported.
        budget (int): Maximum number of scalar terms. Default: 1e8.

    Returns:
        SeriesProbeReport: The growth report.
    """
    if series not in PROBE_SERIES:
        raise DomainError(f'series must be one of {PROBE_SERIES}, '
                          f'but got {series!r}')
    thresholds = [float(t) for t in thresholds]
    if int(budget) != budget or budget < 1:
        raise DomainError(f'The term budget must be a positive integer, '
                          f'but got {budget}')
    budget = int(budget)

    if series == 'vN_prime_at_0':
        num_terms = min(int(param), budget)
        if num_terms < 1:
            raise DomainError(f'N must be a positive integer, but got {param}')
        crossings, trajectory, used, total = _probe_increasing(
            lambda start, stop: 4.0 / (math.pi * _odd(start, stop)),
            num_terms, thresholds, False)
        return SeriesProbeReport(
            series, int(param), thresholds, crossings, trajectory, used,
            total, converges=False,
            lower_bound=4.0 / math.pi * math.log(used) / 2.0, budget=budget)

    s = float(as_power(param))
    scale = (2.0 / math.pi)**(2.0 * s)

    if series == 'w1_at_0':
        converges = s > 0.5 and not math.isclose(s, 0.5)
        crossings, trajectory, used, total = _probe_increasing(
            lambda start, stop: scale * _odd(start, stop)**(-2.0 * s),
            budget, thresholds, not converges)
        report = SeriesProbeReport(series, s, thresholds, crossings,
                                   trajectory, used, total, converges,
                                   budget=budget)
        if converges:
            report.tail_bound = scale * (2.0 * used - 1.0)**(
                1.0 - 2.0 * s) / (2.0 * (2.0 * s - 1.0))
            previous = [v for n, v in trajectory if n * 10 == used]
            report.stabilized = bool(previous) and \
                abs(total - previous[0]) <= STABILIZED_TOL
        elif math.isclose(s, 0.5):
            report.lower_bound = scale * math.log(used) / 2.0
        return report

    # w2 at the origin diverges for every s
    if s > 0.5:
        # each row is completed to its limit, trajectory over rows
        row_terms = ROW_DIRECT_TERMS + 1
        if budget < row_terms:
            raise DomainError(f'w2_at_origin completes each row with '
                              f'{row_terms} terms, but the budget is '
                              f'{budget}')
        crossings, trajectory, rows, total = _probe_increasing(
            lambda start, stop: scale * _completed_rows(start, stop, s),
            budget // row_terms, thresholds, True,
            chunk_size=PROBE_CHUNK >> 2)
        crossings = [None if c is None else c * row_terms for c in crossings]
        trajectory = [(n * row_terms, v) for n, v in trajectory]
        used = rows * row_terms
    else:
        # rows diverge, use square truncations k, m < K
        crossings, trajectory, size, total = _probe_increasing(
            lambda start, stop: scale * _square_increments(start, stop, s),
            math.isqrt(budget), thresholds, True, chunk_size=ROW_CHUNK * 8)
        crossings = [None if c is None else c * c for c in crossings]
        trajectory = [(n * n, v) for n, v in trajectory]
        used = size * size
    return SeriesProbeReport(series, s, thresholds, crossings, trajectory,
                             used, total, converges=False, budget=budget)
