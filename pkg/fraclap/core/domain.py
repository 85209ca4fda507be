import math

import numpy as np

from .errors import DomainError

FORMULATIONS = ('riesz', 'spectral')


class FracPower(float):
    """Fractional exponent ``s`` of the operator :math:`(-\\Delta)^s`.

    A float restricted to the open interval (0, 1). The classical limit
    ``s = 1`` is admitted only when ``allow_classical`` is set; it is used by
    the spectral series evaluators for oracle comparisons against the
    classical Green functions.

    Args:
        value (float): The exponent.
        allow_classical (bool): Admit ``s = 1``. Default: False.
    """

    def __new__(cls, value, allow_classical=False):
        try:
            value = float(value)
        except (TypeError, ValueError):
            raise DomainError(f'Fractional power must be a real number, '
                              f'but got {value!r}')

        upper_ok = value < 1.0 or (allow_classical and value == 1.0)
        if not (math.isfinite(value) and value > 0.0 and upper_ok):
            upper = '1]' if allow_classical else '1)'
            raise DomainError(f'Fractional power must be in (0, {upper}, '
                              f'but got {value}')

        obj = super().__new__(cls, value)
        obj.allow_classical = allow_classical
        return obj

    def __getnewargs__(self):
        return float(self), self.allow_classical

    def __repr__(self):
        return f'FracPower({float(self)!r})'

    @property
    def is_classical(self):
        return float(self) == 1.0

    @property
    def below_quarter(self):
        return self < 0.25

    @property
    def below_half(self):
        return self < 0.5

    @property
    def is_half(self):
        return math.isclose(self, 0.5, rel_tol=0.0, abs_tol=1e-12)

    @property
    def above_half(self):
        return self > 0.5 and not self.is_half

    @property
    def above_three_quarters(self):
        return self > 0.75

    @property
    def boundary_exponent(self):
        """Power of the distance to the boundary in the spectral layer."""
        return min(2.0 * self, 1.0)

    @property
    def spectral_regime(self):
        """Boundary regularity case of the spectral solution for smooth f.

        Returns:
            str: ``'power'`` (dist^{2s}) for s < 1/2, ``'log'``
            (dist |ln dist|) for s = 1/2 and ``'linear'`` (dist) for s > 1/2.
        """
        if self.is_half:
            return 'log'
        return 'power' if self < 0.5 else 'linear'


def as_power(s, allow_classical=False):
    """Return ``s`` as a validated :class:`FracPower`."""
    if isinstance(s, FracPower) and (allow_classical or not s.is_classical):
        return s
    return FracPower(s, allow_classical=allow_classical)


def check_dimension(n):
    if n not in (1, 2):
        raise DomainError(f'Spatial dimension must be 1 or 2, but got {n}')
    return n


def riesz_fundamental_in_l2_loc(n, s):
    """Whether ``a(n,s)|x|^{2s-n}`` is locally square integrable (s > n/4)."""
    check_dimension(n)
    return float(as_power(s)) > n / 4.0


def spectral_dirac_in_l2(n, s):
    """Whether the homogeneous spectral Dirac solution is in L2."""
    check_dimension(n)
    return float(as_power(s)) > (0.25 if n == 1 else 0.5)


def spectral_dirac_finite_at_origin(n, s):
    """Whether the homogeneous spectral Dirac series converges at 0."""
    check_dimension(n)
    return n == 1 and as_power(s).above_half


def spectral_dirac_continuous_off_origin(n, s):
    """Whether the spectral Dirac series is continuous away from 0."""
    check_dimension(n)
    s = as_power(s)
    if n == 1:
        return not s.is_half
    return s.above_half


class Grid1D(object):
    """Uniform grid with ``num`` points on ``[lower, upper]``.

    Args:
        num (int): Number of points, endpoints included. At least 2.
        lower (float): Left end. Default: -1.
        upper (float): Right end. Default: 1.
    """

    def __init__(self, num, lower=-1.0, upper=1.0):
        if int(num) != num or num < 2:
            raise DomainError(f'Grid needs at least 2 points, but got {num}')
        if not lower < upper:
            raise DomainError(f'Invalid grid interval [{lower}, {upper}]')

        self.num = int(num)
        self.lower = float(lower)
        self.upper = float(upper)

    @property
    def step(self):
        return (self.upper - self.lower) / (self.num - 1)

    @property
    def points(self):
        return np.linspace(self.lower, self.upper, self.num)

    @property
    def shape(self):
        return (self.num, )

    def __len__(self):
        return self.num

    def __eq__(self, other):
        return (isinstance(other, Grid1D)
                and (self.num, self.lower, self.upper)
                == (other.num, other.lower, other.upper))

    def __repr__(self):
        return (f'{self.__class__.__name__}(num={self.num}, '
                f'lower={self.lower}, upper={self.upper})')

    def to_dict(self):
        return dict(num=self.num, lower=self.lower, upper=self.upper)


class Grid2D(object):
    """Tensor grid on ``[-1, 1]^2`` built from two :class:`Grid1D` axes.

    Values sampled on it are stored with shape ``(num_x, num_y)``: the first
    index runs along x, the second along y.

    Args:
        num_x (int): Number of points along x.
        num_y (int | None): Number of points along y. Defaults to ``num_x``.
    """

    def __init__(self, num_x, num_y=None):
        self.x_axis = Grid1D(num_x)
        self.y_axis = Grid1D(num_x if num_y is None else num_y)

    @property
    def shape(self):
        return (self.x_axis.num, self.y_axis.num)

    @property
    def step(self):
        return self.x_axis.step, self.y_axis.step

    def mesh(self):
        return np.meshgrid(
            self.x_axis.points, self.y_axis.points, indexing='ij')

    def __len__(self):
        return self.x_axis.num * self.y_axis.num

    def __eq__(self, other):
        return (isinstance(other, Grid2D) and self.x_axis == other.x_axis
                and self.y_axis == other.y_axis)

    def __repr__(self):
        return (f'{self.__class__.__name__}(num_x={self.x_axis.num}, '
                f'num_y={self.y_axis.num})')

    def to_dict(self):
        return dict(num_x=self.x_axis.num, num_y=self.y_axis.num)


class Field(object):
    """Solution samples bound to the grid and the setting they came from.

    Args:
        grid (Grid1D | Grid2D): Sampling grid.
        values (np.ndarray): Samples, shape ``grid.shape``.
        formulation (str): ``'riesz'`` or ``'spectral'``.
        truncation (TruncationPolicy | None): Series truncation used, None
            for closed-form fields.
        s (float | FracPower): Fractional power.
        name (str | None): Optional label used in output files.
    """

    def __init__(self, grid, values, formulation, truncation, s, name=None):
        if not isinstance(grid, (Grid1D, Grid2D)):
            raise TypeError(f'grid must be Grid1D or Grid2D, '
                            f'but got {type(grid)}')
        if formulation not in FORMULATIONS:
            raise DomainError(f'formulation must be one of {FORMULATIONS}, '
                              f'but got {formulation!r}')

        values = np.asarray(values, dtype=np.float64)
        if values.size != len(grid):
            raise DomainError(f'Field has {values.size} values but the grid '
                              f'has {len(grid)} points')

        self.grid = grid
        self.values = values.reshape(grid.shape)
        self.formulation = formulation
        self.truncation = truncation
        self.s = as_power(s, allow_classical=True)
        self.name = name

    @property
    def points(self):
        if isinstance(self.grid, Grid1D):
            return self.grid.points
        return self.grid.mesh()

    def is_symmetric(self, atol=0.0):
        """Check the reflection symmetries of the sampled values."""
        values = self.values

        def close(other):
            return np.allclose(
                values, other, rtol=0.0, atol=atol, equal_nan=True)

        if not close(values[::-1]):
            return False
        if values.ndim == 2:
            if not close(values[:, ::-1]):
                return False
            if values.shape[0] == values.shape[1]:
                return close(values.T)
        return True

    def __repr__(self):
        return (f'{self.__class__.__name__}(grid={self.grid!r}, '
                f'formulation={self.formulation!r}, s={float(self.s)}, '
                f'truncation={self.truncation!r})')
