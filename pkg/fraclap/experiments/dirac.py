import numpy as np

from ..core.domain import (Grid1D, Grid2D, as_power,
                           riesz_fundamental_in_l2_loc,
                           spectral_dirac_continuous_off_origin,
                           spectral_dirac_finite_at_origin,
                           spectral_dirac_in_l2)
from ..core.errors import UnsupportedCaseError
from ..core.lifting import (DEFAULT_LIFT_COUNT, dirac_field_1d,
                            dirac_field_2d, lift_coefficients,
                            spectral_dirac_solution_2d_grid)
from ..core.spectral_series import spectral_dirac_2d_grid
from ..core.summation import (DEFAULT_MAX_INDEX_1D, DEFAULT_MAX_INDEX_2D,
                              TruncationPolicy)
from .base import BaseExperiment, s_tag
from .registry import EXPERIMENTS

DEFAULT_DIRAC_S = {1: (0.25, 0.45, 0.55), 2: (0.5, 0.6, 0.75)}
DEFAULT_DIRAC_GRID = {1: 1024, 2: 100}
DEFAULT_DIRAC_TRUNC = {1: DEFAULT_MAX_INDEX_1D, 2: DEFAULT_MAX_INDEX_2D}


def _profile_1d(task):
    s, num, trunc = task
    grid = Grid1D(num)
    riesz = dirac_field_1d(grid, s, formulation='riesz')
    spectral = dirac_field_1d(grid, s, TruncationPolicy(**trunc))
    return riesz.values, spectral.values


def _surface_2d(task):
    s, num, trunc, count = task
    grid = Grid2D(num)
    trunc = TruncationPolicy(**trunc)
    x = grid.x_axis.points
    coeffs = lift_coefficients(s, count)
    w = spectral_dirac_2d_grid(x, x, s, trunc)
    u = spectral_dirac_solution_2d_grid(x, x, s, trunc, coeffs, w=w)
    u0 = dirac_field_2d(grid, s, formulation='riesz').values
    return w, u, u0


@EXPERIMENTS.register_module()
class DiracExperiment(BaseExperiment):
    """Solutions with a Dirac mass at the origin, both formulations.

    ``dim=1`` writes ``x, u0_riesz, u_spectral`` per s. ``dim=2`` writes a
    surface file (``x, y, w, u_spectral``) and a difference file
    (``x, y, u0_riesz, u_spectral, abs_diff``) per s, in row-major order
    with x as the slow index.

    Args:
        dim (int): 1 or 2.
        s (list[float] | None): Fractional powers, per-dimension defaults
            when None.
        grid (int | None): Points per axis.
        trunc (int | None): Terms per series index.
        count (int): Lift coefficients for ``dim=2``.
        accumulation (str): Summation strategy.
    """

    command = 'dirac'

    def __init__(self,
                 dim=1,
                 s=None,
                 grid=None,
                 trunc=None,
                 count=DEFAULT_LIFT_COUNT,
                 accumulation='compensated',
                 **kwargs):
        super().__init__(**kwargs)
        if dim not in (1, 2):
            raise ValueError(f'dim must be 1 or 2, but got {dim}')
        self.dim = dim
        self.s_list = [
            as_power(v) for v in (DEFAULT_DIRAC_S[dim] if s is None else s)
        ]
        if dim == 1:
            half = [float(v) for v in self.s_list if v.is_half]
            if half:
                raise UnsupportedCaseError(
                    f'dirac --dim 1 does not support s = 1/2, but got '
                    f's={half[0]}')
        self.grid = DEFAULT_DIRAC_GRID[dim] if grid is None else int(grid)
        self.trunc = TruncationPolicy(
            DEFAULT_DIRAC_TRUNC[dim] if trunc is None else trunc,
            accumulation)
        self.count = int(count)

    def _log_validity(self, s):
        n = self.dim
        tag = f'n={n}, s={float(s):g}'
        if not riesz_fundamental_in_l2_loc(n, s):
            self.logger.warning(f'{tag}: the Riesz fundamental solution is '
                                f'not locally square integrable')
        if not spectral_dirac_in_l2(n, s):
            self.logger.warning(f'{tag}: the spectral solution is not in L2')
        if not spectral_dirac_finite_at_origin(n, s):
            self.logger.info(f'{tag}: the spectral series diverges at the '
                             f'origin, values near it depend on the '
                             f'truncation')
        if not spectral_dirac_continuous_off_origin(n, s):
            self.logger.warning(f'{tag}: the spectral series is not '
                                f'continuous away from the origin')

    def _run(self):
        for s in self.s_list:
            self._log_validity(s)
        if self.dim == 1:
            return self._run_1d()
        return self._run_2d()

    def _run_1d(self):
        tasks = [(float(s), self.grid, self.trunc.to_dict())
                 for s in self.s_list]
        profiles = self.map_jobs(_profile_1d, tasks)
        x = Grid1D(self.grid).points
        return [(f'dirac1d_{s_tag(s)}',
                 dict(x=x, u0_riesz=riesz, u_spectral=spectral))
                for s, (riesz, spectral) in zip(self.s_list, profiles)]

    def _run_2d(self):
        tasks = [(float(s), self.grid, self.trunc.to_dict(), self.count)
                 for s in self.s_list]
        surfaces = self.map_jobs(_surface_2d, tasks)
        xx, yy = Grid2D(self.grid).mesh()
        x, y = xx.ravel(), yy.ravel()

        tables = []
        for s, (w, u, u0) in zip(self.s_list, surfaces):
            diff = np.abs(u0 - u)
            self.logger.info(f's={float(s):g}: max |u0 - u_s| = '
                             f'{np.nanmax(diff):.4e}')
            tables.append((f'dirac2d_{s_tag(s)}',
                           dict(x=x, y=y, w=w.ravel(), u_spectral=u.ravel())))
            tables.append((f'dirac2d_diff_{s_tag(s)}',
                           dict(x=x, y=y, u0_riesz=u0.ravel(),
                                u_spectral=u.ravel(), abs_diff=diff.ravel())))
        return tables
