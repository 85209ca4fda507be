import numpy as np

from ..analysis.asymptotics import max_value_curves
from ..core.domain import Grid1D, as_power
from ..core.spectral_series import constant_rhs_field
from ..core.summation import DEFAULT_MAX_INDEX_1D, TruncationPolicy
from .base import BaseExperiment, s_tag
from .registry import EXPERIMENTS


def _profile(task):
    s, num, trunc = task
    grid = Grid1D(num)
    riesz = constant_rhs_field(grid, s, formulation='riesz')
    spectral = constant_rhs_field(grid, s, TruncationPolicy(**trunc))
    return riesz.values, spectral.values


@EXPERIMENTS.register_module()
class ConstantRhsExperiment(BaseExperiment):
    """Riesz and spectral solutions of the unit right-hand side on (-1, 1).

    Writes one profile per s with columns ``x, u_riesz, u_spectral`` and the
    curve of the values at ``x = 0`` over s.

    Args:
        s (list[float]): Fractional powers of the profiles.
        grid (int): Number of grid points on [-1, 1].
        trunc (int): Terms of the spectral series.
        accumulation (str): Summation strategy.
        curve (dict): ``s_min``, ``s_max`` and ``num`` of the s grid of the
            curve file.
    """

    command = 'constant-rhs'

    def __init__(self,
                 s=(0.25, 0.5, 0.75),
                 grid=1025,
                 trunc=DEFAULT_MAX_INDEX_1D,
                 accumulation='compensated',
                 curve=dict(s_min=0.01, s_max=0.99, num=99),
                 **kwargs):
        super().__init__(**kwargs)
        self.s_list = [as_power(v) for v in s]
        self.grid = Grid1D(grid)
        self.trunc = TruncationPolicy(trunc, accumulation)
        self.curve = dict(curve)
        self.curve_s = np.linspace(self.curve['s_min'], self.curve['s_max'],
                                   int(self.curve['num']))

    def _run(self):
        tasks = [(float(s), self.grid.num, self.trunc.to_dict())
                 for s in self.s_list]
        self.logger.info(f'Evaluating {len(tasks)} profiles on '
                         f'{self.grid!r} with {self.trunc!r}')
        profiles = self.map_jobs(_profile, tasks)

        tables = []
        x = self.grid.points
        for s, (riesz, spectral) in zip(self.s_list, profiles):
            interior = slice(1, -1)
            gap = riesz[interior] - spectral[interior]
            if np.any(gap < 0):
                self.logger.warning(
                    f's={float(s):g}: spectral solution exceeds the Riesz one '
                    f'at {int(np.sum(gap < 0))} interior points')
            tables.append((f'constant_rhs_{s_tag(s)}',
                           dict(x=x, u_riesz=riesz, u_spectral=spectral)))

        curves = max_value_curves(self.curve_s, self.trunc)
        peak = curves.argmax_riesz(0.0, 0.5)
        self.logger.info(f'max_x u^R_s(x) = c(1,s) peaks at s={peak:g} on '
                         f'(0, 1/2)')
        tables.append(('constant_rhs_max_values',
                       dict(s=curves.s_values, u_riesz=curves.riesz,
                            u_spectral=curves.spectral)))
        return tables
