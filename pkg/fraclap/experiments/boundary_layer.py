from terminaltables import AsciiTable

from ..analysis.asymptotics import (EXPONENT_H, EXPONENT_J, LOG_EXPONENT,
                                    REFERENCE_LOG_EXPONENT, TABLE_H, TABLE_J,
                                    TABLE_S,
                                    boundary_ratio_table,
                                    log_exponent_estimate)
from ..core.summation import (DEFAULT_MAX_INDEX_1D,
                              DEFAULT_MAX_INDEX_EXPONENT, TruncationPolicy)
from ..utils import parse_index_range
from .base import BaseExperiment
from .registry import EXPERIMENTS

BOUNDARY_LAYER_MODES = ('all', 'table1', 'exponent')


@EXPERIMENTS.register_module()
class BoundaryLayerExperiment(BaseExperiment):
    """Steepness of the boundary layers of the unit right-hand side
    solutions.

    ``table1`` writes the ratio table (s, formulation, model, min, max);
    ``exponent`` writes the raw ``k_j`` estimates of the logarithmic exponent
    at s = 1/2; ``all`` does both.

    Args:
        mode (str): 'all', 'table1' or 'exponent'.
        table (dict): ``s``, ``h``, ``j``, ``trunc`` and ``log_exponent`` of
            the ratio table. ``log_exponent`` may list several exponents,
            each adds a ``spectral_log`` row.
        exponent (dict): ``h``, ``j`` and ``trunc`` of the exponent study.
        accumulation (str): Summation strategy.
    """

    command = 'boundary-layer'

    def __init__(self,
                 mode='all',
                 table=dict(
                     s=list(TABLE_S),
                     h=TABLE_H,
                     j=list(TABLE_J),
                     trunc=DEFAULT_MAX_INDEX_1D,
                     log_exponent=[LOG_EXPONENT, REFERENCE_LOG_EXPONENT]),
                 exponent=dict(
                     h=EXPONENT_H,
                     j=list(EXPONENT_J),
                     trunc=DEFAULT_MAX_INDEX_EXPONENT),
                 accumulation='compensated',
                 **kwargs):
        super().__init__(**kwargs)
        if mode not in BOUNDARY_LAYER_MODES:
            raise ValueError(f'mode must be one of {BOUNDARY_LAYER_MODES}, '
                             f'but got {mode!r}')
        self.mode = mode
        self.table = dict(table)
        self.exponent = dict(exponent)
        self.accumulation = accumulation

    def _ratio_table(self):
        rows = boundary_ratio_table(
            self.table['s'],
            h=float(self.table['h']),
            j_range=parse_index_range(self.table['j']),
            trunc=TruncationPolicy(self.table['trunc'], self.accumulation),
            log_exponent=self.table['log_exponent'])

        table_data = [['s', 'formulation', 'model', 'min', 'max']]
        for row in rows:
            table_data.append([
                f'{float(row.s):g}', row.formulation, row.exponent_model,
                f'{row.min:.4f}', f'{row.max:.4f}'
            ])
        self.logger.info('Boundary layer ratios:\n' +
                         AsciiTable(table_data).table)

        columns = dict(
            s=[float(row.s) for row in rows],
            formulation=[row.formulation for row in rows],
            model=[row.exponent_model for row in rows],
            min=[row.min for row in rows],
            max=[row.max for row in rows])
        return 'boundary_layer_table1', columns

    def _exponent_study(self):
        estimate = log_exponent_estimate(
            h=float(self.exponent['h']),
            j_range=parse_index_range(self.exponent['j']),
            trunc=TruncationPolicy(self.exponent['trunc'],
                                   self.accumulation))
        self.logger.info(f'Log exponent at s=1/2: median k = '
                         f'{estimate.median:.4f} over {estimate.k_values.size}'
                         f' points (range {estimate.k_values.min():.4f} .. '
                         f'{estimate.k_values.max():.4f})')
        j = estimate.j_values
        columns = dict(j=j, dist=j * estimate.h, k=estimate.k_values)
        return 'boundary_layer_exponent', columns

    def _run(self):
        tables = []
        if self.mode in ('all', 'table1'):
            tables.append(self._ratio_table())
        if self.mode in ('all', 'exponent'):
            tables.append(self._exponent_study())
        return tables
