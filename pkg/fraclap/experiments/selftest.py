import math

import numpy as np

from ..analysis.asymptotics import REFERENCE_LOG_EXPONENT, boundary_ratio_table
from ..analysis.oracle import (QuadratureRule, apply_spectral_operator,
                               classical_reference, coefficient_oracle,
                               five_point_laplacian, truncated_expansion)
from ..core.errors import AccuracyError
from ..core.lifting import (harmonic_lift_2d, harmonic_lift_2d_grid,
                            lift_coefficients)
from ..core.special_fn import gamma, riesz_ball_constant
from ..core.spectral_series import (dirichlet_kernel_sum,
                                    fourier_coefficients_constant_rhs,
                                    partial_sum_vN, spectral_constant_rhs_1d,
                                    spectral_dirac_1d, vN_second_derivative)
from .base import BaseExperiment
from .registry import EXPERIMENTS

# reference (min, max) ratios of the boundary layer table
RATIO_TABLE_REFERENCE = [
    ('riesz', 0.25, (1.3386, 1.3417)),
    ('riesz', 0.5, (1.4073, 1.4139)),
    ('riesz', 0.75, (1.2559, 1.2647)),
    ('spectral', 0.25, (1.5004, 1.5718)),
    ('spectral', 0.5, (3.2960, 5.2026)),
    ('spectral', 0.75, (1.5669, 1.6824)),
    ('spectral_log', 0.5, (1.0606, 1.0717)),
]
RATIO_TABLE_TOL = 2e-3
RATIO_TABLE_LOG_EXPONENT = REFERENCE_LOG_EXPONENT


def _check_gamma():
    return gamma(0.5), math.sqrt(math.pi), 1e-12


def _check_ball_constant():
    return riesz_ball_constant(1, 0.5), 1.0, 1e-12


def _check_unit_coefficient():
    rule = QuadratureRule('simpson', 2049)
    return coefficient_oracle(np.ones(rule.nodes), 1, rule), 4 / math.pi, 1e-10


def _check_classical_constant_rhs():
    x = np.linspace(-1.0, 1.0, 101)
    err = np.abs(
        spectral_constant_rhs_1d(x, 1.0, 10000) -
        classical_reference('constant_rhs_1d', x)).max()
    return err, 0.0, 1e-8


def _check_classical_dirac():
    return spectral_dirac_1d(0.0, 1.0, 100000), classical_reference(
        'dirac_1d', 0.0), 1e-5


def _check_dirichlet_kernel():
    rng = np.random.RandomState(0)
    worst = 0.0
    for _ in range(100):
        p = int(rng.randint(0, 50))
        stop = p + int(rng.randint(1, 50))
        x = rng.uniform(0.01, 1.99) * rng.choice([-1.0, 1.0])
        naive = sum(math.cos((2 * m + 1) * math.pi * x / 2)
                    for m in range(p, stop))
        closed = dirichlet_kernel_sum(p, stop, x)
        worst = max(worst, abs(closed - naive) / max(abs(naive), 1.0))
    return worst, 0.0, 1e-10


def _check_vN_second_derivative():
    y, n, h = 0.4, 25, 1e-5
    fd = (partial_sum_vN(y + h, n) - 2.0 * partial_sum_vN(y, n) +
          partial_sum_vN(y - h, n)) / h**2
    exact = vN_second_derivative(y, n)
    return fd - exact, 0.0, 1e-3


def _check_operator_round_trip():
    coeffs = fourier_coefficients_constant_rhs(0.5, 100)
    k = np.arange(1, 101)
    unit = np.where(k % 2 == 1, 4.0 / (k * math.pi), 0.0)
    return (apply_spectral_operator(coeffs, 0.5, 0.37),
            truncated_expansion(unit, 0.37), 1e-12)


def _check_lift_harmonic():
    coeffs = lift_coefficients(0.6)
    t = np.linspace(-0.9, 0.9, 10)
    x, y = np.meshgrid(t, t, indexing='ij')
    residual = five_point_laplacian(
        lambda a, b: harmonic_lift_2d(a, b, 0.6, coeffs), x, y, 1e-3)
    return np.abs(residual).max(), 0.0, 1e-3


def _check_lift_trace():
    t = np.linspace(-1.0, 1.0, 201)
    values = harmonic_lift_2d_grid(t, [1.0], 0.6, lift_coefficients(0.6))
    err = np.abs(values[:, 0] - (t * t + 1.0)**(0.6 - 1.0)).max()
    return err, 0.0, 5e-3


CHECKS = [
    ('gamma_half', _check_gamma),
    ('ball_constant_half', _check_ball_constant),
    ('unit_coefficient_e1', _check_unit_coefficient),
    ('classical_constant_rhs', _check_classical_constant_rhs),
    ('classical_dirac_at_0', _check_classical_dirac),
    ('dirichlet_kernel', _check_dirichlet_kernel),
    ('vN_second_derivative', _check_vN_second_derivative),
    ('operator_round_trip', _check_operator_round_trip),
    ('lift_harmonic', _check_lift_harmonic),
    ('lift_trace', _check_lift_trace),
]


@EXPERIMENTS.register_module()
class SelftestExperiment(BaseExperiment):
    """Oracle checks of the analytic evaluators.

    Writes a report with columns ``name, value, reference, tolerance,
    passed`` and raises :class:`AccuracyError` when a check fails.

    Args:
        table1 (bool): Also compare the boundary layer table against its
            reference values. Default: True.
    """

    command = 'selftest'

    def __init__(self, table1=True, **kwargs):
        super().__init__(**kwargs)
        self.table1 = table1

    def _ratio_table_checks(self):
        rows = {(row.formulation, float(row.s)): row
                for row in boundary_ratio_table(
                    log_exponent=RATIO_TABLE_LOG_EXPONENT)}
        for formulation, s, (lo, hi) in RATIO_TABLE_REFERENCE:
            row = rows[(formulation, s)]
            name = f'table1_{formulation}_s{s:g}'
            yield f'{name}_min', row.min, lo, RATIO_TABLE_TOL
            yield f'{name}_max', row.max, hi, RATIO_TABLE_TOL

    def _run(self):
        results = []
        for name, check in CHECKS:
            value, reference, tol = check()
            results.append((name, float(value), float(reference), tol))
        if self.table1:
            results.extend(self._ratio_table_checks())

        columns = dict(name=[], value=[], reference=[], tolerance=[],
                       passed=[])
        failed = []
        for name, value, reference, tol in results:
            passed = bool(abs(value - reference) <= tol)
            columns['name'].append(name)
            columns['value'].append(value)
            columns['reference'].append(reference)
            columns['tolerance'].append(tol)
            columns['passed'].append(passed)
            log = self.logger.info if passed else self.logger.error
            log(f'{name}: value={value:.10g} reference={reference:.10g} '
                f'tol={tol:g} {"ok" if passed else "FAILED"}')
            if not passed:
                failed.append(name)

        self.failed = failed
        return [('selftest', columns)]

    def run(self, config=None):
        files = super().run(config)
        if self.failed:
            raise AccuracyError(f'{len(self.failed)} self-test checks '
                                f'failed: {", ".join(self.failed)}')
        return files
