from .domain import (Field, FracPower, Grid1D, Grid2D, as_power,
                     riesz_fundamental_in_l2_loc,
                     spectral_dirac_continuous_off_origin,
                     spectral_dirac_finite_at_origin, spectral_dirac_in_l2)
from .errors import (AccuracyError, AccuracyWarning, DomainError, FracLapError,
                     LogCaseError, SingularityError, UnsupportedCaseError)
from .lifting import (LiftCoefficients, dirac_field_1d, dirac_field_2d,
                      harmonic_lift_2d, harmonic_lift_2d_grid,
                      lift_coefficients, phi1, spectral_dirac_solution_1d,
                      spectral_dirac_solution_2d,
                      spectral_dirac_solution_2d_grid)
from .riesz import (LOG_CASE_CONSTANT, dirac_boundary_trace_2d,
                    fundamental_solution, riesz_constant_rhs,
                    riesz_exterior_trace)
from .special_fn import (fundamental_constant, gamma, gamma_reflected,
                         norm_constants, riesz_ball_constant)
from .spectral_series import (EigenPair1D, EigenPair2D, SeriesProbeReport,
                              constant_rhs_field, constant_rhs_tail_bound,
                              dirac_2d_row_sums, dirichlet_kernel_sum,
                              divergence_probe, eigenpair_1d, eigenpair_2d,
                              fourier_coefficients_constant_rhs,
                              fourier_coefficients_dirac_1d, partial_sum_vN,
                              spectral_constant_rhs_1d,
                              spectral_constant_rhs_from_left,
                              spectral_dirac_1d, spectral_dirac_1d_sine_form,
                              spectral_dirac_2d, spectral_dirac_2d_grid,
                              vN_first_derivative_at_zero,
                              vN_second_derivative)
from .summation import (CompensatedAccumulator, TruncationPolicy,
                        accumulate_series)

__all__ = [
    'FracPower', 'Grid1D', 'Grid2D', 'Field', 'as_power',
    'riesz_fundamental_in_l2_loc', 'spectral_dirac_in_l2',
    'spectral_dirac_finite_at_origin', 'spectral_dirac_continuous_off_origin',
    'FracLapError', 'DomainError', 'SingularityError', 'LogCaseError',
    'UnsupportedCaseError', 'AccuracyError', 'AccuracyWarning', 'gamma',
    'gamma_reflected', 'riesz_ball_constant', 'fundamental_constant',
    'norm_constants', 'LOG_CASE_CONSTANT', 'riesz_constant_rhs',
    'fundamental_solution', 'riesz_exterior_trace', 'dirac_boundary_trace_2d',
    'TruncationPolicy', 'CompensatedAccumulator', 'accumulate_series',
    'EigenPair1D', 'EigenPair2D', 'eigenpair_1d', 'eigenpair_2d',
    'spectral_constant_rhs_1d', 'spectral_constant_rhs_from_left',
    'fourier_coefficients_constant_rhs', 'fourier_coefficients_dirac_1d',
    'constant_rhs_tail_bound', 'constant_rhs_field', 'spectral_dirac_1d',
    'spectral_dirac_1d_sine_form', 'spectral_dirac_2d',
    'spectral_dirac_2d_grid', 'dirac_2d_row_sums', 'dirichlet_kernel_sum',
    'partial_sum_vN', 'vN_second_derivative', 'vN_first_derivative_at_zero',
    'divergence_probe', 'SeriesProbeReport', 'phi1', 'LiftCoefficients',
    'lift_coefficients', 'harmonic_lift_2d', 'harmonic_lift_2d_grid',
    'spectral_dirac_solution_1d', 'spectral_dirac_solution_2d',
    'spectral_dirac_solution_2d_grid', 'dirac_field_1d', 'dirac_field_2d'
]
