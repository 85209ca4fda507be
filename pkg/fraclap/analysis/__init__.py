from .asymptotics import (ExponentEstimate, MaxValueCurves, RatioRow,
                          boundary_envelope, boundary_ratio_table,
                          log_exponent_estimate, max_value_curves,
                          pointwise_domination, riesz_ratios, spectral_ratios)
from .oracle import (QuadratureRule, apply_spectral_operator,
                     classical_reference, coefficient_oracle,
                     discrete_laplacian_residual, five_point_laplacian,
                     truncated_expansion)

__all__ = [
    'RatioRow', 'ExponentEstimate', 'MaxValueCurves', 'boundary_ratio_table',
    'riesz_ratios', 'spectral_ratios', 'log_exponent_estimate',
    'max_value_curves', 'pointwise_domination', 'boundary_envelope',
    'QuadratureRule', 'coefficient_oracle', 'apply_spectral_operator',
    'classical_reference', 'discrete_laplacian_residual',
    'five_point_laplacian', 'truncated_expansion'
]
