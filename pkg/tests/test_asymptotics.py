import numpy as np
import pytest
from numpy.testing import assert_allclose

from fraclap.analysis import (boundary_envelope, boundary_ratio_table,
                              log_exponent_estimate, max_value_curves,
                              pointwise_domination, riesz_ratios)
from fraclap.analysis.asymptotics import LOG_EXPONENT, REFERENCE_LOG_EXPONENT
from fraclap.core import DomainError, riesz_ball_constant

# (formulation, s, min, max) of the boundary layer ratios at h = 2^-10
REFERENCE_ROWS = [
    ('riesz', 0.25, 1.3386, 1.3417),
    ('riesz', 0.5, 1.4073, 1.4139),
    ('riesz', 0.75, 1.2559, 1.2647),
    ('spectral', 0.25, 1.5004, 1.5718),
    ('spectral', 0.5, 3.2960, 5.2026),
    ('spectral', 0.75, 1.5669, 1.6824),
    ('spectral_log', 0.5, 1.0606, 1.0717),
]


@pytest.fixture(scope='module')
def table():
    return boundary_ratio_table(log_exponent=0.82)


def test_boundary_ratio_table(table):
    assert len(table) == 7
    assert [(row.formulation, float(row.s)) for row in table] == [
        (formulation, s) for formulation, s, _, _ in REFERENCE_ROWS
    ]
    for row, (_, _, lo, hi) in zip(table, REFERENCE_ROWS):
        assert row.ratios.shape == (20, )
        assert abs(row.min - lo) <= 2e-3, row
        assert abs(row.max - hi) <= 2e-3, row
    assert table[-1].exponent_model == 'dist*|ln dist|^0.82'
    assert table[3].exponent_model == 'dist^0.5'
    assert table[4].exponent_model == 'dist^1'


def test_riesz_rows_closed_form(table):
    h = 2.0**-10
    dist = np.arange(1, 21) * h
    for row in table[:3]:
        s = float(row.s)
        assert_allclose(
            row.ratios,
            riesz_ball_constant(1, s) * (2.0 - dist)**s,
            rtol=1e-12)
        lo, hi = boundary_envelope(s, dist)
        # the last ratio attains the lower bound exactly up to rounding
        assert_allclose(row.min, lo, rtol=1e-12)
        assert lo * (1 - 1e-12) <= row.min and row.max <= hi * (1 + 1e-12)


def test_reference_log_row():
    rows = boundary_ratio_table(
        log_exponent=[LOG_EXPONENT, REFERENCE_LOG_EXPONENT])
    assert len(rows) == 8
    default, reference = rows[-2:]
    assert default.exponent_model == 'dist*|ln dist|^0.85'
    assert reference.exponent_model == 'dist*|ln dist|^0.82'
    # only the reference exponent reproduces the tabulated log row
    _, _, lo, hi = REFERENCE_ROWS[-1]
    assert abs(reference.min - lo) <= 2e-3 and abs(reference.max - hi) <= 2e-3
    assert default.max < lo


def test_log_model():
    rows = boundary_ratio_table(s_list=[0.5], trunc=10000)
    assert [row.formulation for row in rows] == [
        'riesz', 'spectral', 'spectral_log'
    ]
    linear, log_model = rows[1], rows[2]
    # the linear model leaves a logarithmic drift
    assert np.all(np.diff(linear.ratios) < 0)
    assert linear.spread > 1.5
    assert log_model.spread < 1.2
    assert log_model.exponent_model == 'dist*|ln dist|^0.85'

    rows = boundary_ratio_table(s_list=[0.25, 0.75])
    assert 'spectral_log' not in [row.formulation for row in rows]


def test_single_j():
    rows = boundary_ratio_table(s_list=[0.5], j_range=(1, 1), trunc=1000)
    for row in rows:
        assert row.ratios.shape == (1, )
        assert row.min == row.max
        assert row.to_dict()['j_last'] == 1


@pytest.mark.parametrize('j_range', [(0, 5), (5, 1), (1, 3000), (1.5, 3)])
def test_invalid_j_range(j_range):
    with pytest.raises(DomainError):
        boundary_ratio_table(j_range=j_range, trunc=100)


def test_log_exponent_estimate():
    estimate = log_exponent_estimate()
    assert estimate.k_values.shape == (20, )
    assert np.all(estimate.k_values >= 0.80)
    assert np.all(estimate.k_values <= 0.90)
    assert 0.83 <= estimate.median <= 0.87
    assert list(estimate.j_values) == list(range(1, 21))
    result = estimate.to_dict()
    assert result['trunc']['max_index'] == 1000000
    assert len(result['k_values']) == 20

    with pytest.raises(DomainError):
        log_exponent_estimate(h=0.05, trunc=100)


def test_max_value_curves():
    curves = max_value_curves([0.25, 0.5, 0.75, 1.0])
    assert_allclose(curves.riesz[1], 1.0, rtol=1e-12)
    assert_allclose(curves.riesz[-1], 0.5, rtol=1e-12)
    assert_allclose(curves.spectral[-1], 0.5, rtol=1e-6)
    assert np.all(curves.riesz[:-1] > curves.spectral[:-1])
    assert set(curves.to_dict()) == {'s', 'u_riesz', 'u_spectral'}

    dense = max_value_curves(np.linspace(0.05, 0.95, 19), trunc=1000)
    assert 0.0 < dense.argmax_riesz() < 0.5
    with pytest.raises(DomainError):
        dense.argmax_riesz(0.96, 0.99)


@pytest.mark.parametrize('s', [0.25, 0.5, 0.75])
def test_pointwise_domination(s):
    points = np.linspace(-1.0, 1.0, 2049)[1:-1]
    gap = pointwise_domination(s, points, 10000)
    assert np.all(gap >= 0.0)


def test_boundary_envelope():
    eps = np.array([1e-3, 1e-2])
    lo, hi = boundary_envelope(0.5, eps)
    assert lo < hi
    ratios = riesz_ratios(0.5, eps)
    assert np.all(ratios >= lo * (1 - 1e-12))
    assert np.all(ratios <= hi * (1 + 1e-12))
    assert_allclose(ratios.min(), lo, rtol=1e-12)
