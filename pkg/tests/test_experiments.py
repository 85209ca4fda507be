import os.path as osp

import mmcv
import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from fraclap import __version__
from fraclap.core import AccuracyError, UnsupportedCaseError
from fraclap.experiments import (BoundaryLayerExperiment,
                                 ConstantRhsExperiment, DiracExperiment,
                                 SelftestExperiment, build_experiment,
                                 read_table, write_table)
from fraclap.experiments import selftest


def _constant_rhs_cfg(**kwargs):
    cfg = dict(
        type='ConstantRhsExperiment',
        s=[0.25, 0.75],
        grid=33,
        trunc=200,
        curve=dict(s_min=0.1, s_max=0.9, num=5))
    cfg.update(kwargs)
    return cfg


def test_build_experiment(tmp_path):
    experiment = build_experiment(
        _constant_rhs_cfg(), dict(out_dir=str(tmp_path), file_format='json'))
    assert isinstance(experiment, ConstantRhsExperiment)
    assert experiment.file_format == 'json'
    assert experiment.trunc.max_index == 200

    with pytest.raises(KeyError):
        build_experiment(dict(type='UnknownExperiment'))
    with pytest.raises(ValueError):
        ConstantRhsExperiment(file_format='xlsx')
    with pytest.raises(ValueError):
        ConstantRhsExperiment(nproc=0)


def test_constant_rhs_experiment(tmp_path):
    experiment = build_experiment(_constant_rhs_cfg(),
                                  dict(out_dir=str(tmp_path)))
    files = experiment.run(config=dict(seed='none'))
    assert [osp.basename(f) for f in files] == [
        'constant_rhs_s0.25.csv', 'constant_rhs_s0.75.csv',
        'constant_rhs_max_values.csv'
    ]

    with open(files[0]) as f:
        header = [f.readline().rstrip('\n') for _ in range(4)]
    assert header == [
        f'# fraclap {__version__}', '# command: constant-rhs',
        '# config: {"seed": "none"}', 'x,u_riesz,u_spectral'
    ]

    config, columns = read_table(files[0])
    assert config == dict(seed='none')
    assert columns['x'].shape == (33, )
    for name in ['u_riesz', 'u_spectral']:
        assert columns[name][0] == 0.0 and columns[name][-1] == 0.0
    assert np.all(columns['u_riesz'] >= columns['u_spectral'])

    _, curve = read_table(files[-1])
    assert_allclose(curve['s'], [0.1, 0.3, 0.5, 0.7, 0.9])
    assert_allclose(curve['u_riesz'][2], 1.0, rtol=1e-12)


def test_constant_rhs_deterministic(tmp_path):
    contents = []
    for name, nproc in [('a', 1), ('b', 2)]:
        experiment = build_experiment(
            _constant_rhs_cfg(), dict(out_dir=str(tmp_path / name),
                                      nproc=nproc))
        files = experiment.run()
        contents.append([open(f).read() for f in files])
    assert contents[0] == contents[1]


def test_json_output(tmp_path):
    experiment = build_experiment(
        _constant_rhs_cfg(s=[0.5]),
        dict(out_dir=str(tmp_path), file_format='json'))
    files = experiment.run(config=dict(nproc=1))
    result = mmcv.load(files[0])
    assert result['fraclap'] == __version__
    assert result['command'] == 'constant-rhs'
    assert result['config'] == dict(nproc=1)
    assert set(result['columns']) == {'x', 'u_riesz', 'u_spectral'}
    assert len(result['columns']['x']) == 33


def test_boundary_layer_table(tmp_path):
    experiment = BoundaryLayerExperiment(
        mode='table1',
        table=dict(s=[0.5], h=2**-10, j=[1, 1], trunc=1000,
                   log_exponent=0.85),
        out_dir=str(tmp_path))
    files = experiment.run()
    assert [osp.basename(f) for f in files] == ['boundary_layer_table1.csv']
    _, columns = read_table(files[0])
    assert columns['formulation'] == ['riesz', 'spectral', 'spectral_log']
    assert columns['model'][2] == 'dist*|ln dist|^0.85'
    assert_array_equal(columns['min'], columns['max'])


def test_boundary_layer_exponent(tmp_path):
    experiment = BoundaryLayerExperiment(
        mode='exponent',
        exponent=dict(h=1e-6, j='1..3', trunc=1000),
        out_dir=str(tmp_path))
    files = experiment.run()
    assert [osp.basename(f) for f in files] == ['boundary_layer_exponent.csv']
    _, columns = read_table(files[0])
    assert_array_equal(columns['j'], [1, 2, 3])
    assert_allclose(columns['dist'], [1e-6, 2e-6, 3e-6])
    assert columns['k'].shape == (3, )

    with pytest.raises(ValueError):
        BoundaryLayerExperiment(mode='table2')


def test_dirac_experiment_checks():
    with pytest.raises(UnsupportedCaseError):
        DiracExperiment(dim=1, s=[0.25, 0.5])
    with pytest.raises(ValueError):
        DiracExperiment(dim=3)

    experiment = DiracExperiment(dim=2)
    assert [float(s) for s in experiment.s_list] == [0.5, 0.6, 0.75]
    assert experiment.grid == 100
    assert experiment.trunc.max_index == 2048


def test_dirac_1d(tmp_path):
    experiment = DiracExperiment(
        dim=1, s=[0.25, 0.55], grid=33, trunc=500, out_dir=str(tmp_path))
    files = experiment.run()
    assert [osp.basename(f) for f in files] == [
        'dirac1d_s0.25.csv', 'dirac1d_s0.55.csv'
    ]
    _, columns = read_table(files[0])
    assert set(columns) == {'x', 'u0_riesz', 'u_spectral'}
    assert np.isnan(columns['u0_riesz'][16])
    assert np.all(np.isfinite(columns['u_spectral']))


def test_dirac_2d(tmp_path):
    experiment = DiracExperiment(
        dim=2, s=[0.6], grid=10, trunc=64, count=20, out_dir=str(tmp_path))
    files = experiment.run()
    assert [osp.basename(f) for f in files] == [
        'dirac2d_s0.6.csv', 'dirac2d_diff_s0.6.csv'
    ]
    _, surface = read_table(files[0])
    assert set(surface) == {'x', 'y', 'w', 'u_spectral'}
    assert surface['x'].shape == (100, )
    # x is the slow index
    assert_array_equal(surface['x'][:10], surface['x'][0])
    u = surface['u_spectral'].reshape(10, 10)
    assert_allclose(u, u.T, rtol=0, atol=1e-9 * np.abs(u).max())

    _, diff = read_table(files[1])
    assert_allclose(diff['abs_diff'],
                    np.abs(diff['u0_riesz'] - diff['u_spectral']))


def test_write_table(tmp_path):
    with pytest.raises(ValueError):
        write_table(
            str(tmp_path / 't'), dict(a=[1, 2], b=[1]), 'selftest', {})
    with pytest.raises(ValueError):
        write_table(str(tmp_path / 't'), dict(a=[1]), 'selftest', {}, 'xml')

    blocker = tmp_path / 'blocker'
    blocker.write_text('')
    with pytest.raises(OSError):
        write_table(str(blocker / 't'), dict(a=[1]), 'selftest', {})

    filename = write_table(
        str(tmp_path / 'mixed'),
        dict(name=['a', 'b'], value=[0.1, np.float64(2.0)], n=[1, 2],
             ok=[True, False]), 'selftest', dict(k=[1, 2]))
    with open(filename) as f:
        lines = f.read().splitlines()
    assert lines[3:] == ['name,value,n,ok', 'a,0.10000000000000001,1,true',
                         'b,2,2,false']
    config, columns = read_table(filename)
    assert config == dict(k=[1, 2])
    assert columns['name'] == ['a', 'b']
    assert_array_equal(columns['value'], [0.1, 2.0])
    assert_array_equal(columns['ok'], [True, False])
    assert_array_equal(columns['n'], [1, 2])
    assert columns['n'].dtype.kind == 'i'


def test_selftest(tmp_path):
    experiment = SelftestExperiment(out_dir=str(tmp_path))
    files = experiment.run()
    assert experiment.failed == []
    _, columns = read_table(files[0])
    assert len(columns['name']) == len(selftest.CHECKS) + 14
    assert columns['passed'].all()


def test_selftest_failure(tmp_path, monkeypatch):
    monkeypatch.setattr(selftest, 'CHECKS',
                        [('always_off', lambda: (1.0, 0.0, 1e-3))])
    experiment = SelftestExperiment(table1=False, out_dir=str(tmp_path))
    with pytest.raises(AccuracyError):
        experiment.run()
    _, columns = read_table(osp.join(str(tmp_path), 'selftest.csv'))
    assert_array_equal(columns['passed'], [False])
