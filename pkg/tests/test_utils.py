import argparse
import logging

import pytest

from fraclap.utils import (ExtendedDictAction, collect_env, get_root_logger,
                           parse_float_list, parse_index_range)


def test_parse_float_list():
    assert parse_float_list('0.25,0.5, 0.75') == [0.25, 0.5, 0.75]
    assert parse_float_list('0.3') == [0.3]
    assert parse_float_list(0.5) == [0.5]
    assert parse_float_list((1, 2)) == [1.0, 2.0]
    with pytest.raises(ValueError):
        parse_float_list(' , ')
    with pytest.raises(ValueError):
        parse_float_list('0.5,abc')


def test_parse_index_range():
    assert parse_index_range('1..20') == (1, 20)
    assert parse_index_range(' 3 .. 3 ') == (3, 3)
    assert parse_index_range([2, 5]) == (2, 5)
    for bad in ['5..1', '1-20', '1..', [1, 2, 3]]:
        with pytest.raises(ValueError):
            parse_index_range(bad)


def test_extended_dict_action():
    parser = argparse.ArgumentParser()
    parser.add_argument('--options', nargs='+', action=ExtendedDictAction)
    args = parser.parse_args([
        '--options', 'experiment.s=[0.25, 0.5]', 'experiment.j=1..20',
        'experiment.trunc=100', 'output.format=json', 'experiment.h=1e-6',
        'experiment.flags=True,False'
    ])
    assert args.options == {
        'experiment.s': [0.25, 0.5],
        'experiment.j': [1, 20],
        'experiment.trunc': 100,
        'output.format': 'json',
        'experiment.h': 1e-6,
        'experiment.flags': [True, False]
    }

    args = parser.parse_args(
        ['--options', "experiment.trunc={'max_index': 10}"])
    assert args.options == {'experiment.trunc': {'max_index': 10}}


def test_collect_env():
    env_info = collect_env()
    for key in ['sys.platform', 'Python', 'NumPy', 'SciPy', 'fraclap']:
        assert key in env_info


def test_get_root_logger():
    logger = get_root_logger(log_level=logging.DEBUG)
    assert logger.name == 'fraclap'
    assert logger is logging.getLogger('fraclap')
