import argparse
import copy
import sys

from mmcv import Config

from ..analysis.asymptotics import LOG_EXPONENT, REFERENCE_LOG_EXPONENT
from ..core.errors import AccuracyError, DomainError
from ..core.summation import (ACCUMULATIONS, DEFAULT_MAX_INDEX_1D,
                              DEFAULT_MAX_INDEX_EXPONENT)
from ..experiments.dirac import (DEFAULT_DIRAC_GRID, DEFAULT_DIRAC_S,
                                 DEFAULT_DIRAC_TRUNC)
from ..experiments.outputs import OUTPUT_FORMATS
from ..utils import (ExtendedDictAction, collect_env, get_root_logger,
                     parse_float_list, parse_index_range)
from .run import run_experiment

EXIT_OK = 0
EXIT_INVALID_CONFIG = 2
EXIT_ACCURACY = 3
EXIT_IO = 4

COMMON_CONFIG = dict(
    output=dict(out_dir='results', format='csv'),
    nproc=1,
    log_level='INFO',
    log_file=None)

DEFAULT_CONFIGS = {
    'constant-rhs':
    dict(
        experiment=dict(
            type='ConstantRhsExperiment',
            s=[0.25, 0.5, 0.75],
            grid=1025,
            trunc=DEFAULT_MAX_INDEX_1D,
            accumulation='compensated',
            curve=dict(s_min=0.01, s_max=0.99, num=99))),
    'boundary-layer':
    dict(
        experiment=dict(
            type='BoundaryLayerExperiment',
            mode='all',
            table=dict(
                s=[0.25, 0.5, 0.75],
                h=2.0**-10,
                j=[1, 20],
                trunc=DEFAULT_MAX_INDEX_1D,
                log_exponent=[LOG_EXPONENT, REFERENCE_LOG_EXPONENT]),
            exponent=dict(h=1e-6, j=[1, 20], trunc=DEFAULT_MAX_INDEX_EXPONENT),
            accumulation='compensated')),
    'dirac':
    dict(
        experiment=dict(
            type='DiracExperiment',
            dim=1,
            s=None,
            grid=None,
            trunc=None,
            count=500,
            accumulation='compensated')),
    'selftest':
    dict(experiment=dict(type='SelftestExperiment', table1=True)),
}

COMMAND_TYPES = {
    command: cfg['experiment']['type']
    for command, cfg in DEFAULT_CONFIGS.items()
}


def _count(value):
    """Positive integer, scientific notation allowed (``1e6``)."""
    try:
        number = float(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f'expected an integer, '
                                         f'but got {value!r}')
    if not number.is_integer() or number < 1:
        raise argparse.ArgumentTypeError(f'expected a positive integer, '
                                         f'but got {value!r}')
    return int(number)


def _float_list(value):
    try:
        return parse_float_list(value)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _index_range(value):
    try:
        return list(parse_index_range(value))
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def _add_common_args(parser):
    parser.add_argument('--config',
                        help='config file (.py, .json or .yaml) merged over '
                        'the built-in defaults')
    parser.add_argument('--update_config', nargs='+',
                        action=ExtendedDictAction,
                        help='config overrides as key=value pairs, applied '
                        'after the config file')
    parser.add_argument('--out', help='output directory')
    parser.add_argument('--format', choices=OUTPUT_FORMATS,
                        help='output file format')
    parser.add_argument('--nproc', type=_count,
                        help='worker processes for independent jobs')
    parser.add_argument('--accumulation', choices=ACCUMULATIONS,
                        help='summation order of the series')
    parser.add_argument('--log_level',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'],
                        help='logging level')
    parser.add_argument('--log_file', help='also log into this file')


def build_parser():
    parser = argparse.ArgumentParser(
        prog='fraclap',
        description='Fractional Laplacian solutions on (-1, 1) and (-1, 1)^2')
    subparsers = parser.add_subparsers(dest='command', metavar='command')
    subparsers.required = True

    constant_rhs = subparsers.add_parser(
        'constant-rhs', help='solutions for the unit right-hand side')
    constant_rhs.add_argument('--s', type=_float_list,
                              help='fractional powers, e.g. 0.25,0.5,0.75')
    constant_rhs.add_argument('--grid', type=_count,
                              help='number of grid points on [-1, 1]')
    constant_rhs.add_argument('--trunc', type=_count,
                              help='number of series terms')
    _add_common_args(constant_rhs)

    boundary_layer = subparsers.add_parser(
        'boundary-layer', help='boundary-layer ratios and exponent estimate')
    boundary_layer.add_argument('--table1', action='store_true',
                                help='emit the ratio table')
    boundary_layer.add_argument('--exponent', action='store_true',
                                help='emit the logarithmic exponent estimate')
    boundary_layer.add_argument('--s', type=_float_list,
                                help='fractional powers of the ratio table')
    boundary_layer.add_argument('--h', type=float, help='grid step')
    boundary_layer.add_argument('--j', type=_index_range,
                                help='inclusive index range a..b')
    boundary_layer.add_argument('--trunc', type=_count,
                                help='number of series terms')
    _add_common_args(boundary_layer)

    dirac = subparsers.add_parser('dirac',
                                  help='solutions for a Dirac right-hand side')
    dirac.add_argument('--dim', type=int, choices=[1, 2], help='dimension')
    dirac.add_argument('--s', type=_float_list, help='fractional powers')
    dirac.add_argument('--grid', type=_count,
                       help='grid points per axis')
    dirac.add_argument('--trunc', type=_count,
                       help='number of series terms (per axis in 2D)')
    dirac.add_argument('--count', type=_count,
                       help='number of lift coefficients (2D only)')
    _add_common_args(dirac)

    selftest = subparsers.add_parser('selftest',
                                     help='run the oracle checks')
    selftest.add_argument('--no_table1', action='store_true',
                          help='skip the ratio table reference checks')
    _add_common_args(selftest)

    return parser


def parse_args(argv=None):
    return build_parser().parse_args(argv)


def _flag_options(args, cfg):
    """Dotted config keys set by explicit command-line flags."""
    options = {}

    def put(key, value):
        if value is not None:
            options[key] = value

    put('output.out_dir', args.out)
    put('output.format', args.format)
    put('nproc', args.nproc)
    put('log_level', args.log_level)
    put('log_file', args.log_file)
    if args.command != 'selftest':
        put('experiment.accumulation', args.accumulation)

    if args.command in ('constant-rhs', 'dirac'):
        put('experiment.s', args.s)
        put('experiment.grid', args.grid)
        put('experiment.trunc', args.trunc)
    if args.command == 'dirac':
        put('experiment.dim', args.dim)
        put('experiment.count', args.count)
    elif args.command == 'boundary-layer':
        if args.table1 or args.exponent:
            mode = 'all' if args.table1 and args.exponent else (
                'table1' if args.table1 else 'exponent')
            options['experiment.mode'] = mode
        else:
            mode = cfg.experiment.mode
        put('experiment.table.s', args.s)
        sections = dict(
            all=['table', 'exponent'], table1=['table'],
            exponent=['exponent']).get(mode, [])
        for section in sections:
            put(f'experiment.{section}.h', args.h)
            put(f'experiment.{section}.j', args.j)
            put(f'experiment.{section}.trunc', args.trunc)
    elif args.command == 'selftest' and args.no_table1:
        options['experiment.table1'] = False

    return options


def _materialize_dirac(cfg):
    dim = cfg.experiment.dim
    if dim not in (1, 2):
        raise ValueError(f'dim must be 1 or 2, but got {dim}')
    if cfg.experiment.s is None:
        cfg.experiment.s = list(DEFAULT_DIRAC_S[dim])
    if cfg.experiment.grid is None:
        cfg.experiment.grid = DEFAULT_DIRAC_GRID[dim]
    if cfg.experiment.trunc is None:
        cfg.experiment.trunc = DEFAULT_DIRAC_TRUNC[dim]


def resolve_config(args):
    """Merge defaults, config file, ``--update_config`` and flags.

    Later sources win. Every default is materialized so the returned config
    is fully explicit.

    Args:
        args (argparse.Namespace): Parsed command line.

    Returns:
        :obj:`mmcv.Config`: The resolved config.
    """
    cfg = Config(copy.deepcopy(dict(COMMON_CONFIG,
                                    **DEFAULT_CONFIGS[args.command])))
    if args.config is not None:
        cfg.merge_from_dict(Config.fromfile(args.config)._cfg_dict.to_dict())
    if args.update_config is not None:
        cfg.merge_from_dict(args.update_config)
    cfg.merge_from_dict(_flag_options(args, cfg))

    expected = COMMAND_TYPES[args.command]
    if cfg.experiment.type != expected:
        raise ValueError(f'Command {args.command!r} runs {expected}, '
                         f'but the config asks for {cfg.experiment.type}')
    if args.command == 'dirac':
        _materialize_dirac(cfg)

    return cfg


def main(argv=None):
    """Command-line entry point.

    Returns:
        int: 0 on success, 2 for an invalid config, 3 when a numerical
        accuracy check fails and 4 for I/O errors.
    """
    try:
        args = parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code in (0, None) else EXIT_INVALID_CONFIG

    logger = get_root_logger()
    try:
        cfg = resolve_config(args)
        logger = get_root_logger(
            log_file=cfg.log_file, log_level=cfg.log_level)

        env_info_dict = collect_env()
        env_info = '\n'.join([f'{k}: {v}' for k, v in env_info_dict.items()])
        dash_line = '-' * 60 + '\n'
        logger.info('Environment info:\n' + dash_line + env_info + '\n' +
                    dash_line)
        logger.info(f'Config:\n{cfg.pretty_text}')

        files = run_experiment(cfg, logger)
    except AccuracyError as e:
        logger.error(f'Accuracy check failed: {e}')
        return EXIT_ACCURACY
    except OSError as e:
        logger.error(f'I/O error: {e}')
        return EXIT_IO
    except (DomainError, ValueError, KeyError, TypeError) as e:
        logger.error(f'Invalid config: {e}')
        return EXIT_INVALID_CONFIG

    logger.info(f'{args.command} wrote {len(files)} file(s)')
    return EXIT_OK


if __name__ == '__main__':
    sys.exit(main())
