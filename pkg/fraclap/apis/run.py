from ..experiments import build_experiment
from ..utils import get_root_logger


def run_experiment(cfg, logger=None):
    """Build the experiment of a resolved config and write its tables.

    Args:
        cfg (:obj:`mmcv.Config`): Resolved config holding ``experiment``,
            ``output`` and ``nproc``.
        logger (logging.Logger | None): Logger, the root logger when None.

    Returns:
        list[str]: Written files.
    """
    logger = logger or get_root_logger(log_level=cfg.get('log_level', 'INFO'))

    default_args = dict(
        out_dir=cfg.output.out_dir,
        file_format=cfg.output.format,
        nproc=cfg.get('nproc', 1),
        logger=logger)
    experiment = build_experiment(cfg.experiment, default_args)
    logger.info(f'Experiment: {experiment}')

    return experiment.run(config=cfg._cfg_dict.to_dict())
