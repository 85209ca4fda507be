from mmcv.utils import build_from_cfg

from .registry import EXPERIMENTS


def build_experiment(cfg, default_args=None):
    """Build an experiment.

    Args:
        cfg (dict): Config of the experiment. It should at least contain the
            key "type".
        default_args (dict, optional): Default arguments to build the
            experiment, e.g. the output settings. Defaults to None.

    Returns:
        BaseExperiment: The built experiment.
    """
    return build_from_cfg(cfg, EXPERIMENTS, default_args)
