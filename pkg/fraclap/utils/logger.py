import logging
import os.path as osp

from mmcv.utils import get_logger


def get_root_logger(log_file=None, log_level=logging.INFO):
    """Get the "fraclap" logger through ``get_logger`` of mmcv.

    The first call initializes the logger with a StreamHandler. Unlike a bare
    ``get_logger``, later calls still honour ``log_file`` and ``log_level``:
    the CLI only knows them once the config is resolved, and a single process
    may run several commands.

    Args:
        log_file (str | None): If given, a FileHandler writing to it is
            attached unless one is already present.
        log_level (int | str): Level of the logger and all its handlers.

    Returns:
        :obj:`logging.Logger`: The package logger.
    """
    logger = get_logger(__name__.split('.')[0], log_file, log_level)

    if log_file is not None:
        path = osp.abspath(log_file)
        if not any(
                isinstance(h, logging.FileHandler) and h.baseFilename == path
                for h in logger.handlers):
            file_handler = logging.FileHandler(log_file, 'w')
            file_handler.setFormatter(logger.handlers[0].formatter)
            logger.addHandler(file_handler)

    logger.setLevel(log_level)
    for handler in logger.handlers:
        handler.setLevel(log_level)
    return logger
