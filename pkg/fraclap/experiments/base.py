import logging
import os.path as osp
from abc import ABCMeta, abstractmethod

import mmcv

from .outputs import OUTPUT_FORMATS, write_table


class BaseExperiment(metaclass=ABCMeta):
    """Base class for the reproducible experiments behind the CLI.

    All subclasses should overwrite:

    - Methods:`_run`, computing the output tables. It returns a list of
      ``(name, columns)`` pairs where ``columns`` maps column names to
      equally long sequences.

    Args:
        out_dir (str): Directory of the output files. Default: 'results'.
        file_format (str): 'csv' or 'json'. Default: 'csv'.
        nproc (int): Worker processes for independent jobs. Default: 1.
        logger (logging.Logger | None): Logger, the package logger when None.
    """

    command = None

    def __init__(self, out_dir='results', file_format='csv', nproc=1,
                 logger=None):
        if file_format not in OUTPUT_FORMATS:
            raise ValueError(f'format must be one of {OUTPUT_FORMATS}, '
                             f'but got {file_format!r}')
        if int(nproc) != nproc or nproc < 1:
            raise ValueError(f'nproc must be a positive integer, '
                             f'but got {nproc}')

        self.out_dir = out_dir
        self.file_format = file_format
        self.nproc = int(nproc)
        self.logger = logger or logging.getLogger(__name__)

    def map_jobs(self, func, tasks):
        """Run ``func`` over ``tasks`` with a progress bar, in parallel when
        ``nproc > 1``. Results keep the task order."""
        if not tasks:
            return []
        if self.nproc > 1 and len(tasks) > 1:
            return mmcv.track_parallel_progress(
                func, tasks, min(self.nproc, len(tasks)))
        return mmcv.track_progress(func, tasks)

    def run(self, config=None):
        """Compute and write every table of the experiment.

        Args:
            config (dict | None): Resolved run config echoed into the headers.

        Returns:
            list[str]: Written files.
        """
        config = {} if config is None else config
        tables = self._run()

        mmcv.mkdir_or_exist(osp.abspath(self.out_dir))
        files = []
        for name, columns in tables:
            filename = write_table(
                osp.join(self.out_dir, name), columns, self.command, config,
                self.file_format)
            self.logger.info(f'Saved {filename}')
            files.append(filename)

        return files

    @abstractmethod
    def _run(self):
        pass

    def __repr__(self):
        return (f'{self.__class__.__name__}(out_dir={self.out_dir!r}, '
                f'file_format={self.file_format!r}, nproc={self.nproc})')


def s_tag(s):
    """File name fragment of a fractional power, e.g. ``s0.25``."""
    return f's{float(s):g}'
