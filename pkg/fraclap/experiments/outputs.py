import io
import os.path as osp

import mmcv
import numpy as np

from .. import __version__

OUTPUT_FORMATS = ('csv', 'json')
FLOAT_FORMAT = '%.17g'
CONFIG_PREFIX = '# config: '
NUM_HEADER_LINES = 3


def _column_cells(values):
    """Return the cells of one column and its ``np.savetxt`` format."""
    array = np.asarray(values)
    if array.dtype.kind == 'b':
        return ['true' if v else 'false' for v in array.tolist()], '%s'
    if array.dtype.kind in 'iu':
        return array.tolist(), '%d'
    if array.dtype.kind == 'f':
        return array.tolist(), FLOAT_FORMAT
    return [str(v) for v in array.tolist()], '%s'


def _to_builtin(value):
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.floating, np.integer, np.bool_)):
        return value.item()
    return value


def header_lines(command, config):
    """Comment lines opening every CSV file."""
    config_json = mmcv.dump(config, file_format='json', sort_keys=True)
    return [
        f'# fraclap {__version__}',
        f'# command: {command}',
        f'{CONFIG_PREFIX}{config_json}',
    ]


def write_table(path, columns, command, config, file_format='csv'):
    """Write equally long columns with the run header.

    Args:
        path (str): Target path without extension.
        columns (dict[str, Sequence]): Column name to values, written in
            insertion order.
        command (str): CLI subcommand that produced the table.
        config (dict): Fully resolved config.
        file_format (str): ``'csv'`` or ``'json'``.

    Returns:
        str: The written file name.
    """
    if file_format not in OUTPUT_FORMATS:
        raise ValueError(f'format must be one of {OUTPUT_FORMATS}, '
                         f'but got {file_format!r}')
    lengths = {len(v) for v in columns.values()}
    if len(lengths) > 1:
        raise ValueError(f'Columns differ in length: {sorted(lengths)}')

    filename = f'{path}.{file_format}'
    mmcv.mkdir_or_exist(osp.dirname(osp.abspath(filename)))
    try:
        if file_format == 'json':
            mmcv.dump(
                dict(
                    fraclap=__version__,
                    command=command,
                    config=config,
                    columns={k: _to_builtin(v)
                             for k, v in columns.items()}),
                filename,
                file_format='json',
                sort_keys=True)
        else:
            num_rows = lengths.pop() if lengths else 0
            data = np.empty((num_rows, len(columns)), dtype=object)
            fmt = []
            for i, values in enumerate(columns.values()):
                cells, cell_fmt = _column_cells(values)
                data[:, i] = cells
                fmt.append(cell_fmt)
            header = '\n'.join(
                header_lines(command, config) + [','.join(columns)])
            np.savetxt(
                filename,
                data,
                fmt=fmt,
                delimiter=',',
                newline='\n',
                header=header,
                comments='',
                encoding='utf-8')
    except OSError as e:
        raise OSError(e.errno, f'Cannot write output file {filename}: '
                      f'{e.strerror}') from e
    return filename


def read_table(filename):
    """Read back a CSV written by :func:`write_table`.

    Returns:
        tuple[dict, dict]: The config from the header and the columns.
        Numeric and boolean columns are arrays, text columns are lists of
        str.
    """
    config = None
    for line in mmcv.list_from_file(filename, max_num=NUM_HEADER_LINES):
        if line.startswith(CONFIG_PREFIX):
            config = mmcv.load(
                io.StringIO(line[len(CONFIG_PREFIX):]), file_format='json')

    data = np.atleast_1d(
        np.genfromtxt(
            filename,
            delimiter=',',
            names=True,
            dtype=None,
            encoding='utf-8',
            skip_header=NUM_HEADER_LINES))
    columns = {}
    for name in data.dtype.names:
        values = data[name]
        columns[name] = values.tolist() if values.dtype.kind in 'US' \
            else values
    return config, columns
