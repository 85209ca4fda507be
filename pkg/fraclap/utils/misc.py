import ast
import re

from mmcv import DictAction

_RANGE_PATTERN = re.compile(r'^\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*$')


def parse_float_list(value):
    """Parse a comma separated list of floats, e.g. ``0.25,0.5,0.75``.

    Args:
        value (str | float | list[float]): Raw value from the command line or
            a config file.

    Returns:
        list[float]: Parsed values in the given order.
    """
    if isinstance(value, (list, tuple)):
        return [float(v) for v in value]
    if isinstance(value, (int, float)):
        return [float(value)]

    items = [v.strip() for v in str(value).split(',') if v.strip()]
    if not items:
        raise ValueError(f'Expected a comma separated list of numbers, '
                         f'but got {value!r}')

    return [float(v) for v in items]


def parse_index_range(value):
    """Parse an inclusive index range written as ``a..b``.

    Args:
        value (str | list[int] | tuple[int]): ``'1..20'`` or ``[1, 20]``.

    Returns:
        tuple[int]: ``(first, last)`` with ``first <= last``.
    """
    if isinstance(value, (list, tuple)):
        if len(value) != 2:
            raise ValueError(f'Range must have two ends, but got {value!r}')
        first, last = int(value[0]), int(value[1])
    else:
        match = _RANGE_PATTERN.match(str(value))
        if match is None:
            raise ValueError(f'Range must be written as a..b, '
                             f'but got {value!r}')
        first, last = int(match.group(1)), int(match.group(2))

    if first > last:
        raise ValueError(f'Empty range {first}..{last}')

    return first, last


class ExtendedDictAction(DictAction):
    """argparse action collecting ``KEY=VALUE`` overrides of a config.

    Besides what :class:`mmcv.DictAction` accepts, values may be python
    literals (``[0.25, 0.5]``, ``{'max_index': 100}``) or inclusive index
    ranges (``1..20``), which become two-element lists.
    """

    def __call__(self, parser, namespace, values, option_string=None):
        options = {}
        for kv in values:
            key, val = kv.split('=', maxsplit=1)
            if val and val[0] in '[({':
                val = ast.literal_eval(val)
            elif _RANGE_PATTERN.match(val):
                val = list(parse_index_range(val))
            else:
                val = [self._parse_int_float_bool(v) for v in val.split(',')]
                if len(val) == 1:
                    val = val[0]
            options[key] = val

        setattr(namespace, self.dest, options)
