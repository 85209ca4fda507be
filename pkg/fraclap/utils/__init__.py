from .collect_env import collect_env
from .logger import get_root_logger
from .misc import ExtendedDictAction, parse_float_list, parse_index_range

__all__ = [
    'get_root_logger', 'collect_env', 'ExtendedDictAction',
    'parse_float_list', 'parse_index_range'
]
