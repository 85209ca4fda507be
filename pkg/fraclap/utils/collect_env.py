import numpy as np
import scipy
from mmcv.utils import collect_env as collect_basic_env

import fraclap


def collect_env():
    env_info = collect_basic_env()
    env_info['NumPy'] = np.__version__
    env_info['SciPy'] = scipy.__version__
    env_info['fraclap'] = fraclap.__version__
    return env_info


if __name__ == '__main__':
    for name, val in collect_env().items():
        print('{}: {}'.format(name, val))
