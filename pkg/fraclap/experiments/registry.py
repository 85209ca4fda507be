from mmcv.utils import Registry

EXPERIMENTS = Registry('experiment')
