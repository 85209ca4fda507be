from .base import BaseExperiment
from .boundary_layer import BoundaryLayerExperiment
from .builder import build_experiment
from .constant_rhs import ConstantRhsExperiment
from .dirac import DiracExperiment
from .outputs import read_table, write_table
from .registry import EXPERIMENTS
from .selftest import SelftestExperiment

__all__ = [
    'BaseExperiment', 'BoundaryLayerExperiment', 'ConstantRhsExperiment',
    'DiracExperiment', 'SelftestExperiment', 'EXPERIMENTS',
    'build_experiment', 'read_table', 'write_table'
]
