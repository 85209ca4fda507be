from .cli import main, resolve_config
from .run import run_experiment

__all__ = ['main', 'resolve_config', 'run_experiment']
