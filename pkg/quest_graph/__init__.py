"""
Quest Graph
Agentic automata on quest graphs: constructions, oracles and computation graph benchmarks
"""

__version__ = '1.0.0'
__author__ = 'Quest Graph Development Team'

from . import utils
from . import core
from . import automata
from . import qdp
from . import reference
from . import constructions
from . import compgraph
from . import cgsim
from . import database
from . import cli

__all__ = [
    'utils',
    'core',
    'automata',
    'qdp',
    'reference',
    'constructions',
    'compgraph',
    'cgsim',
    'database',
    'cli'
]
