"""
Utilities Module
Configuration and shared exception types
"""

from .config import Config
from .errors import (
    QuestGraphError,
    GraphBuildError,
    IllegalActionError,
    MachineDefinitionError,
    BudgetExceededError,
    NonMonotonicTimeError,
    CycleError,
    MachineFileError,
)

__all__ = [
    'Config',
    'QuestGraphError',
    'GraphBuildError',
    'IllegalActionError',
    'MachineDefinitionError',
    'BudgetExceededError',
    'NonMonotonicTimeError',
    'CycleError',
    'MachineFileError',
]
