"""
Database Module
Local storage of benchmark results
"""

from .db_manager import ResultsManager
from .models import Base, BenchRun

__all__ = [
    'ResultsManager',
    'Base',
    'BenchRun'
]
