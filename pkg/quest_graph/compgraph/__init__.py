"""
Computation Graph Module
DAG to MCG to BMCG transforms and proxy counting
"""

from .dag import Dag
from .mcg import UNIFIED_TERMINAL, Mcg, mcg_from_dag
from .bmcg import (
    ORIGINAL,
    PROXY,
    TERMINAL,
    Bmcg,
    proxy_count,
    total_proxy_count,
    bmcg_from_mcg,
    bmcg_from_dag,
    validate_bmcg,
)

__all__ = [
    'Dag',
    'UNIFIED_TERMINAL',
    'Mcg',
    'mcg_from_dag',
    'ORIGINAL',
    'PROXY',
    'TERMINAL',
    'Bmcg',
    'proxy_count',
    'total_proxy_count',
    'bmcg_from_mcg',
    'bmcg_from_dag',
    'validate_bmcg',
]
