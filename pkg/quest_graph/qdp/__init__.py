"""
QDP Module
Tree-shaped quest decision processes: actions, trees, legality and rollouts
"""

from .actions import DiscoverInput, DiscoverSubquest, CompleteQuest, Pursue, Retrieve
from .tree import QuestTree, TreeContext, TreeNodeSpec, prebuild
from .providers import InputTape
from .engine import (
    RULE_VOCABULARY,
    RULE_CHILD_LIMIT,
    RULE_STOP_OFF_ROOT,
    RULE_INCOMPLETE_CHILDREN,
    RULE_PURSUE_TARGET,
    RULE_COMPLETE_RESPONSE,
    RULE_COMPLETE_ONCE,
    Variant,
    FqdpConfig,
    Violation,
    qdp_legal,
    fqdp_legal,
    nfqdp_legal,
    QuestTreeEngine,
    fqdp_run,
    nfqdp_run,
    rqdp_run,
    ExhaustiveResult,
    nfqdp_exhaustive,
)

__all__ = [
    'DiscoverInput',
    'DiscoverSubquest',
    'CompleteQuest',
    'Pursue',
    'Retrieve',
    'QuestTree',
    'TreeContext',
    'TreeNodeSpec',
    'prebuild',
    'InputTape',
    'RULE_VOCABULARY',
    'RULE_CHILD_LIMIT',
    'RULE_STOP_OFF_ROOT',
    'RULE_INCOMPLETE_CHILDREN',
    'RULE_PURSUE_TARGET',
    'RULE_COMPLETE_RESPONSE',
    'RULE_COMPLETE_ONCE',
    'Variant',
    'FqdpConfig',
    'Violation',
    'qdp_legal',
    'fqdp_legal',
    'nfqdp_legal',
    'QuestTreeEngine',
    'fqdp_run',
    'nfqdp_run',
    'rqdp_run',
    'ExhaustiveResult',
    'nfqdp_exhaustive',
]
