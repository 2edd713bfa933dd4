"""
Core Module
Quest graph storage, local contexts, actions and the run loop
"""

from .types import (
    Mark,
    EPSILON,
    PARENT,
    TERMINAL,
    REJECT,
    BOTTOM,
    END,
    HALT_MARKS,
    is_complete,
    NodeView,
    LocalContext,
    AgentAction,
    Discover,
    RespondMove,
    Stop,
    StepOutcome,
    HaltReason,
    TraceEvent,
    RunResult,
)
from .graph import QuestNode, QuestGraph, new_graph
from .engine import (
    creation_order_selector,
    observe,
    apply,
    run,
    replay,
    ScriptedAgent,
)

__all__ = [
    'Mark',
    'EPSILON',
    'PARENT',
    'TERMINAL',
    'REJECT',
    'BOTTOM',
    'END',
    'HALT_MARKS',
    'is_complete',
    'NodeView',
    'LocalContext',
    'AgentAction',
    'Discover',
    'RespondMove',
    'Stop',
    'StepOutcome',
    'HaltReason',
    'TraceEvent',
    'RunResult',
    'QuestNode',
    'QuestGraph',
    'new_graph',
    'creation_order_selector',
    'observe',
    'apply',
    'run',
    'replay',
    'ScriptedAgent',
]
