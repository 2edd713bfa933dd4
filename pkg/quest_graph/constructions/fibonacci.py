"""
Fibonacci on an RQDP
Memoized recursion: compute F(n-1) as a sub-quest, retrieve F(n-2) by reference
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict

from ..core.types import EPSILON, RunResult, Stop, is_complete
from ..qdp.actions import CompleteQuest, DiscoverInput, DiscoverSubquest, Retrieve
from ..qdp.engine import FqdpConfig, QuestTreeEngine, Variant
from ..qdp.tree import TreeContext
from ..reference.refgraph import ReferenceGraph

logger = logging.getLogger(__name__)

ROOT = ("fib",)
MINUS_ONE = ("n-1",)
MINUS_TWO = ("n-2",)
INPUT = ("in",)

MORE = "more"
BASE = "base"

FIB_CONFIG = FqdpConfig(child_limit=3, capacity=4)


def fibonacci_tau(reference: int, goal: Any) -> int:
    if goal == MINUS_ONE:
        return reference - 1
    if goal == MINUS_TWO:
        return reference - 2
    return reference


class CountdownProvider:
    """Answers "more" until the recursion reaches F(2), then "base" """

    def __init__(self, n: int):
        self.remaining = max(0, n - 2)

    def __call__(self, goal: Any) -> str:
        if self.remaining > 0:
            self.remaining -= 1
            return MORE
        return BASE


def fibonacci_agent(context: TreeContext):
    focus = context.focus
    last = context.last_child

    if context.is_root and is_complete(focus.response):
        return Stop()
    if last is None:
        return DiscoverInput(INPUT)
    if last.goal == INPUT:
        return CompleteQuest(1) if last.response == BASE else DiscoverSubquest(MINUS_ONE)
    if last.goal == MINUS_ONE:
        return Retrieve(MINUS_TWO)

    # F(1) is never written, so an empty retrieval stands for it
    previous = context.children[-2].response
    cached = 1 if last.response == EPSILON else last.response
    return CompleteQuest(previous + cached)


@dataclass
class FibonacciRun:
    """F(n) from the root plus the value computed at each reference"""

    value: Any
    result: RunResult
    refgraph: ReferenceGraph
    values: Dict[int, Any]


def fibonacci_rqdp(n: int, budget: int = 1000) -> FibonacciRun:
    """Compute F(n), with F(1) = F(2) = 1, on an RQDP"""
    if n < 1:
        raise ValueError(f"Fibonacci index must be at least 1, got {n}")

    engine = QuestTreeEngine(Variant.RQDP, FIB_CONFIG, root_goal=ROOT, provider=CountdownProvider(n),
                             tau=fibonacci_tau, root_ref=n)
    result = engine.run(fibonacci_agent, budget)
    values = {engine.refs[node_id]: node.response for node_id, node in result.graph.nodes.items()
              if node.goal in (ROOT, MINUS_ONE) and is_complete(node.response)}

    logger.info(f"F({n}) = {result.graph.nodes[0].response} after {result.steps} steps, "
                f"{result.counts['retrieve']} retrievals")
    return FibonacciRun(result.graph.nodes[0].response, result, engine.refgraph, values)
