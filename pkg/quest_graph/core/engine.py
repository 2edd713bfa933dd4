"""
Quest Graph Engine
Observation, action application and the budgeted run loop
"""

import logging
from collections import Counter
from typing import Callable, List, Optional, Sequence

from .graph import QuestGraph
from .types import (
    AgentAction,
    Discover,
    HaltReason,
    LocalContext,
    RespondMove,
    RunResult,
    StepOutcome,
    Stop,
    TraceEvent,
)
from ..utils.errors import IllegalActionError

logger = logging.getLogger(__name__)

Agent = Callable[[LocalContext], AgentAction]
Selector = Callable[[QuestGraph, int, List[int]], List[int]]
Observer = Callable[[QuestGraph, LocalContext, AgentAction], None]


def creation_order_selector(graph: QuestGraph, focus: int, neighbor_ids: List[int]) -> List[int]:
    """Default neighbor policy: ascending creation time"""
    return sorted(neighbor_ids, key=lambda n: (graph.nodes[n].created_at, n))


def observe(graph: QuestGraph, capacity: int, selector: Optional[Selector] = None) -> LocalContext:
    """Build the agent's local context around the focus.

    Args:
        graph: Quest graph
        capacity: Context capacity C
        selector: Neighbor ordering policy

    Returns:
        Focus snapshot plus at most C neighbor snapshots
    """
    if capacity < 1:
        raise ValueError(f"context capacity must be positive, got {capacity}")

    ordered = (selector or creation_order_selector)(graph, graph.focus, graph.neighbors(graph.focus))
    if len(ordered) > capacity:
        graph.truncations += 1
        ordered = ordered[:capacity]

    return LocalContext(
        focus=graph.view(graph.focus),
        neighbors=tuple(graph.view(n) for n in ordered)
    )


def apply(graph: QuestGraph, action: AgentAction, context: LocalContext) -> StepOutcome:
    """Apply one action to the graph.

    Raises:
        IllegalActionError: malformed action or pointer outside the context
    """
    members = context.members

    if isinstance(action, Stop):
        return StepOutcome(halted=True)

    if isinstance(action, Discover):
        if not action.attach:
            raise IllegalActionError("discovered node must attach to the context", "discover-unattached")
        if len(set(action.attach)) != len(action.attach):
            raise IllegalActionError(f"duplicate attach pointers {action.attach}", "discover-duplicate")
        for target in action.attach:
            if target not in members:
                raise IllegalActionError(f"attach pointer {target} is not in the context", "pointer")
        graph.tick()
        created = graph.add_node(action.goal, action.response)
        for target in action.attach:
            graph.add_edge(created, target)
        return StepOutcome(created=created)

    if isinstance(action, RespondMove):
        if action.move_to not in members:
            raise IllegalActionError(f"move pointer {action.move_to} is not in the context", "pointer")
        graph.tick()
        graph.set_response(context.focus.id, action.response)
        graph.move_focus(action.move_to)
        return StepOutcome()

    raise IllegalActionError(f"malformed action {action!r}", "malformed")


def run(graph: QuestGraph, agent: Agent, capacity: int, budget: int,
        selector: Optional[Selector] = None, observer: Optional[Observer] = None) -> RunResult:
    """Repeat observe, decide, apply until Stop or the budget runs out.

    The graph is mutated in place and returned inside the result.
    """
    if budget < 0:
        raise ValueError(f"budget must be non-negative, got {budget}")

    trace: List[TraceEvent] = []
    counts: Counter = Counter()
    steps = 0

    while steps < budget:
        context = observe(graph, capacity, selector)
        action = agent(context)
        try:
            outcome = apply(graph, action, context)
        except IllegalActionError as e:
            logger.warning(f"Run halted on illegal action at step {steps}: {str(e)}")
            return RunResult(HaltReason.ILLEGAL, graph, trace, counts, steps,
                             diagnostic=str(e), violation=e.rule)

        trace.append(TraceEvent(steps, context.focus.id, context.digest(), action, outcome.created))
        counts[action.kind] += 1
        steps += 1
        if observer is not None:
            observer(graph, context, action)
        if outcome.halted:
            logger.debug(f"Run stopped after {steps} steps with {len(graph)} nodes")
            return RunResult(HaltReason.STOPPED, graph, trace, counts, steps)

    logger.debug(f"Run exhausted its budget of {budget} steps")
    return RunResult(HaltReason.BUDGET, graph, trace, counts, steps)


def replay(initial: QuestGraph, trace: Sequence[TraceEvent], capacity: int,
           selector: Optional[Selector] = None) -> QuestGraph:
    """Re-apply a trace to a copy of its initial graph"""
    graph = initial.copy()
    for event in trace:
        apply(graph, event.action, observe(graph, capacity, selector))
    return graph


class ScriptedAgent:
    """Agent that plays back a fixed list of actions, ignoring its context"""

    def __init__(self, actions: Sequence[AgentAction]):
        self.actions = list(actions)
        self.position = 0

    def __call__(self, context: LocalContext) -> Optional[AgentAction]:
        if self.position >= len(self.actions):
            return None
        action = self.actions[self.position]
        self.position += 1
        return action

    @property
    def exhausted(self) -> bool:
        return self.position >= len(self.actions)
