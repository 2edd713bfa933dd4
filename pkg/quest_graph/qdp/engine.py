"""
Quest Decision Process Engine
Legality rules and rollouts for the FQDP, NFQDP, RQDP and NRQDP variants
"""

import copy
import logging
from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

from .actions import CompleteQuest, DiscoverInput, DiscoverSubquest, Pursue, Retrieve
from .tree import QuestTree, TreeContext
from ..core.graph import QuestGraph, new_graph
from ..core.types import (
    EPSILON,
    PARENT,
    AgentAction,
    HaltReason,
    RunResult,
    StepOutcome,
    Stop,
    TraceEvent,
    is_complete,
)
from ..reference.refgraph import ReferenceGraph, TauFn, assign_reference

logger = logging.getLogger(__name__)

QdpAgent = Callable[[TreeContext], AgentAction]
InputProvider = Callable[[Any], Any]

RULE_VOCABULARY = "vocabulary"
RULE_CHILD_LIMIT = "child-limit"
RULE_STOP_OFF_ROOT = "stop-off-root"
RULE_INCOMPLETE_CHILDREN = "incomplete-children"
RULE_PURSUE_TARGET = "pursue-target"
RULE_COMPLETE_RESPONSE = "complete-response"
RULE_COMPLETE_ONCE = "complete-once"


class Variant(str, Enum):
    FQDP = "fqdp"
    NFQDP = "nfqdp"
    RQDP = "rqdp"
    NRQDP = "nrqdp"

    @property
    def nondeterministic(self) -> bool:
        return self in (Variant.NFQDP, Variant.NRQDP)

    @property
    def referenced(self) -> bool:
        return self in (Variant.RQDP, Variant.NRQDP)


_VOCABULARY = {
    Variant.FQDP: (DiscoverInput, DiscoverSubquest, CompleteQuest, Stop),
    Variant.NFQDP: (DiscoverInput, DiscoverSubquest, Pursue, CompleteQuest, Stop),
    Variant.RQDP: (DiscoverInput, DiscoverSubquest, Retrieve, CompleteQuest, Stop),
    Variant.NRQDP: (DiscoverInput, DiscoverSubquest, Pursue, Retrieve, CompleteQuest, Stop),
}


@dataclass(frozen=True)
class FqdpConfig:
    """Child limit and context capacity of a quest decision process"""

    child_limit: int = 4
    capacity: int = 4

    def __post_init__(self):
        if self.child_limit < 1:
            raise ValueError(f"child_limit must be at least 1, got {self.child_limit}")
        if self.capacity < 1:
            raise ValueError(f"capacity must be at least 1, got {self.capacity}")


@dataclass(frozen=True)
class Violation:
    rule: str
    message: str


def qdp_legal(variant: Variant, context: TreeContext, tree: QuestTree, config: FqdpConfig,
              action: AgentAction) -> Optional[Violation]:
    """Check one action against the structural rules of a variant.

    Returns:
        None when legal, otherwise the violated rule
    """
    if not isinstance(action, _VOCABULARY[variant]):
        return Violation(RULE_VOCABULARY, f"{action!r} is not a {variant.value} action")

    focus = context.focus.id
    if isinstance(action, (DiscoverInput, DiscoverSubquest, Retrieve)):
        if len(tree.children[focus]) >= config.child_limit:
            return Violation(RULE_CHILD_LIMIT, f"node {focus} already has {config.child_limit} children")
    elif isinstance(action, Stop):
        if not tree.is_root(focus):
            return Violation(RULE_STOP_OFF_ROOT, f"stop requested at non-root node {focus}")
    elif isinstance(action, CompleteQuest):
        if not is_complete(action.response):
            return Violation(RULE_COMPLETE_RESPONSE, f"completion response {action.response!r} is not complete")
        if variant.nondeterministic and is_complete(context.focus.response):
            return Violation(RULE_COMPLETE_ONCE, f"node {focus} already answered {context.focus.response!r}")
        if variant.nondeterministic and tree.incomplete_children(focus):
            return Violation(RULE_INCOMPLETE_CHILDREN, f"node {focus} still has incomplete children")
    elif isinstance(action, Pursue):
        if action.child not in tree.children[focus]:
            return Violation(RULE_PURSUE_TARGET, f"node {action.child} is not a child of {focus}")
        if tree.complete[action.child]:
            return Violation(RULE_PURSUE_TARGET, f"child {action.child} is already complete")
    return None


def fqdp_legal(context: TreeContext, tree: QuestTree, config: FqdpConfig,
               action: AgentAction) -> Optional[Violation]:
    return qdp_legal(Variant.FQDP, context, tree, config, action)


def nfqdp_legal(context: TreeContext, tree: QuestTree, config: FqdpConfig,
                action: AgentAction) -> Optional[Violation]:
    return qdp_legal(Variant.NFQDP, context, tree, config, action)


class QuestTreeEngine:
    """Rollout state of one quest decision process.

    The engine owns the graph, its tree view and, for referenced variants,
    the node references and the reference graph. `run` may be called
    repeatedly; state carries over between calls.
    """

    def __init__(self, variant: Variant, config: FqdpConfig, graph: Optional[QuestGraph] = None,
                 root_goal: Any = None, provider: Optional[InputProvider] = None,
                 tau: Optional[TauFn] = None, refgraph: Optional[ReferenceGraph] = None,
                 root_ref: Hashable = 0, record_trace: bool = True):
        self.variant = variant
        self.config = config
        self.graph = graph if graph is not None else new_graph([(root_goal, EPSILON)])
        self.tree = QuestTree.from_graph(self.graph, root=0)
        self.provider = provider
        self.tau = tau
        self.record_trace = record_trace
        self.refs: Dict[int, Hashable] = {}
        self.refgraph = refgraph
        self.trace: List[TraceEvent] = []
        self.counts: Counter = Counter()
        self.steps = 0

        if variant.referenced:
            if tau is None:
                raise ValueError(f"{variant.value} needs a reference function")
            if self.refgraph is None:
                self.refgraph = ReferenceGraph()
            self.refs[self.tree.root] = root_ref
            self.refgraph.register(root_ref)
            for node in sorted(self.tree.parent):
                self._assign_subtree(node)
            self.refgraph.head = self.refs[self.graph.focus]

    def _assign_subtree(self, node: int):
        for child in self.tree.children[node]:
            if child not in self.refs:
                self.refs[child] = assign_reference(self.refs[node], self.graph.nodes[child].goal,
                                                    self.tau, self.refgraph)
                self._assign_subtree(child)

    @property
    def focus_ref(self) -> Optional[Hashable]:
        return self.refs.get(self.graph.focus)

    def context(self) -> TreeContext:
        graph = self.graph
        focus = graph.focus
        parent = self.tree.parent[focus]
        children = self.tree.children[focus]
        room = max(0, self.config.capacity - (parent is not None))
        if len(children) > room:
            graph.truncations += 1
            children = children[len(children) - room:] if room else []
        return TreeContext(
            focus=graph.view(focus),
            parent=graph.view(parent) if parent is not None else None,
            children=tuple(graph.view(c) for c in children),
        )

    def legal(self, context: TreeContext, action: AgentAction) -> Optional[Violation]:
        return qdp_legal(self.variant, context, self.tree, self.config, action)

    def apply(self, action: AgentAction, context: TreeContext) -> StepOutcome:
        """Apply an action already checked by `legal`"""
        graph = self.graph
        focus = graph.focus

        if isinstance(action, Stop):
            return StepOutcome(halted=True)

        graph.tick()
        if isinstance(action, DiscoverInput):
            response = action.response
            if response is None:
                response = self.provider(action.goal) if self.provider is not None else EPSILON
            child = self._add_child(focus, action.goal, response)
            if self.variant.referenced and response != EPSILON:
                self.refgraph.record(self.refs[child], response, graph.clock)
            outcome = StepOutcome(created=child)

        elif isinstance(action, DiscoverSubquest):
            child = self._add_child(focus, action.goal, EPSILON)
            if not self.variant.nondeterministic:
                self._set_response(focus, PARENT)
                graph.move_focus(child)
            outcome = StepOutcome(created=child)

        elif isinstance(action, Retrieve):
            reference = self.tau(self.refs[focus], action.goal)
            child = self._add_child(focus, action.goal, self.refgraph.retrieve(reference))
            outcome = StepOutcome(created=child)

        elif isinstance(action, Pursue):
            self._set_response(focus, PARENT)
            graph.move_focus(action.child)
            outcome = StepOutcome()

        else:
            self._set_response(focus, action.response)
            if self.variant.referenced:
                self.refgraph.record(self.refs[focus], action.response, graph.clock)
            parent = self.tree.parent[focus]
            if parent is not None:
                if graph.nodes[parent].response == PARENT:
                    self._set_response(parent, EPSILON)
                graph.move_focus(parent)
            outcome = StepOutcome()

        if self.variant.referenced:
            self.refgraph.head = self.refs[graph.focus]
        return outcome

    def _add_child(self, parent: int, goal: Any, response: Any) -> int:
        child = self.graph.add_node(goal, response)
        self.graph.add_edge(parent, child)
        self.tree.add_child(parent, child, is_complete(response))
        if self.variant.referenced:
            self.refs[child] = assign_reference(self.refs[parent], goal, self.tau, self.refgraph)
        return child

    def _set_response(self, node: int, response: Any):
        self.graph.set_response(node, response)
        self.tree.complete[node] = is_complete(response)

    def _step(self, action: AgentAction, context: TreeContext) -> StepOutcome:
        outcome = self.apply(action, context)
        if self.record_trace:
            self.trace.append(TraceEvent(self.steps, context.focus.id, context.digest(), action, outcome.created))
        self.counts[action.kind] += 1
        self.steps += 1
        return outcome

    def result(self, reason: HaltReason, violation: Optional[Violation] = None) -> RunResult:
        return RunResult(
            reason=reason,
            graph=self.graph,
            trace=list(self.trace),
            counts=Counter(self.counts),
            steps=self.steps,
            diagnostic=violation.message if violation else None,
            violation=violation.rule if violation else None,
        )

    def run(self, agent: QdpAgent, budget: int,
            observer: Optional[Callable[['QuestTreeEngine', TreeContext, AgentAction], None]] = None) -> RunResult:
        """Drive the agent until Stop, an illegal action or `budget` more steps"""
        if budget < 0:
            raise ValueError(f"budget must be non-negative, got {budget}")

        for _ in range(budget):
            context = self.context()
            action = agent(context)
            violation = self.legal(context, action)
            if violation is not None:
                logger.warning(f"{self.variant.value} rollout halted at step {self.steps}: "
                               f"{violation.rule} ({violation.message})")
                return self.result(HaltReason.ILLEGAL, violation)

            outcome = self._step(action, context)
            if observer is not None:
                observer(self, context, action)
            if outcome.halted:
                logger.debug(f"{self.variant.value} rollout stopped after {self.steps} steps, "
                             f"{len(self.graph)} nodes")
                return self.result(HaltReason.STOPPED)

        return self.result(HaltReason.BUDGET)

    def copy(self) -> 'QuestTreeEngine':
        return copy.deepcopy(self)

    def __repr__(self):
        return (f"<QuestTreeEngine(variant={self.variant.value}, nodes={len(self.graph)}, "
                f"focus={self.graph.focus}, steps={self.steps})>")


def fqdp_run(agent: QdpAgent, config: FqdpConfig, budget: int, *, graph: Optional[QuestGraph] = None,
             root_goal: Any = None, provider: Optional[InputProvider] = None,
             observer=None) -> RunResult:
    """Depth-first rollout under FQDP rules"""
    engine = QuestTreeEngine(Variant.FQDP, config, graph=graph, root_goal=root_goal, provider=provider)
    return engine.run(agent, budget, observer)


def nfqdp_run(agent: QdpAgent, config: FqdpConfig, budget: int, *, graph: Optional[QuestGraph] = None,
              root_goal: Any = None, provider: Optional[InputProvider] = None,
              observer=None, record_trace: bool = True) -> RunResult:
    """Rollout under NFQDP rules, typically over a pre-built tree"""
    engine = QuestTreeEngine(Variant.NFQDP, config, graph=graph, root_goal=root_goal,
                             provider=provider, record_trace=record_trace)
    return engine.run(agent, budget, observer)


def rqdp_run(agent: QdpAgent, tau: TauFn, config: FqdpConfig, budget: int, *,
             graph: Optional[QuestGraph] = None, root_goal: Any = None,
             provider: Optional[InputProvider] = None, refgraph: Optional[ReferenceGraph] = None,
             root_ref: Hashable = 0, nondeterministic: bool = False,
             observer=None) -> Tuple[RunResult, ReferenceGraph]:
    """Rollout with references and the retrieve action.

    Returns:
        Run result and the final reference graph
    """
    variant = Variant.NRQDP if nondeterministic else Variant.RQDP
    engine = QuestTreeEngine(variant, config, graph=graph, root_goal=root_goal, provider=provider,
                             tau=tau, refgraph=refgraph, root_ref=root_ref)
    result = engine.run(agent, budget, observer)
    return result, engine.refgraph


@dataclass
class ExhaustiveResult:
    accepted: bool
    branches: int
    witness: Optional[RunResult] = None
    truncated: bool = False


def nfqdp_exhaustive(agent: QdpAgent, config: FqdpConfig, budget: int,
                     accept: Callable[[QuestGraph], bool], *, graph: Optional[QuestGraph] = None,
                     root_goal: Any = None, provider: Optional[InputProvider] = None,
                     max_branches: int = 10000) -> ExhaustiveResult:
    """Decide acceptance as existence over every legal Pursue choice.

    Whenever the agent pursues, each other incomplete child is explored on
    a copy of the rollout. A branch accepts when it stops and `accept`
    holds on its graph.

    Exploration stops after `max_branches` branches; a rejection reached
    with branches left unexplored is marked truncated.
    """
    start = QuestTreeEngine(Variant.NFQDP, config, graph=graph.copy() if graph is not None else None,
                            root_goal=root_goal, provider=provider)
    pending = [start]
    branches = 0

    while pending and branches < max_branches:
        engine = pending.pop()
        branches += 1
        while engine.steps < budget:
            context = engine.context()
            action = agent(context)
            if isinstance(action, Pursue):
                options = engine.tree.incomplete_children(context.focus.id)
                for alternative in reversed(options[1:]):
                    clone = engine.copy()
                    clone._step(Pursue(alternative), context)
                    pending.append(clone)
                if options:
                    action = Pursue(options[0])
            if engine.legal(context, action) is not None:
                break
            if engine._step(action, context).halted:
                if accept(engine.graph):
                    logger.debug(f"Exhaustive NFQDP accepted after {branches} branches")
                    return ExhaustiveResult(True, branches, engine.result(HaltReason.STOPPED))
                break

    if pending:
        logger.warning(f"Exhaustive NFQDP stopped at {max_branches} branches with {len(pending)} unexplored; "
                       f"rejection is not conclusive")
        return ExhaustiveResult(False, branches, truncated=True)
    return ExhaustiveResult(False, branches)
