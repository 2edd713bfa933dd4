"""
Computation Graph Simulators
A BMCG evaluated by a quest graph agent, by a memoized RQDP traversal and by FQDP recomputation
"""

import logging
import time
from collections import Counter
from typing import Callable, Dict, List, Optional, Tuple, Union

from .report import OpCounter, SimReport
from ..compgraph.bmcg import PROXY, Bmcg
from ..compgraph.dag import Dag
from ..compgraph.mcg import Mcg
from ..core.engine import run
from ..core.graph import QuestGraph, new_graph
from ..core.types import EPSILON, PARENT, LocalContext, RespondMove, Stop, is_complete
from ..qdp.actions import CompleteQuest, DiscoverSubquest, Retrieve
from ..qdp.engine import FqdpConfig, QuestTreeEngine, Variant
from ..qdp.tree import TreeContext
from ..utils.config import Config

logger = logging.getLogger(__name__)

CG_GOAL = "cg"
DONE = "done"

DependencyGraph = Union[Mcg, Bmcg, Dag]


def _dependency_view(graph: DependencyGraph) -> Tuple[List[str], Callable[[str], List[str]]]:
    if isinstance(graph, Dag):
        return graph.topological_order(), graph.predecessors
    return list(graph.order), graph.dependencies


def bmcg_quest_graph(bmcg: Bmcg) -> QuestGraph:
    """One quest node per BMCG node, goal ("cg", position, kind), focus on the terminal"""
    seeds = [((CG_GOAL, i, bmcg.kinds[label]), EPSILON) for i, label in enumerate(bmcg.order)]
    links = [(bmcg.position(dep), bmcg.position(label)) for label in bmcg.order for dep in bmcg.deps[label]]
    return new_graph(seeds, links, focus_index=len(seeds) - 1)


def dependency_first_selector(graph: QuestGraph, focus: int, neighbor_ids: List[int]) -> List[int]:
    """Uncomputed dependencies first, then the waiting dependents, lowest position first"""
    position = graph.nodes[focus].goal[1]
    pending = sorted((n for n in neighbor_ids
                      if graph.nodes[n].goal[1] < position and graph.nodes[n].response == EPSILON),
                     key=lambda n: graph.nodes[n].goal[1])
    waiting = sorted((n for n in neighbor_ids
                      if graph.nodes[n].goal[1] > position and graph.nodes[n].response == PARENT),
                     key=lambda n: graph.nodes[n].goal[1])
    return pending + waiting


def bmcg_agent(context: LocalContext):
    """Depth-first evaluation: descend into an uncomputed dependency, else compute and return"""
    focus = context.focus
    if is_complete(focus.response):
        return Stop()

    position = focus.goal[1]
    for neighbor in context.neighbors:
        if neighbor.goal[1] < position and neighbor.response == EPSILON:
            return RespondMove(PARENT, neighbor.id)

    done = (DONE, position)
    for neighbor in context.neighbors:
        if neighbor.goal[1] > position and neighbor.response == PARENT:
            return RespondMove(done, neighbor.id)
    return RespondMove(done, focus.id)


def sim_questgraph(bmcg: Bmcg, budget: Optional[int] = None) -> SimReport:
    """Evaluate a BMCG pre-instantiated as a quest graph.

    Args:
        bmcg: Bounded computation graph; its bound is the context capacity
        budget: Step budget, by default four steps per node

    Returns:
        Report; details["visits"] counts the compute writes per node
    """
    graph = bmcg_quest_graph(bmcg)
    budget = 4 * len(bmcg) + 4 if budget is None else budget
    visits: Counter = Counter()

    def count_visits(graph: QuestGraph, context: LocalContext, action):
        if isinstance(action, RespondMove) and isinstance(action.response, tuple):
            visits[bmcg.order[context.focus.id]] += 1

    started = time.perf_counter()
    result = run(graph, bmcg_agent, bmcg.bound, budget, selector=dependency_first_selector,
                 observer=count_visits)
    elapsed = (time.perf_counter() - started) * 1000

    counter = OpCounter(respond_move=result.counts["respond_move"], stop=result.counts["stop"])
    if not result.stopped:
        logger.warning(f"Quest graph simulation of {len(bmcg)} nodes did not stop: {result.reason.value}")
    return SimReport("qg", len(bmcg.originals), bmcg.bound, counter, result.stopped, elapsed,
                     details={"visits": dict(visits), "nodes": len(bmcg),
                              "truncations": result.graph.truncations})


REF_GOAL = "ref"


def _dependency_agent(deps_of: Callable[[str], List[str]], memoized: bool):
    """Agent evaluating the quest (CG_GOAL, label) from the last child it sees.

    With `memoized` every dependency is first looked up with a retrieve and
    only an empty lookup opens a sub-quest; otherwise every dependency is
    recomputed through a sub-quest. Progress is read off the last child
    alone, so a context truncated to one child is enough.
    """

    def next_step(label: str, after: Optional[str]):
        dependencies = deps_of(label)
        index = 0 if after is None else dependencies.index(after) + 1
        if index == len(dependencies):
            return CompleteQuest((DONE, label))
        dep = dependencies[index]
        return Retrieve((REF_GOAL, dep)) if memoized else DiscoverSubquest((CG_GOAL, dep))

    def agent(context: TreeContext):
        focus = context.focus
        if context.is_root and is_complete(focus.response):
            return Stop()

        label = focus.goal[1]
        last = context.last_child
        if last is None:
            return next_step(label, None)
        if last.goal[0] == REF_GOAL and last.response == EPSILON:
            return DiscoverSubquest((CG_GOAL, last.goal[1]))
        return next_step(label, last.goal[1])

    return agent


def _label_reference(parent_ref, goal):
    return goal[1]


def sim_rqdp(graph: DependencyGraph, c: int, budget: Optional[int] = None) -> SimReport:
    """Memoized depth-first evaluation on an RQDP with one reference per node.

    Each dependency is looked up with a retrieve; an empty lookup opens a
    sub-quest that computes it and writes the result at its reference.
    The rollout runs with context capacity `c`; the child limit leaves
    room for a retrieve and a sub-quest per dependency.

    Args:
        graph: MCG, BMCG or DAG
        c: Context capacity of the rollout
        budget: Step budget, by default enough for every edge and node

    Returns:
        Report; details["computes"] counts completions per node
    """
    order, deps_of = _dependency_view(graph)
    edges = sum(len(deps_of(label)) for label in order)
    widest = max((len(deps_of(label)) for label in order), default=0)
    config = FqdpConfig(child_limit=max(1, 2 * widest), capacity=c)
    budget = 2 * (edges + len(order)) + 1 if budget is None else budget

    counter = OpCounter()
    computes: Counter = Counter()

    def count(engine: QuestTreeEngine, context: TreeContext, action):
        if isinstance(action, Retrieve):
            counter.add_retrieve(engine.refgraph.active)
        elif isinstance(action, CompleteQuest):
            computes[context.focus.goal[1]] += 1

    root = order[-1]
    engine = QuestTreeEngine(Variant.RQDP, config, root_goal=(CG_GOAL, root), tau=_label_reference,
                             root_ref=root, record_trace=False)
    started = time.perf_counter()
    result = engine.run(_dependency_agent(deps_of, memoized=True), budget, observer=count)
    elapsed = (time.perf_counter() - started) * 1000

    counter.discover = result.counts["discover_subquest"]
    counter.complete = result.counts["complete_quest"]
    counter.stop = result.counts["stop"]
    if not result.stopped:
        logger.warning(f"RQDP simulation of {len(order)} nodes with C={c} did not stop: "
                       f"{result.reason.value} {result.violation or ''}".rstrip())
    logger.debug(f"RQDP simulation of {len(order)} nodes: {counter.retrieve} retrieves")
    return SimReport("rqdp", len(order), c, counter, result.stopped, elapsed,
                     details={"computes": dict(computes), "references": engine.refgraph.active,
                              "truncations": result.graph.truncations, "violation": result.violation})


def sim_fqdp(bmcg: Bmcg, cap: Optional[int] = None) -> SimReport:
    """Evaluate by full recomputation on an FQDP: every dependency is a fresh sub-quest.

    The rollout runs with child limit and context capacity equal to the
    BMCG bound.

    Raises:
        ValueError: more original nodes than `cap`
    """
    cap = Config.DEFAULT_FQDP_CAP if cap is None else cap
    n = len(bmcg.originals)
    if n > cap:
        raise ValueError(f"FQDP simulation is exponential; {n} nodes exceed the cap of {cap}")

    sizes: Dict[str, int] = {}
    for label in bmcg.order:
        sizes[label] = 1 + sum(sizes[dep] for dep in bmcg.deps[label])
    budget = 2 * sizes[bmcg.terminal]

    computes: Counter = Counter()

    def count(engine: QuestTreeEngine, context: TreeContext, action):
        if isinstance(action, CompleteQuest):
            computes[context.focus.goal[1]] += 1

    config = FqdpConfig(child_limit=bmcg.bound, capacity=bmcg.bound)
    engine = QuestTreeEngine(Variant.FQDP, config, root_goal=(CG_GOAL, bmcg.terminal), record_trace=False)
    started = time.perf_counter()
    result = engine.run(_dependency_agent(bmcg.dependencies, memoized=False), budget, observer=count)
    elapsed = (time.perf_counter() - started) * 1000

    counter = OpCounter(discover=result.counts["discover_subquest"], complete=result.counts["complete_quest"],
                        stop=result.counts["stop"])
    if not result.stopped:
        logger.warning(f"FQDP simulation of {n} nodes did not stop: {result.reason.value}")
    original = sum(k for label, k in computes.items() if bmcg.kinds[label] != PROXY)
    logger.debug(f"FQDP simulation of {n} nodes: {original} original computes")
    return SimReport("fqdp", n, bmcg.bound, counter, result.stopped, elapsed,
                     details={"computes": original, "proxy_computes": counter.complete - original,
                              "per_node": dict(computes), "violation": result.violation})


def compute_counts(report: SimReport) -> Dict[str, int]:
    """Per-node compute counts of an rqdp or fqdp report"""
    key = "computes" if report.variant == "rqdp" else "per_node"
    return dict(report.details[key])
