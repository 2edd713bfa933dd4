"""
CFL Acceptance on an NFQDP
Chain of binary parse trees, one per bracketing, filled in depth-first
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Sequence, Tuple

from scipy.special import comb

from .conformance import ACCEPT, BUDGET, ILLEGAL, REJECT, ConformanceResult
from ..automata.cyk import CnfGrammar, cyk_member
from ..core.graph import QuestGraph
from ..core.types import Stop, is_complete
from ..qdp.actions import CompleteQuest, Pursue
from ..qdp.engine import FqdpConfig, nfqdp_run
from ..qdp.tree import TreeContext, TreeNodeSpec, prebuild

logger = logging.getLogger(__name__)

INPUT = "i"
QUEST = "q"
PRODUCTION = "p"

CFL_CONFIG = FqdpConfig(child_limit=2, capacity=3)


def catalan(n: int) -> int:
    """Number of binary trees with n internal nodes"""
    if n < 0:
        raise ValueError(f"catalan index must be non-negative, got {n}")
    return int(comb(2 * n, n, exact=True)) // (n + 1)


@dataclass
class ParseGraph:
    """Pre-built parse graph plus the bookkeeping the agent never sees.

    Args:
        graph: Quest graph ready for an NFQDP rollout
        spans: Production node id -> (i, j) span of the input it covers
        quest_ids: Quest chain node ids, root first
    """

    graph: QuestGraph
    spans: Dict[int, Tuple[int, int]] = field(default_factory=dict)
    quest_ids: List[int] = field(default_factory=list)


def _bracketings(i: int, j: int) -> List[Any]:
    """Every binary bracketing of input[i:j]; leaves are positions"""
    if j - i == 1:
        return [i]
    shapes = []
    for k in range(i + 1, j):
        for left in _bracketings(i, k):
            for right in _bracketings(k, j):
                shapes.append((left, right))
    return shapes


def build_parse_graph(grammar: CnfGrammar, input: Sequence) -> ParseGraph:
    """Chain one binary parse tree per bracketing of the input.

    Quest node k holds tree k as its first child and quest node k+1 as its
    second. Input leaves carry their terminal as response; production
    nodes start empty. Empty input yields a single quest node.
    """
    if not input:
        return ParseGraph(prebuild([TreeNodeSpec((QUEST,))], []), {}, [0])

    nodes: List[TreeNodeSpec] = []
    links: List[Tuple[int, int]] = []
    spans: Dict[int, Tuple[int, int]] = {}
    quest_ids: List[int] = []

    def add(spec: TreeNodeSpec, parent: Optional[int]) -> int:
        nodes.append(spec)
        node_id = len(nodes) - 1
        if parent is not None:
            links.append((parent, node_id))
        return node_id

    def add_tree(shape: Any, parent: int) -> Tuple[int, int]:
        node_id = add(TreeNodeSpec((PRODUCTION,)), parent)
        if isinstance(shape, int):
            add(TreeNodeSpec((INPUT,), input[shape]), node_id)
            spans[node_id] = (shape, shape + 1)
        else:
            start, _ = add_tree(shape[0], node_id)
            _, end = add_tree(shape[1], node_id)
            spans[node_id] = (start, end)
        return spans[node_id]

    parent = None
    for shape in _bracketings(0, len(input)):
        quest = add(TreeNodeSpec((QUEST,)), parent)
        quest_ids.append(quest)
        add_tree(shape, quest)
        parent = quest

    graph = prebuild(nodes, links)
    logger.debug(f"Parse graph for {len(input)} symbols: {len(quest_ids)} trees, {len(graph)} nodes")
    return ParseGraph(graph, spans, quest_ids)


def nfqdp_cfl_agent(grammar: CnfGrammar):
    """Agent filling production nodes with the nonterminals deriving their span.

    Children are pursued first to last; a quest node answers true when its
    own tree derives the start symbol or the next quest node answered true.
    """

    def agent(context: TreeContext):
        focus = context.focus
        if context.is_root and is_complete(focus.response):
            return Stop()

        pending = context.incomplete_children()
        if pending:
            return Pursue(pending[0].id)

        children = context.children
        if focus.goal[0] == PRODUCTION:
            if children[0].goal[0] == INPUT:
                return CompleteQuest(grammar.producers_of_terminal(children[0].response))
            return CompleteQuest(grammar.producers_of_pair(children[0].response, children[1].response))

        if not children:
            return CompleteQuest(grammar.allows_empty)
        derived = grammar.start in children[0].response
        onward = len(children) > 1 and children[1].response is True
        return CompleteQuest(derived or onward)

    return agent


def simulate_cfl_on_nfqdp(grammar: CnfGrammar, input: Sequence, budget: Optional[int] = None,
                          record_trace: bool = True) -> ConformanceResult:
    """Decide membership on the parse graph and compare with CYK.

    Args:
        grammar: CNF grammar
        input: Input symbols
        budget: Step budget; defaults to two actions per node plus the stop
        record_trace: Keep the per-step trace (off for long sweeps)

    Returns:
        Conformance verdict; details carry the parse graph
    """
    parse = build_parse_graph(grammar, input)
    if budget is None:
        budget = 2 * len(parse.graph) + 2
    result = nfqdp_run(nfqdp_cfl_agent(grammar), CFL_CONFIG, budget, graph=parse.graph,
                       record_trace=record_trace)

    root = result.graph.nodes[0].response
    if result.violation is not None:
        status = ILLEGAL
        logger.error(f"{grammar.name}: NFQDP agent halted on {result.violation}: {result.diagnostic}")
    elif not result.stopped:
        status = BUDGET
    else:
        status = ACCEPT if root is True else REJECT

    member, derivations = cyk_member(grammar, input)
    oracle_status = ACCEPT if member else REJECT
    return ConformanceResult(
        construction="cfl-nfqdp",
        status=status,
        oracle_status=oracle_status,
        agree=status == oracle_status,
        steps=result.steps,
        output=root,
        oracle_output=member,
        run=result,
        details={"parse": parse, "trees": len(parse.quest_ids), "derivations": derivations},
    )
