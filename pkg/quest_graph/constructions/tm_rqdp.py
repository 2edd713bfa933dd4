"""
Turing Machine on an RQDP
References as tape positions; quest, replica, fetch and write nodes
"""

import logging
from typing import Any, Dict, Hashable, List, Optional, Sequence

from .conformance import ACCEPT, BUDGET, ILLEGAL, REJECT, ConformanceResult
from .tm_questgraph import TM_STATUS
from ..automata.turing import RIGHT, TuringMachine, tm_run
from ..core.engine import ScriptedAgent
from ..core.types import EPSILON, HALT_MARKS, REJECT as REJECT_MARK, TERMINAL, Stop
from ..qdp.actions import CompleteQuest, DiscoverInput, DiscoverSubquest, Retrieve
from ..qdp.engine import FqdpConfig, QuestTreeEngine, Variant
from ..qdp.tree import TreeContext
from ..reference.refgraph import ReferenceGraph
from ..utils.config import Config
from ..utils.errors import IllegalActionError

logger = logging.getLogger(__name__)

QUEST = "q"
REPLICA = "q'"
FETCH = "f"
WRITE = "w"

TM_RQDP_CONFIG = FqdpConfig(child_limit=4, capacity=4)


def tape_tau(reference: int, goal: Any) -> int:
    """Quest nodes sit one cell to the right of their parent; every other node shares its cell"""
    return reference + 1 if goal[0] == QUEST else reference


def _halted(response: Any) -> bool:
    return isinstance(response, tuple) and response[0] in HALT_MARKS


def rqdp_tm_agent(tm: TuringMachine):
    """Agent running `tm` over references 0, 1, 2, ... as tape cells.

    A quest node fetches its cell and applies one transition. A right move
    leaves a write node holding the new symbol and opens a quest node one
    cell further; a left move completes the current node with (state,
    symbol), and the write node it returns through hands the state to a
    replica of the cell it guards.
    """

    def transition(state: str, symbol: str, context: TreeContext):
        if state in tm.accepting:
            return CompleteQuest((TERMINAL, symbol))
        target, write, move = tm.step(state, symbol)
        if move == RIGHT:
            return DiscoverSubquest((WRITE, target, write))
        if context.is_root:
            return CompleteQuest((REJECT_MARK, write))
        return CompleteQuest((target, write))

    def agent(context: TreeContext):
        focus = context.focus
        kind, state, symbol = focus.goal
        last = context.last_child

        if context.is_root and _halted(focus.response):
            return Stop()

        if kind == WRITE:
            if last is None:
                return DiscoverSubquest((QUEST, state, EPSILON))
            if _halted(last.response):
                return CompleteQuest((last.response[0], symbol))
            return CompleteQuest(last.response)

        if last is None:
            if kind == QUEST:
                return Retrieve((FETCH, state, EPSILON))
            return transition(state, symbol, context)

        child_kind = last.goal[0]
        if child_kind == FETCH:
            cached = last.response
            read = tm.blank if cached == EPSILON else cached[1]
            return transition(state, read, context)
        if child_kind == WRITE:
            if _halted(last.response):
                return CompleteQuest((last.response[0], last.goal[2]))
            return DiscoverSubquest((REPLICA, last.response[0], last.goal[2]))
        # replica finished
        if not _halted(last.response) and context.is_root:
            return CompleteQuest((REJECT_MARK, last.response[1]))
        return CompleteQuest(last.response)

    return agent


def rqdp_tm_initializer(tm: TuringMachine, input: Sequence[str]) -> QuestTreeEngine:
    """Write the input along references 0..n-1 and park the focus on the last cell.

    The fetch that would normally read a cell is replaced by a discover-input
    carrying the input symbol, so the reference graph starts out holding
    the whole input.
    """
    actions = []
    for j, symbol in enumerate(input):
        actions.append(DiscoverInput((FETCH, tm.start, EPSILON), (EPSILON, symbol)))
        if j < len(input) - 1:
            actions.append(DiscoverSubquest((WRITE, tm.start, symbol)))
            actions.append(DiscoverSubquest((QUEST, tm.start, EPSILON)))

    engine = QuestTreeEngine(Variant.RQDP, TM_RQDP_CONFIG, root_goal=(QUEST, tm.start, EPSILON),
                             tau=tape_tau, root_ref=0)
    if actions:
        setup = engine.run(ScriptedAgent(actions), len(actions))
        if setup.violation is not None:
            raise IllegalActionError(f"initializer rejected by the engine: {setup.diagnostic}", setup.violation)
    return engine


def read_reference_tape(refgraph: ReferenceGraph, blank: str) -> Dict[int, str]:
    """Non-blank cells from the latest response stored at each reference"""
    return {ref: response[1] for ref, response in refgraph.items()
            if response != EPSILON and response[1] != blank}


def simulate_tm_on_rqdp(tm: TuringMachine, input: Sequence[str], budget: Optional[int] = None,
                        observer=None) -> ConformanceResult:
    """Run the reference-based simulation next to the one-way direct run.

    The focus reference is sampled every time the agent is about to apply
    a transition; those samples must follow the oracle's head trace.

    Args:
        tm: Machine with a one-way tape
        input: Input symbols
        budget: Maximum number of machine transitions
        observer: Optional extra per-step hook

    Returns:
        Conformance verdict; details carry the head samples and the reference graph
    """
    budget = Config.DEFAULT_BUDGET if budget is None else budget
    oracle = tm_run(tm, input, budget, start=max(0, len(input) - 1))
    engine = rqdp_tm_initializer(tm, input)
    heads: List[Hashable] = []

    def sample_heads(engine: QuestTreeEngine, context: TreeContext, action):
        kind = context.focus.goal[0]
        last = context.last_child
        if (kind == QUEST and last is not None and last.goal[0] == FETCH) or \
                (kind == REPLICA and last is None):
            heads.append(engine.refs[context.focus.id])
        if observer is not None:
            observer(engine, context, action)

    result = engine.run(rqdp_tm_agent(tm), 12 * (budget + len(input)) + 20, sample_heads)
    root = result.graph.nodes[0].response

    if result.violation is not None:
        status = ILLEGAL
        logger.error(f"{tm.name}: RQDP agent halted on {result.violation}: {result.diagnostic}")
    elif result.stopped and root[0] == TERMINAL and len(heads) - 1 <= budget:
        status = ACCEPT
    elif result.stopped and root[0] == REJECT_MARK and len(heads) <= budget:
        status = REJECT
    else:
        status = BUDGET

    output = read_reference_tape(engine.refgraph, tm.blank)
    oracle_output = oracle.content()
    oracle_status = TM_STATUS[oracle.status]
    agree = status == oracle_status and (status != ACCEPT or output == oracle_output)
    overlap = min(len(heads), len(oracle.head_trace))
    head_trace_ok = heads[:overlap] == oracle.head_trace[:overlap]

    logger.info(f"{tm.name} on {''.join(input)!r}: RQDP {status}, oracle {oracle_status}")
    return ConformanceResult(
        construction="tm-rqdp",
        status=status,
        oracle_status=oracle_status,
        agree=agree and head_trace_ok,
        steps=result.steps,
        output=output,
        oracle_output=oracle_output,
        run=result,
        details={"heads": heads, "head_trace_ok": head_trace_ok, "refgraph": engine.refgraph,
                 "references": len(engine.refgraph), "truncations": result.graph.truncations},
    )
