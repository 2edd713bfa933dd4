"""
Turing Machine on a Quest Graph
Tape as a linear chain of cells, head as the focus, context capacity 2
"""

import logging
from dataclasses import dataclass
from typing import Dict, Optional, Sequence, Tuple

from .conformance import ACCEPT, BUDGET, ILLEGAL, REJECT, ConformanceResult
from ..automata.turing import LEFT, RIGHT, TmStatus, TuringMachine, tm_run
from ..core.engine import run
from ..core.graph import QuestGraph, new_graph
from ..core.types import EPSILON, Discover, LocalContext, RespondMove, Stop
from ..utils.config import Config

logger = logging.getLogger(__name__)

TAPE_GOAL = "tape"
CAPACITY = 2

# Fresh boundary cells: blank, pointing back at the cell that discovered them
EPS_L = (EPSILON, EPSILON, LEFT)
EPS_R = (EPSILON, EPSILON, RIGHT)

# (focus dir, first neighbor dir, second neighbor dir) -> index of the neighbor holding the state
_STATE_HOLDER = {
    (LEFT, RIGHT, LEFT): 0,
    (RIGHT, RIGHT, LEFT): 1,
    (LEFT, LEFT, RIGHT): 1,
    (RIGHT, LEFT, RIGHT): 0,
}

TM_STATUS = {
    TmStatus.ACCEPTING: ACCEPT,
    TmStatus.REJECTING: REJECT,
    TmStatus.BUDGET: BUDGET,
}


@dataclass(frozen=True)
class TapeFrame:
    """Where input cell 0 sits in a seeded chain.

    Args:
        origin: Node id of input cell 0
        seeded: Number of seeded cells; later ids were discovered
    """

    origin: int
    seeded: int


def tape_frame(input: Sequence[str], head: int = 0) -> TapeFrame:
    cells = max(1, len(input))
    return TapeFrame(origin=1, seeded=cells + 1) if head == 0 else TapeFrame(origin=0, seeded=cells)


def build_tm_tape_graph(tm: TuringMachine, input: Sequence[str], head: int = 0) -> QuestGraph:
    """Lay the initial tape out as a chain.

    Cells left of the head point right, the head and everything after it
    point left, and the start state is planted on the left neighbor of the
    head. With the head on cell 0 a blank carrier cell is prepended for it.

    Args:
        tm: Machine being simulated
        input: Input symbols; empty input seeds a single blank cell
        head: Initial head position within the input

    Returns:
        Chain graph with the focus on the head cell
    """
    cells = list(input) or [tm.blank]
    if not 0 <= head < len(cells):
        raise ValueError(f"head {head} outside a tape of {len(cells)} cells")
    if head == 0:
        cells.insert(0, tm.blank)
        head = 1

    seeds = []
    for position, symbol in enumerate(cells):
        if position < head - 1:
            seeds.append((TAPE_GOAL, (EPSILON, symbol, RIGHT)))
        elif position == head - 1:
            seeds.append((TAPE_GOAL, (tm.start, symbol, RIGHT)))
        else:
            seeds.append((TAPE_GOAL, (EPSILON, symbol, LEFT)))
    links = [(i, i + 1) for i in range(len(cells) - 1)]
    return new_graph(seeds, links, focus_index=head)


def tm_questgraph_agent(tm: TuringMachine):
    """Agent function for the chain-tape simulation.

    The state lives on the neighbor the focus points at. A missing
    neighbor is discovered as a fresh boundary cell before the transition
    is applied.
    """

    def agent(context: LocalContext):
        _, symbol, direction = context.focus.response
        neighbors = context.neighbors

        if len(neighbors) == 1:
            only = neighbors[0]
            holds_state = only.response[2] != direction
            if holds_state and only.response[0] in tm.accepting:
                return Stop()
            boundary = EPS_L if only.response[2] == RIGHT else EPS_R
            return Discover(TAPE_GOAL, boundary, attach=(context.focus.id,))

        if len(neighbors) != 2:
            return None

        index = _STATE_HOLDER.get((direction, neighbors[0].response[2], neighbors[1].response[2]))
        if index is None:
            return None
        state = neighbors[index].response[0]
        if state in tm.accepting:
            return Stop()

        read = tm.blank if symbol == EPSILON else symbol
        target, write, move = tm.step(state, read)
        toward = LEFT if move == RIGHT else RIGHT
        destination = next(n for n in neighbors if n.response[2] == toward)
        return RespondMove((target, write, move), destination.id)

    return agent


def _chain_positions(graph: QuestGraph, frame: TapeFrame) -> Dict[int, int]:
    """Tape position of every cell, with `origin` at 0.

    Seeded cells carry ids in tape order; a cell discovered next to the
    origin lies on the side opposite its seeded neighbor.
    """
    origin, seeded = frame.origin, frame.seeded
    positions = {origin: 0}
    neighbors = graph.neighbors(origin)
    anchor = next(n for n in neighbors if n < seeded)
    for start in neighbors:
        if start < seeded:
            step = -1 if start < origin else 1
        else:
            step = 1 if anchor < origin else -1
        previous, current, position = origin, start, step
        while True:
            positions[current] = position
            onward = [n for n in graph.neighbors(current) if n != previous]
            if not onward:
                break
            previous, current = current, onward[0]
            position += step
    return positions


def read_tape(graph: QuestGraph, frame: TapeFrame, blank: str) -> Dict[int, str]:
    """Non-blank cells keyed by position relative to the first input cell"""
    content = {}
    for node_id, position in _chain_positions(graph, frame).items():
        symbol = graph.nodes[node_id].response[1]
        if symbol != EPSILON and symbol != blank:
            content[position] = symbol
    return content


def direction_triple(graph: QuestGraph, frame: TapeFrame) -> Tuple[Optional[str], str, Optional[str]]:
    """Directions of (left neighbor, focus, right neighbor); None where the chain ends"""
    positions = _chain_positions(graph, frame)
    focus = graph.focus
    by_position = {p: n for n, p in positions.items()}
    left = by_position.get(positions[focus] - 1)
    right = by_position.get(positions[focus] + 1)
    return (
        graph.nodes[left].response[2] if left is not None else None,
        graph.nodes[focus].response[2],
        graph.nodes[right].response[2] if right is not None else None,
    )


def simulate_tm_on_questgraph(tm: TuringMachine, input: Sequence[str], budget: Optional[int] = None,
                              head: int = 0, observer=None) -> ConformanceResult:
    """Run the chain-tape agent and compare with the two-way direct simulation.

    Args:
        tm: Machine
        input: Input symbols
        budget: Maximum number of machine transitions
        head: Initial head position
        observer: Optional per-step hook forwarded to the run loop

    Returns:
        Conformance verdict with both tape read-offs
    """
    budget = Config.DEFAULT_BUDGET if budget is None else budget
    oracle = tm_run(tm, input, budget, start=head, two_way=True)
    graph = build_tm_tape_graph(tm, input, head)
    result = run(graph, tm_questgraph_agent(tm), CAPACITY, 2 * budget + 2, observer=observer)
    tm_steps = result.counts["respond_move"]

    if result.stopped and tm_steps <= budget:
        status = ACCEPT
    elif result.violation is not None:
        status = ILLEGAL
        logger.error(f"{tm.name}: chain-tape agent emitted an illegal action: {result.diagnostic}")
    else:
        status = BUDGET

    output = read_tape(result.graph, tape_frame(input, head), tm.blank)
    oracle_output = oracle.content()
    oracle_status = TM_STATUS[oracle.status]
    agree = status == oracle_status and (status != ACCEPT or output == oracle_output)

    logger.info(f"{tm.name} on {''.join(input)!r}: quest graph {status}, oracle {oracle_status}")
    return ConformanceResult(
        construction="tm-qg",
        status=status,
        oracle_status=oracle_status,
        agree=agree,
        steps=result.steps,
        output=output,
        oracle_output=oracle_output,
        run=result,
        details={"tm_steps": tm_steps, "oracle_steps": oracle.steps,
                 "truncations": result.graph.truncations},
    )
