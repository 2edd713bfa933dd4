"""
Scripted Rollouts
Small hand-written quest graph and quest tree runs
"""

import logging
from typing import List, Sequence, Tuple

from ..core.engine import ScriptedAgent, run
from ..core.graph import QuestGraph, new_graph
from ..core.types import EPSILON, AgentAction, Discover, LocalContext, RespondMove, RunResult, Stop
from ..qdp.actions import CompleteQuest, DiscoverInput, DiscoverSubquest
from ..qdp.engine import FqdpConfig, fqdp_run

logger = logging.getLogger(__name__)

KIRK_OR_PICARD = "Kirk or Picard?"
KIRK_OR_PICARD_HOPS = (("Kirk who?", "Captain..."), ("Picard who?", "TNG..."))
KIRK_OR_PICARD_ANSWER = "Picard!"

GRILL_CARROT = "Grill carrot"


def multi_hop_agent(question: str, hops: Sequence[Tuple[str, str]], answer: str):
    """Agent that opens one node per sub-question, answers them in turn, then the question.

    Every new sub-question node is attached to the question and to the
    previous sub-question, so each one sees the next one to answer.
    """
    answers = dict(hops)
    order = [q for q, _ in hops]

    def agent(context: LocalContext) -> AgentAction:
        focus = context.focus
        neighbors = context.neighbors

        if focus.goal == question:
            if focus.response != EPSILON:
                return Stop()
            if len(neighbors) < len(order):
                attach = (focus.id,) + ((neighbors[-1].id,) if neighbors else ())
                return Discover(order[len(neighbors)], attach=attach)
            pending = [n for n in neighbors if n.response == EPSILON]
            if pending:
                return RespondMove(EPSILON, pending[0].id)
            return RespondMove(answer, focus.id)

        pending = [n for n in neighbors if n.goal != question and n.response == EPSILON]
        if pending:
            return RespondMove(answers[focus.goal], pending[0].id)
        root = next(n for n in neighbors if n.goal == question)
        return RespondMove(answers[focus.goal], root.id)

    return agent


def multi_hop_graph(question: str = KIRK_OR_PICARD) -> QuestGraph:
    return new_graph([(question, EPSILON)])


def multi_hop_rollout(question: str = KIRK_OR_PICARD,
                      hops: Sequence[Tuple[str, str]] = KIRK_OR_PICARD_HOPS,
                      answer: str = KIRK_OR_PICARD_ANSWER, budget: int = 100) -> RunResult:
    """Discover, relay the answers, respond at the question node and stop"""
    capacity = max(len(hops), 3)
    result = run(multi_hop_graph(question), multi_hop_agent(question, hops, answer), capacity, budget)
    logger.info(f"Multi-hop rollout for {question!r}: {result.steps} steps, {len(result.graph)} nodes")
    return result


def multi_hop_script() -> List[AgentAction]:
    """The same rollout as a fixed action list over node ids 0, 1, 2"""
    return [
        Discover(KIRK_OR_PICARD_HOPS[0][0], attach=(0,)),
        Discover(KIRK_OR_PICARD_HOPS[1][0], attach=(0, 1)),
        RespondMove(EPSILON, 1),
        RespondMove(KIRK_OR_PICARD_HOPS[0][1], 2),
        RespondMove(KIRK_OR_PICARD_HOPS[1][1], 0),
        RespondMove(KIRK_OR_PICARD_ANSWER, 0),
        Stop(),
    ]


def grill_carrot_script() -> List[AgentAction]:
    """Two-level household rollout: four steps, the third one a two-step sub-quest"""
    return [
        DiscoverInput("Open door", "Door opened"),
        DiscoverInput("Enter kitchen", "Location: kitchen"),
        DiscoverSubquest("Find carrot"),
        DiscoverInput("Open fridge", "Fridge opened"),
        DiscoverInput("Take carrot", "Inv: carrot"),
        CompleteQuest("Inv: carrot"),
        DiscoverInput(GRILL_CARROT, "Succeeded"),
        CompleteQuest("Succeeded"),
        Stop(),
    ]


def grill_carrot_rollout(config: FqdpConfig = FqdpConfig(child_limit=4, capacity=5)) -> RunResult:
    actions = grill_carrot_script()
    return fqdp_run(ScriptedAgent(actions), config, len(actions), root_goal=GRILL_CARROT)
