"""
Quest graph kernel tests
"""

import numpy as np
import pytest
from hypothesis import settings
from hypothesis import strategies as st
from hypothesis.stateful import RuleBasedStateMachine, initialize, invariant, rule

from quest_graph.constructions.scripted import (
    KIRK_OR_PICARD,
    KIRK_OR_PICARD_ANSWER,
    multi_hop_graph,
    multi_hop_rollout,
    multi_hop_script,
)
from quest_graph.core import (
    EPSILON,
    PARENT,
    Discover,
    HaltReason,
    RespondMove,
    ScriptedAgent,
    Stop,
    TraceEvent,
    apply,
    is_complete,
    new_graph,
    observe,
    replay,
    run,
)
from quest_graph.utils.errors import GraphBuildError, IllegalActionError


def test_new_graph_rejects_bad_seeds():
    with pytest.raises(GraphBuildError):
        new_graph([])
    with pytest.raises(GraphBuildError):
        new_graph([("a", EPSILON)], [(0, 1)])
    with pytest.raises(GraphBuildError):
        new_graph([("a", EPSILON)], focus_index=3)


def test_is_complete_marks():
    assert not is_complete(EPSILON)
    assert not is_complete(PARENT)
    assert is_complete("done")
    assert is_complete(0)


def test_observe_truncates_to_capacity():
    graph = new_graph([("hub", EPSILON)] + [(f"leaf{i}", EPSILON) for i in range(4)],
                      [(0, i) for i in range(1, 5)])
    context = observe(graph, 2)
    assert [n.goal for n in context.neighbors] == ["leaf0", "leaf1"]
    assert graph.truncations == 1
    with pytest.raises(ValueError):
        observe(graph, 0)


def test_apply_rejects_pointer_outside_context():
    graph = new_graph([("a", EPSILON), ("b", EPSILON), ("c", EPSILON)], [(0, 1), (1, 2)])
    context = observe(graph, 2)
    with pytest.raises(IllegalActionError) as info:
        apply(graph, RespondMove("x", 2), context)
    assert info.value.rule == "pointer"


def test_run_converts_illegal_action():
    result = run(new_graph([("a", EPSILON)]), lambda context: Discover("b"), 2, 10)
    assert result.reason == HaltReason.ILLEGAL
    assert result.violation == "discover-unattached"
    assert len(result.graph) == 1


def test_run_budget_exhaustion():
    result = run(new_graph([("a", EPSILON)]), lambda context: RespondMove("a", context.focus.id), 1, 5)
    assert result.exhausted
    assert result.steps == 5


def test_multi_hop_rollout():
    result = multi_hop_rollout()
    assert result.stopped
    assert result.steps == 7
    assert len(result.graph) == 3
    assert result.graph.nodes[0].response == KIRK_OR_PICARD_ANSWER


def test_multi_hop_script_matches_agent():
    scripted = run(multi_hop_graph(), ScriptedAgent(multi_hop_script()), 3, 100)
    agent = multi_hop_rollout()
    assert scripted.graph.snapshot() == agent.graph.snapshot()
    assert [e.action for e in scripted.trace] == [e.action for e in agent.trace]


def test_trace_determinism():
    first = multi_hop_rollout()
    second = multi_hop_rollout()
    assert [(e.digest, e.action) for e in first.trace] == [(e.digest, e.action) for e in second.trace]


def test_replay_reproduces_final_graph():
    result = multi_hop_rollout()
    replayed = replay(multi_hop_graph(KIRK_OR_PICARD), result.trace, 3)
    assert replayed.snapshot() == result.graph.snapshot()


class QuestGraphMachine(RuleBasedStateMachine):
    """Random legal actions against the kernel"""

    CAPACITY = 3

    @initialize()
    def seed(self):
        self.initial = new_graph([("root", EPSILON)])
        self.graph = self.initial.copy()
        self.trace = []
        self.goals = {0: "root"}

    def _step(self, action, context):
        outcome = apply(self.graph, action, context)
        self.trace.append(TraceEvent(len(self.trace), context.focus.id, context.digest(), action, outcome.created))
        return outcome

    @rule(goal=st.integers(0, 5), picks=st.lists(st.integers(0, 10), max_size=3))
    def discover(self, goal, picks):
        context = observe(self.graph, self.CAPACITY)
        members = context.members
        attach = tuple(dict.fromkeys(members[p % len(members)] for p in picks)) or (context.focus.id,)
        outcome = self._step(Discover(goal, attach=attach), context)
        self.goals[outcome.created] = goal

    @rule(response=st.sampled_from([EPSILON, PARENT, "a", "b", 7]), pick=st.integers(0, 10))
    def respond_move(self, response, pick):
        context = observe(self.graph, self.CAPACITY)
        target = context.members[pick % len(context.members)]
        self._step(RespondMove(response, target), context)

    @invariant()
    def goals_never_change(self):
        assert {i: n.goal for i, n in self.graph.nodes.items()} == self.goals

    @invariant()
    def focus_is_a_node(self):
        assert self.graph.focus in self.graph.nodes

    @invariant()
    def replay_matches(self):
        assert replay(self.initial, self.trace, self.CAPACITY).snapshot() == self.graph.snapshot()


QuestGraphMachine.TestCase.settings = settings(stateful_step_count=30, deadline=None)
TestQuestGraphMachine = QuestGraphMachine.TestCase

RESPONSES = [EPSILON, PARENT, "a", "b", 7]


def _random_rollout(rng, length, capacity=3):
    initial = new_graph([("root", EPSILON)])
    graph = initial.copy()
    trace = []
    goals = {0: "root"}
    for step in range(length):
        context = observe(graph, capacity)
        members = context.members
        if rng.random() < 0.5:
            picks = rng.integers(0, len(members), size=int(rng.integers(0, 4)))
            attach = tuple(dict.fromkeys(members[int(p)] for p in picks)) or (context.focus.id,)
            action = Discover(int(rng.integers(0, 6)), attach=attach)
        else:
            action = RespondMove(RESPONSES[int(rng.integers(len(RESPONSES)))],
                                 members[int(rng.integers(len(members)))])
        outcome = apply(graph, action, context)
        trace.append(TraceEvent(step, context.focus.id, context.digest(), action, outcome.created))
        if outcome.created is not None:
            goals[outcome.created] = action.goal
    return initial, graph, trace, goals


@pytest.mark.parametrize("seed", range(10))
def test_random_action_sequences_replay(seed):
    rng = np.random.default_rng(seed)
    for _ in range(1000):
        initial, graph, trace, goals = _random_rollout(rng, int(rng.integers(1, 16)))
        assert {i: n.goal for i, n in graph.nodes.items()} == goals
        assert graph.focus in graph.nodes
        assert replay(initial, trace, 3).snapshot() == graph.snapshot()


def test_stop_halts_immediately():
    result = run(new_graph([("a", EPSILON)]), lambda context: Stop(), 1, 10)
    assert result.stopped
    assert result.steps == 1
    assert result.counts["stop"] == 1
