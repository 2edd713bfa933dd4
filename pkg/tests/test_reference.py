"""
Reference graph and RQDP retrieval tests
"""

import pytest
from hypothesis import given
from hypothesis import strategies as st

from quest_graph.constructions.fibonacci import fibonacci_rqdp, fibonacci_tau
from quest_graph.core import EPSILON, ScriptedAgent, Stop
from quest_graph.qdp import (
    RULE_VOCABULARY,
    CompleteQuest,
    DiscoverInput,
    DiscoverSubquest,
    FqdpConfig,
    Pursue,
    QuestTreeEngine,
    Retrieve,
    TreeNodeSpec,
    Variant,
    prebuild,
    rqdp_run,
)
from quest_graph.reference import ReferenceGraph, assign_reference, retrieve
from quest_graph.utils.errors import NonMonotonicTimeError


def test_retrieve_latest_write():
    refgraph = ReferenceGraph()
    refgraph.record("b", 1, time=1)
    refgraph.record("a", 2, time=2)
    refgraph.record("b", 3, time=5)
    assert retrieve(refgraph, "b") == 3
    assert refgraph.retrieve("a") == 2
    assert refgraph.items() == [("a", 2), ("b", 3)]
    assert refgraph.active == 2
    assert refgraph.entry("b").timestamp == 5


def test_missing_reference_is_epsilon():
    refgraph = ReferenceGraph()
    refgraph.register("x")
    assert refgraph.retrieve("x") == EPSILON
    assert "x" not in refgraph
    assert refgraph.active == 0


@pytest.mark.parametrize("time", [3, 2])
def test_writes_must_move_forward(time):
    refgraph = ReferenceGraph()
    refgraph.record("a", "first", time=3)
    with pytest.raises(NonMonotonicTimeError):
        refgraph.record("a", "again", time=time)


def test_assign_reference_registers():
    refgraph = ReferenceGraph()
    assert assign_reference(5, ("n-1",), fibonacci_tau, refgraph) == 4
    assert 4 in refgraph.known


@given(st.lists(st.tuples(st.integers(0, 4), st.integers(0, 9)), max_size=25), st.integers(0, 30))
def test_as_of_matches_replayed_history(writes, cutoff):
    refgraph = ReferenceGraph()
    for time, (reference, response) in enumerate(writes, start=1):
        refgraph.record(reference, response, time)

    expected = {}
    for time, (reference, response) in enumerate(writes, start=1):
        if time <= cutoff:
            expected[reference] = response
    assert refgraph.as_of(cutoff) == expected
    assert refgraph.as_of(len(writes)) == dict(refgraph.items())
    assert [(w.reference, w.response) for w in refgraph.history()] == writes


def _path_tau(reference, goal):
    return reference + (goal,)


def test_rqdp_records_completions_and_retrieves_them():
    actions = [
        DiscoverSubquest("left"),
        CompleteQuest(7),
        Retrieve("left"),
        Retrieve("right"),
        CompleteQuest("seen"),
        Stop(),
    ]
    result, refgraph = rqdp_run(ScriptedAgent(actions), _path_tau, FqdpConfig(), len(actions), root_goal="root",
                                root_ref=())
    assert result.stopped
    graph = result.graph
    assert [graph.nodes[i].response for i in (2, 3)] == [7, EPSILON]
    assert refgraph.items() == [((), "seen"), (("left",), 7)]
    assert refgraph.head == ()
    assert result.counts["retrieve"] == 2


def test_rqdp_input_responses_are_recorded():
    actions = [DiscoverInput("in", "sym"), Retrieve("in"), CompleteQuest("ok"), Stop()]
    result, refgraph = rqdp_run(ScriptedAgent(actions), _path_tau, FqdpConfig(), len(actions), root_ref=())
    assert result.graph.nodes[2].response == "sym"
    assert refgraph.retrieve(("in",)) == "sym"


def _pursue_then_retrieve():
    graph = prebuild([TreeNodeSpec("root"), TreeNodeSpec("x")], [(0, 1)])
    actions = [Pursue(1), CompleteQuest("X"), Retrieve("x"), CompleteQuest("done"), Stop()]
    return graph, ScriptedAgent(actions), len(actions)


def test_nondeterministic_rqdp_pursues_and_retrieves():
    graph, agent, budget = _pursue_then_retrieve()
    result, refgraph = rqdp_run(agent, _path_tau, FqdpConfig(), budget, graph=graph, root_ref=(),
                                nondeterministic=True)
    assert result.stopped
    assert result.graph.nodes[2].response == "X"
    assert refgraph.retrieve(("x",)) == "X"


def test_deterministic_rqdp_has_no_pursue():
    graph, agent, budget = _pursue_then_retrieve()
    result, _ = rqdp_run(agent, _path_tau, FqdpConfig(), budget, graph=graph, root_ref=())
    assert result.violation == RULE_VOCABULARY


def test_rqdp_needs_tau():
    with pytest.raises(ValueError):
        QuestTreeEngine(Variant.RQDP, FqdpConfig())


@pytest.mark.parametrize("n, value", [(1, 1), (2, 1), (3, 2), (4, 3), (5, 5), (10, 55)])
def test_fibonacci(n, value):
    run = fibonacci_rqdp(n)
    assert run.result.stopped
    assert run.value == value
    assert run.result.counts["retrieve"] == max(0, n - 2)


def test_fibonacci_memo_table():
    run = fibonacci_rqdp(5)
    assert run.values == {5: 5, 4: 3, 3: 2, 2: 1}
    assert dict(run.refgraph.items()) == {2: 1, 3: 2, 4: 3, 5: 5}


def test_fibonacci_rejects_index_zero():
    with pytest.raises(ValueError):
        fibonacci_rqdp(0)
