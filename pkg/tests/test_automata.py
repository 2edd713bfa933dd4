"""
Direct automaton runs used as oracles
"""

import pytest

from quest_graph.automata import (
    CnfGrammar,
    DpdaStatus,
    Fsm,
    LmTable,
    TmStatus,
    TuringMachine,
    cyk_member,
    dpda_run,
    fsm_run,
    lm_run,
    tm_run,
    validate_dpda,
)
from quest_graph.automata.pushdown import POP, PUSH, Dpda
from quest_graph.constructions.fixtures import (
    GRAMMAR_FIXTURES,
    anbn_tm,
    balanced_ab_dpda,
    rrlrrlll_tm,
    unary_increment_tm,
)
from quest_graph.utils.errors import MachineDefinitionError

from .languages import DPDA_LANGUAGES, FSM_LANGUAGES, strings


def test_unary_increment():
    result = tm_run(unary_increment_tm(), ["1", "1", "1"], 100)
    assert result.status == TmStatus.ACCEPTING
    assert result.content() == {0: "1", 1: "1", 2: "1", 3: "1"}
    assert result.steps == 4


def test_anbn_tm_accepts_members_and_loops_otherwise():
    tm = anbn_tm()
    assert tm_run(tm, list("aabb"), 200).accepted
    assert tm_run(tm, [], 10).accepted
    assert tm_run(tm, list("aab"), 200).status == TmStatus.BUDGET


def test_rrlrrlll_walk():
    result = tm_run(rrlrrlll_tm(), ["t0"], 50)
    assert result.accepted
    assert result.moves == list("RRLRRLLL")
    assert result.content() == {0: "t1", 1: "t11", 2: "t10", 3: "t9"}
    assert result.head_trace == [0, 1, 2, 1, 2, 3, 2, 1, 0]


def test_one_way_tape_rejects_on_left_fall():
    tm = TuringMachine.from_rules([("s", "x", "s", "x", "L"), ("s", "_", "s", "_", "L")], start="s",
                                  accepting=["t"], input_alphabet=["x"])
    result = tm_run(tm, ["x"], 10)
    assert result.status == TmStatus.REJECTING
    assert result.steps == 1


def test_two_way_tape_grows_left():
    tm = TuringMachine.from_rules([("s", "x", "u", "y", "L"), ("s", "_", "s", "_", "R"),
                                   ("u", "_", "t", "z", "R"), ("u", "x", "u", "x", "R"),
                                   ("u", "y", "u", "y", "R"), ("u", "z", "u", "z", "R"),
                                   ("s", "y", "s", "y", "R"), ("s", "z", "s", "z", "R")],
                                  start="s", accepting=["t"], input_alphabet=["x"])
    assert tm_run(tm, ["x"], 10).status == TmStatus.REJECTING
    two_way = tm_run(tm, ["x"], 10, two_way=True)
    assert two_way.accepted
    assert two_way.content() == {-1: "z", 0: "y"}


def test_tm_rejects_partial_delta():
    with pytest.raises(MachineDefinitionError):
        TuringMachine.from_rules([("s", "a", "t", "a", "R")], start="s", accepting=["t"],
                                 input_alphabet=["a"])


def test_dpda_fixture_languages(dpda):
    assert validate_dpda(dpda) == []
    member = DPDA_LANGUAGES[dpda.name]
    for word in strings(dpda.input_alphabet, 6):
        assert dpda_run(dpda, word).accepted == member(word), word


def test_balanced_dpda_on_aababb():
    result = dpda_run(balanced_ab_dpda(), list("aababb"))
    assert result.status == DpdaStatus.ACCEPT
    assert result.trace[-1][0] == "s2"


def test_validate_dpda_reports_conflicts():
    dpda = Dpda.from_rules([("p", "a", "Z0", "p", PUSH, "A"), ("p", None, "Z0", "p", POP)],
                           start="p", accepting=["p"], input_alphabet=["a"])
    problems = validate_dpda(dpda)
    assert len(problems) == 1
    assert "ε" in problems[0]


def test_fsm_fixture_languages(fsm):
    member = FSM_LANGUAGES[fsm.name]
    for word in strings(fsm.input_alphabet, 6):
        assert fsm_run(fsm, word).accepted == member(word), word


def test_fsm_unknown_symbol_rejects(fsm):
    result = fsm_run(fsm, ["?"])
    assert not result.accepted
    assert "not in the input alphabet" in result.diagnostic


def test_fsm_requires_total_delta():
    with pytest.raises(MachineDefinitionError):
        Fsm(frozenset({"s"}), frozenset({"a", "b"}), {("s", "a"): "s"}, "s", frozenset())


def test_lm_run_schedule():
    delta = {(x, y): y if y != "go" else "stop" for x in ("go", "stop") for y in ("go", "stop")}
    lm = LmTable(frozenset({"go", "stop"}), delta, 2)
    outcome = lm_run(lm, ("stop", "stop"), [(1, "go")], steps=3)
    assert outcome.tokens == ["stop", "stop", "stop", "go", "stop", "stop"]
    assert outcome.generated == ["stop", "stop", "stop"]
    assert outcome.last == "stop"
    with pytest.raises(ValueError):
        lm_run(lm, ("stop",))


def test_lm_requires_total_delta():
    with pytest.raises(MachineDefinitionError):
        LmTable(frozenset({"a", "b"}), {("a",): "a"}, 1)


@pytest.mark.parametrize("word, member, count", [
    ("aabb", True, 1),
    ("ab", True, 1),
    ("abab", False, 0),
    ("", False, 0),
])
def test_cyk_anbn(anbn_cnf, word, member, count):
    assert cyk_member(anbn_cnf, list(word)) == (member, count)


def test_cyk_counts_ambiguous_parses():
    grammar = GRAMMAR_FIXTURES["balanced"]()
    assert cyk_member(grammar, list("abab")) == (True, 1)
    assert cyk_member(grammar, list("ababab")) == (True, 2)
    assert cyk_member(grammar, list("ba")) == (False, 0)


def test_cnf_rejects_non_normal_rules():
    with pytest.raises(MachineDefinitionError):
        CnfGrammar.from_rules(["S -> a b"])
    with pytest.raises(MachineDefinitionError):
        CnfGrammar.from_rules(["S -> A S", "A -> a"], allows_empty=True)


def test_cnf_rule_lines_round_trip(anbn_cnf):
    assert CnfGrammar.from_rules(anbn_cnf.rule_lines(), start=anbn_cnf.start) == anbn_cnf
