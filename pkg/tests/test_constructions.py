"""
Machine simulations checked against direct runs
"""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quest_graph.automata import KEEP, POP, PUSH, CnfGrammar, Dpda, Fsm, TuringMachine, cyk_member, dpda_run
from quest_graph.constructions import (
    ACCEPT,
    BUDGET,
    DPDA_CONFIG,
    END_SYMBOL,
    REJECT,
    build_parse_graph,
    catalan,
    dpda_from_fqdp,
    fqdp_accepts,
    fqdp_dpda_agent,
    fsm_from_lm,
    lm_from_fsm,
    simulate_cfl_on_nfqdp,
    simulate_dpda_on_fqdp,
    simulate_fsm_on_lm,
    simulate_lm_on_fsm,
    simulate_tm_on_questgraph,
    simulate_tm_on_rqdp,
)
from quest_graph.constructions.dpda_fqdp import QUEST
from quest_graph.constructions.fixtures import (
    DPDA_FIXTURES,
    GRAMMAR_FIXTURES,
    TM_FIXTURES,
    TM_SAMPLES,
    anbn_tm,
    balanced_ab_dpda,
    parity_fsm,
    rrlrrlll_tm,
)
from quest_graph.utils.errors import BudgetExceededError, MachineDefinitionError

from .languages import strings


@pytest.mark.parametrize("name, word", TM_SAMPLES)
def test_tm_on_questgraph_samples(name, word):
    result = simulate_tm_on_questgraph(TM_FIXTURES[name](), word, budget=200)
    assert result.status == ACCEPT
    assert result.agree, result.verdict_line()
    assert result.details["tm_steps"] == result.details["oracle_steps"]


def test_tm_on_questgraph_increment_tape():
    result = simulate_tm_on_questgraph(TM_FIXTURES["unary-increment"](), ["1", "1"], budget=50)
    assert result.output == {0: "1", 1: "1", 2: "1"}
    assert result.verdict_line() == "accept / oracle: accept / AGREE"


def test_tm_on_questgraph_looping_machine_runs_out_of_budget():
    result = simulate_tm_on_questgraph(anbn_tm(), list("aab"), budget=40)
    assert result.status == BUDGET
    assert result.oracle_status == BUDGET
    assert result.agree


def test_tm_on_questgraph_grows_left():
    rows = [("s", "a", "t", "b", "L"), ("s", "b", "s", "b", "R"), ("s", "_", "s", "_", "R"),
            ("t", "_", "h", "a", "R"), ("t", "a", "t", "a", "L"), ("t", "b", "t", "b", "L")]
    tm = TuringMachine.from_rules(rows, start="s", accepting=["h"], input_alphabet=["a", "b"])
    result = simulate_tm_on_questgraph(tm, ["a"], budget=20)
    assert result.agree
    assert result.output == {-1: "a", 0: "b"}


@st.composite
def turing_machines(draw):
    """Total machines with 1 to 5 working states and at most 3 tape symbols, plus an input"""
    states = [f"s{i}" for i in range(draw(st.integers(1, 5)))]
    alphabet = ["a", "b"][:draw(st.integers(1, 2))]
    tape = alphabet + ["_"]
    rows = []
    for state in states:
        for symbol in tape:
            rows.append((state, symbol, draw(st.sampled_from(states + ["acc"])),
                         draw(st.sampled_from(tape)), draw(st.sampled_from(["L", "R"]))))
    tm = TuringMachine.from_rules(rows, start="s0", accepting=["acc"], input_alphabet=alphabet)
    return tm, draw(st.lists(st.sampled_from(alphabet), max_size=4))


@settings(max_examples=100, deadline=None)
@given(turing_machines())
def test_tm_on_questgraph_random_machines(machine):
    tm, word = machine
    result = simulate_tm_on_questgraph(tm, word, budget=500)
    assert result.agree, (tm.delta, word, result.verdict_line())


def test_tm_on_rqdp_head_walk():
    result = simulate_tm_on_rqdp(rrlrrlll_tm(), ["t0"], budget=50)
    assert result.agree
    assert result.details["head_trace_ok"]
    assert result.details["references"] == 4
    assert result.output == {0: "t1", 1: "t11", 2: "t10", 3: "t9"}


@pytest.mark.parametrize("name, word", TM_SAMPLES)
def test_tm_on_rqdp_samples(name, word):
    result = simulate_tm_on_rqdp(TM_FIXTURES[name](), word, budget=200)
    assert result.agree, result.verdict_line()


def test_tm_on_rqdp_looping_machine():
    result = simulate_tm_on_rqdp(anbn_tm(), list("aab"), budget=30)
    assert result.status == BUDGET
    assert result.oracle_status == BUDGET


@pytest.mark.parametrize("name", sorted(DPDA_FIXTURES))
def test_dpda_on_fqdp_short_strings(name):
    dpda = DPDA_FIXTURES[name]()
    for word in strings(dpda.input_alphabet, 6):
        result = simulate_dpda_on_fqdp(dpda, word)
        assert result.agree, (word, result.verdict_line())
        assert result.details["input_read"] == len(word) or result.status == REJECT


@pytest.mark.slow
@pytest.mark.parametrize("name", sorted(DPDA_FIXTURES))
def test_dpda_on_fqdp_long_strings(name):
    dpda = DPDA_FIXTURES[name]()
    for word in strings(dpda.input_alphabet, 10):
        if len(word) > 6:
            assert simulate_dpda_on_fqdp(dpda, word).agree, word


def test_dpda_on_fqdp_reading_order():
    result = simulate_dpda_on_fqdp(balanced_ab_dpda(), list("aababb"))
    assert result.verdict_line() == "accept / oracle: accept / AGREE"
    assert result.run.counts["stop"] == 1


def test_dpda_on_fqdp_accepts_before_an_epsilon_move():
    dpda = Dpda.from_rules([("p", None, "Z0", "q", KEEP)], start="p", accepting=["p"], input_alphabet=["a"])
    empty = simulate_dpda_on_fqdp(dpda, [])
    assert empty.verdict_line() == "accept / oracle: accept / AGREE"
    assert simulate_dpda_on_fqdp(dpda, ["a"]).verdict_line() == "reject / oracle: reject / AGREE"


def test_dpda_on_fqdp_reads_ahead_from_an_accepting_state():
    dpda = DPDA_FIXTURES["ab-plus"]()
    for word, status in [("ab", ACCEPT), ("abab", ACCEPT), ("aba", REJECT), ("", REJECT)]:
        result = simulate_dpda_on_fqdp(dpda, list(word))
        assert result.status == status, word
        assert result.agree, word


def test_dpda_agent_needs_determinism():
    clash = Dpda.from_rules([("p", "a", "Z0", "p", PUSH, "A"), ("p", None, "Z0", "p", POP)],
                            start="p", accepting=["p"], input_alphabet=["a"])
    with pytest.raises(MachineDefinitionError):
        fqdp_dpda_agent(clash)


def test_fqdp_accepts_matches_the_machine(dpda):
    agent = fqdp_dpda_agent(dpda)
    root_goal = (QUEST, dpda.initial_stack, dpda.start)
    for word in strings(dpda.input_alphabet, 4):
        assert fqdp_accepts(agent, DPDA_CONFIG, root_goal, word) == dpda_run(dpda, word).accepted, word


@pytest.mark.parametrize("name", ["balanced-ab", "anbn", "a-n-b-2n", "ab-plus"])
def test_derived_dpda_matches_the_machine(name):
    dpda = DPDA_FIXTURES[name]()
    derivation = dpda_from_fqdp(fqdp_dpda_agent(dpda), DPDA_CONFIG, sorted(dpda.input_alphabet),
                                root_goal=(QUEST, dpda.initial_stack, dpda.start))
    assert derivation.complete, derivation.diagnostics
    for word in strings(dpda.input_alphabet, 5):
        derived = dpda_run(derivation.dpda, word + [END_SYMBOL]).accepted
        assert derived == dpda_run(dpda, word).accepted, word


def test_derived_dpda_reports_budget_overflow():
    dpda = balanced_ab_dpda()
    derivation = dpda_from_fqdp(fqdp_dpda_agent(dpda), DPDA_CONFIG, ["a", "b"],
                                root_goal=(QUEST, dpda.initial_stack, dpda.start), max_states=2)
    assert not derivation.complete
    assert "exploration budget" in derivation.diagnostics[0]


@pytest.mark.parametrize("n, value", [(0, 1), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42), (7, 429)])
def test_catalan(n, value):
    assert catalan(n) == value


def test_parse_graph_holds_every_bracketing(anbn_cnf):
    parse = build_parse_graph(anbn_cnf, list("aabb"))
    assert len(parse.quest_ids) == catalan(3)
    assert parse.quest_ids[0] == 0
    assert all(span[1] - span[0] >= 1 for span in parse.spans.values())
    assert len(parse.graph.edges) == len(parse.graph) - 1


def test_cfl_accepts_aabb(anbn_cnf):
    result = simulate_cfl_on_nfqdp(anbn_cnf, list("aabb"))
    assert result.verdict_line() == "accept / oracle: accept / AGREE"
    assert result.details["derivations"] == 1
    assert result.details["trees"] == 5


def test_cfl_empty_input(anbn_cnf):
    result = simulate_cfl_on_nfqdp(anbn_cnf, [])
    assert result.status == REJECT
    assert result.agree


@pytest.mark.parametrize("name", sorted(GRAMMAR_FIXTURES))
def test_cfl_short_strings(name):
    grammar = GRAMMAR_FIXTURES[name]()
    for word in strings(["a", "b"], 6):
        result = simulate_cfl_on_nfqdp(grammar, word, record_trace=False)
        assert result.agree, (word, result.verdict_line())


NONTERMINALS = ["S", "X", "Y"]


@st.composite
def cnf_grammars(draw):
    """Grammars over a and b with up to three nonterminals and random A -> B C and A -> a rules"""
    names = NONTERMINALS[:draw(st.integers(1, 3))]
    unary = draw(st.sets(st.tuples(st.sampled_from(names), st.sampled_from(["a", "b"])), min_size=1))
    binary = draw(st.sets(st.tuples(st.sampled_from(names), st.sampled_from(names), st.sampled_from(names)),
                          max_size=5))
    rules = {(lhs, (terminal,)) for lhs, terminal in unary} | {(lhs, (b, c)) for lhs, b, c in binary}
    return CnfGrammar(frozenset(names), frozenset({"a", "b"}), frozenset(rules), "S", name="random")


@settings(max_examples=20, deadline=None)
@given(cnf_grammars())
def test_cfl_random_grammars_match_cyk(grammar):
    for word in strings(["a", "b"], 6):
        result = simulate_cfl_on_nfqdp(grammar, word, record_trace=False)
        assert (result.status == ACCEPT) == cyk_member(grammar, word)[0], (grammar.rule_lines(), word)


@pytest.mark.slow
def test_cfl_length_eight(anbn_cnf):
    for word in strings(["a", "b"], 8):
        if len(word) > 6:
            assert simulate_cfl_on_nfqdp(anbn_cnf, word, record_trace=False).agree, word


def test_fsm_through_its_language_model(fsm):
    for word in strings(fsm.input_alphabet, 5):
        result = simulate_fsm_on_lm(fsm, word)
        assert result.agree, (word, result.verdict_line())
        assert result.details["derived_accepts"] == result.oracle_accepted


def test_fsm_on_lm_stray_symbol():
    result = simulate_fsm_on_lm(parity_fsm(), ["0", "2"])
    assert result.status == REJECT
    assert result.agree


def test_language_model_generates_successor_states():
    lm = lm_from_fsm(parity_fsm())
    assert lm.context_length == 2
    assert lm.next_token(("even", "1")) == "odd"
    assert lm.next_token(("odd", "odd")) == "odd"


def test_lm_from_fsm_rejects_shared_tokens():
    fsm = Fsm(frozenset({"a", "q"}), frozenset({"a"}), {("a", "a"): "q", ("q", "a"): "a"}, "q",
              frozenset({"q"}))
    with pytest.raises(MachineDefinitionError):
        lm_from_fsm(fsm)


def test_lm_to_fsm_round_trip():
    lm = lm_from_fsm(parity_fsm())
    for word in strings(["0", "1"], 6):
        result = simulate_lm_on_fsm(lm, word, ["0", "1"], ["even", "even"], ["even"])
        assert result.agree
        assert result.accepted == (word.count("1") % 2 == 0)


def test_lm_on_fsm_stray_symbol():
    lm = lm_from_fsm(parity_fsm())
    result = simulate_lm_on_fsm(lm, ["x"], ["0", "1"], ["even", "even"], ["even"])
    assert result.verdict_line() == "reject / oracle: reject / AGREE"


def test_fsm_from_lm_state_budget():
    lm = lm_from_fsm(parity_fsm())
    with pytest.raises(BudgetExceededError):
        fsm_from_lm(lm, ["0", "1"], ["even", "even"], ["even"], max_states=1)
