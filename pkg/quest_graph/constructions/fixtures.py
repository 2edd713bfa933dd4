"""
Fixture Machines
Hand-authored Turing machines, pushdown automata, FSMs and grammars
"""

from typing import Callable, Dict, List, Tuple

from ..automata.cyk import CnfGrammar
from ..automata.finite import Fsm
from ..automata.pushdown import EITHER, EMPTY_STACK, FINAL_STATE, KEEP, POP, PUSH, Dpda
from ..automata.turing import LEFT, RIGHT, TuringMachine

BLANK = "_"


def unary_increment_tm() -> TuringMachine:
    """Appends one 1 to a unary number"""
    return TuringMachine.from_rules(
        [
            ("inc", "1", "inc", "1", RIGHT),
            ("inc", BLANK, "done", "1", RIGHT),
        ],
        start="inc", accepting=["done"], input_alphabet=["1"], name="unary-increment",
    )


def anbn_tm() -> TuringMachine:
    """Marks matching a/b pairs; a non-member runs right forever"""
    rows = [
        ("q0", "a", "q1", "X", RIGHT),
        ("q0", "Y", "q3", "Y", RIGHT),
        ("q0", BLANK, "acc", BLANK, RIGHT),
        ("q0", "b", "rej", "b", RIGHT),
        ("q0", "X", "rej", "X", RIGHT),
        ("q1", "a", "q1", "a", RIGHT),
        ("q1", "Y", "q1", "Y", RIGHT),
        ("q1", "b", "q2", "Y", LEFT),
        ("q1", BLANK, "rej", BLANK, RIGHT),
        ("q1", "X", "rej", "X", RIGHT),
        ("q2", "a", "q2", "a", LEFT),
        ("q2", "Y", "q2", "Y", LEFT),
        ("q2", "X", "q0", "X", RIGHT),
        ("q2", "b", "rej", "b", RIGHT),
        ("q2", BLANK, "rej", BLANK, RIGHT),
        ("q3", "Y", "q3", "Y", RIGHT),
        ("q3", BLANK, "acc", BLANK, RIGHT),
        ("q3", "a", "rej", "a", RIGHT),
        ("q3", "b", "rej", "b", RIGHT),
        ("q3", "X", "rej", "X", RIGHT),
    ]
    rows += [("rej", s, "rej", s, RIGHT) for s in ("a", "b", "X", "Y", BLANK)]
    return TuringMachine.from_rules(rows, start="q0", accepting=["acc"], input_alphabet=["a", "b"], name="anbn-tm")


RRLRRLLL_STEPS = [
    ("s0", "t0", "s1", "t1", RIGHT),
    ("s1", BLANK, "s2", "t3", RIGHT),
    ("s2", BLANK, "s3", "t5", LEFT),
    ("s3", "t3", "s4", "t6", RIGHT),
    ("s4", "t5", "s5", "t7", RIGHT),
    ("s5", BLANK, "s6", "t9", LEFT),
    ("s6", "t7", "s7", "t10", LEFT),
    ("s7", "t6", "s8", "t11", LEFT),
]


def rrlrrlll_tm() -> TuringMachine:
    """Fresh state and symbol on every step of the head walk R R L R R L L L.

    Started on the single input symbol t0, it halts in s8 with the tape
    t1 t11 t10 t9. Unused (state, symbol) pairs keep moving right.
    """
    symbols = [BLANK] + [f"t{i}" for i in range(12)]
    used = {(state, read) for state, read, _, _, _ in RRLRRLLL_STEPS}
    rows = list(RRLRRLLL_STEPS)
    for i in range(8):
        state = f"s{i}"
        rows += [(state, s, state, s, RIGHT) for s in symbols if (state, s) not in used]
    return TuringMachine.from_rules(rows, start="s0", accepting=["s8"], input_alphabet=["t0"], name="rrlrrlll")


def balanced_ab_dpda() -> Dpda:
    """Balanced strings with a as the opening and b as the closing bracket"""
    return Dpda.from_rules(
        [
            ("s2", "a", "Z0", "s0", PUSH, "a"),
            ("s0", "a", "a", "s0", PUSH, "a"),
            ("s0", "b", "a", "s1", POP),
            ("s1", "a", "a", "s0", PUSH, "a"),
            ("s1", "b", "a", "s1", POP),
            ("s1", None, "Z0", "s2", KEEP),
        ],
        start="s2", accepting=["s2"], input_alphabet=["a", "b"], acceptance=FINAL_STATE, name="balanced-ab",
    )


def anbn_dpda() -> Dpda:
    """a^n b^n for n >= 0; the bottom symbol is popped once the b's match"""
    return Dpda.from_rules(
        [
            ("p", "a", "Z0", "q", PUSH, "A"),
            ("q", "a", "A", "q", PUSH, "A"),
            ("q", "b", "A", "r", POP),
            ("r", "b", "A", "r", POP),
            ("r", None, "Z0", "f", POP),
        ],
        start="p", accepting=["p", "f"], input_alphabet=["a", "b"], acceptance=EITHER, name="anbn",
    )


def anbn_empty_dpda() -> Dpda:
    """a^n b^n for n >= 1, accepting by empty stack only"""
    return Dpda.from_rules(
        [
            ("p", "a", "Z0", "p", PUSH, "A"),
            ("p", "a", "A", "p", PUSH, "A"),
            ("p", "b", "A", "r", POP),
            ("r", "b", "A", "r", POP),
            ("r", None, "Z0", "r", POP),
        ],
        start="p", accepting=[], input_alphabet=["a", "b"], acceptance=EMPTY_STACK, name="anbn-empty",
    )


def equal_ab_dpda() -> Dpda:
    """Same number of a's and b's, in any order"""
    return Dpda.from_rules(
        [
            ("e", "a", "Z0", "m", PUSH, "A"),
            ("e", "b", "Z0", "m", PUSH, "B"),
            ("m", "a", "A", "m", PUSH, "A"),
            ("m", "b", "B", "m", PUSH, "B"),
            ("m", "a", "B", "k", POP),
            ("m", "b", "A", "k", POP),
            ("k", None, "Z0", "e", KEEP),
            ("k", None, "A", "m", KEEP),
            ("k", None, "B", "m", KEEP),
        ],
        start="e", accepting=["e"], input_alphabet=["a", "b"], acceptance=FINAL_STATE, name="equal-ab",
    )


def a_n_b_2n_dpda() -> Dpda:
    """a^n b^2n for n >= 0: every second b pops"""
    return Dpda.from_rules(
        [
            ("p", "a", "Z0", "q", PUSH, "A"),
            ("q", "a", "A", "q", PUSH, "A"),
            ("q", "b", "A", "h", KEEP),
            ("h", "b", "A", "r", POP),
            ("r", "b", "A", "h", KEEP),
            ("r", None, "Z0", "f", KEEP),
        ],
        start="p", accepting=["p", "f"], input_alphabet=["a", "b"], acceptance=FINAL_STATE, name="a-n-b-2n",
    )


def ab_plus_dpda() -> Dpda:
    """(ab)+; the accepting state u falls back to s on an ε-move"""
    return Dpda.from_rules(
        [
            ("s", "a", "Z0", "t", KEEP),
            ("t", "b", "Z0", "u", KEEP),
            ("u", None, "Z0", "s", KEEP),
        ],
        start="s", accepting=["u"], input_alphabet=["a", "b"], acceptance=FINAL_STATE, name="ab-plus",
    )


def parity_fsm() -> Fsm:
    """Even number of 1s"""
    delta = {
        ("even", "0"): "even", ("even", "1"): "odd",
        ("odd", "0"): "odd", ("odd", "1"): "even",
    }
    return Fsm(frozenset({"even", "odd"}), frozenset({"0", "1"}), delta, "even", frozenset({"even"}), name="parity")


def ends_with_ab_fsm() -> Fsm:
    delta = {
        ("n0", "a"): "n1", ("n0", "b"): "n0",
        ("n1", "a"): "n1", ("n1", "b"): "n2",
        ("n2", "a"): "n1", ("n2", "b"): "n0",
    }
    return Fsm(frozenset({"n0", "n1", "n2"}), frozenset({"a", "b"}), delta, "n0", frozenset({"n2"}),
               name="ends-with-ab")


def a_mod_3_fsm() -> Fsm:
    """Number of a's divisible by three"""
    delta = {}
    for r in range(3):
        delta[(f"r{r}", "a")] = f"r{(r + 1) % 3}"
        delta[(f"r{r}", "b")] = f"r{r}"
    return Fsm(frozenset({"r0", "r1", "r2"}), frozenset({"a", "b"}), delta, "r0", frozenset({"r0"}), name="a-mod-3")


def no_bb_fsm() -> Fsm:
    delta = {
        ("ok", "a"): "ok", ("ok", "b"): "b1",
        ("b1", "a"): "ok", ("b1", "b"): "dead",
        ("dead", "a"): "dead", ("dead", "b"): "dead",
    }
    return Fsm(frozenset({"ok", "b1", "dead"}), frozenset({"a", "b"}), delta, "ok", frozenset({"ok", "b1"}),
               name="no-bb")


def single_state_fsm() -> Fsm:
    return Fsm(frozenset({"all"}), frozenset({"x", "y"}), {("all", "x"): "all", ("all", "y"): "all"},
               "all", frozenset({"all"}), name="single-state")


def anbn_grammar() -> CnfGrammar:
    """Grammar whose parse of "aabb" runs through an extra P nonterminal"""
    return CnfGrammar.from_rules(
        ["S -> C B | A B", "P -> C B | A B", "C -> A P", "A -> a", "B -> b"],
        start="S", name="anbn",
    )


def balanced_grammar() -> CnfGrammar:
    """Non-empty balanced a/b strings"""
    return CnfGrammar.from_rules(
        ["S -> A B | A T | S S", "T -> S B", "A -> a", "B -> b"],
        start="S", name="balanced",
    )


TM_FIXTURES: Dict[str, Callable[[], TuringMachine]] = {
    "unary-increment": unary_increment_tm,
    "anbn-tm": anbn_tm,
    "rrlrrlll": rrlrrlll_tm,
}

DPDA_FIXTURES: Dict[str, Callable[[], Dpda]] = {
    "balanced-ab": balanced_ab_dpda,
    "anbn": anbn_dpda,
    "anbn-empty": anbn_empty_dpda,
    "equal-ab": equal_ab_dpda,
    "a-n-b-2n": a_n_b_2n_dpda,
    "ab-plus": ab_plus_dpda,
}

FSM_FIXTURES: Dict[str, Callable[[], Fsm]] = {
    "parity": parity_fsm,
    "ends-with-ab": ends_with_ab_fsm,
    "a-mod-3": a_mod_3_fsm,
    "no-bb": no_bb_fsm,
    "single-state": single_state_fsm,
}

GRAMMAR_FIXTURES: Dict[str, Callable[[], CnfGrammar]] = {
    "anbn": anbn_grammar,
    "balanced": balanced_grammar,
}

# (machine, input) pairs each machine is expected to accept
TM_SAMPLES: List[Tuple[str, List[str]]] = [
    ("unary-increment", ["1", "1", "1"]),
    ("anbn-tm", ["a", "a", "b", "b"]),
    ("rrlrrlll", ["t0"]),
]
