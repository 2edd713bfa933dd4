"""
Pushdown Automaton Module
Deterministic pushdown automaton definition, validation and direct simulation
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from ..core.types import EPSILON
from ..utils.errors import MachineDefinitionError

logger = logging.getLogger(__name__)

PUSH = "push"
POP = "pop"
KEEP = "keep"
STACK_OPS = (PUSH, POP, KEEP)

FINAL_STATE = "final_state"
EMPTY_STACK = "empty_stack"
EITHER = "either"
ACCEPTANCE_MODES = (FINAL_STATE, EMPTY_STACK, EITHER)


@dataclass(frozen=True)
class PdaTransition:
    """One rule (state, read, top) -> (target, stack op).

    `read` is EPSILON for moves that consume no input. A push places
    `symbol` on top of the current top; a pop removes the top.
    """

    state: Any
    read: Any
    top: Any
    target: Any
    op: str = KEEP
    symbol: Any = None

    @property
    def is_epsilon(self) -> bool:
        return self.read == EPSILON


@dataclass(frozen=True)
class Dpda:
    """Pushdown automaton with single-symbol push/pop transitions"""

    states: FrozenSet
    input_alphabet: FrozenSet
    stack_alphabet: FrozenSet
    transitions: Tuple[PdaTransition, ...]
    start: Any
    initial_stack: Any
    accepting: FrozenSet
    acceptance: str = FINAL_STATE
    name: str = field(default="dpda", compare=False)
    _index: Dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.acceptance not in ACCEPTANCE_MODES:
            raise MachineDefinitionError(f"unknown acceptance mode {self.acceptance!r}")
        if self.start not in self.states:
            raise MachineDefinitionError(f"start state {self.start!r} is not a state")
        if self.initial_stack not in self.stack_alphabet:
            raise MachineDefinitionError(f"initial stack symbol {self.initial_stack!r} not in stack alphabet")
        if not self.accepting <= self.states:
            raise MachineDefinitionError("accepting states must be states")

        for rule in self.transitions:
            if rule.state not in self.states or rule.target not in self.states:
                raise MachineDefinitionError(f"{rule} uses an unknown state")
            if rule.read != EPSILON and rule.read not in self.input_alphabet:
                raise MachineDefinitionError(f"{rule} reads an unknown input symbol")
            if rule.top not in self.stack_alphabet:
                raise MachineDefinitionError(f"{rule} expects an unknown stack symbol")
            if rule.op not in STACK_OPS:
                raise MachineDefinitionError(f"{rule} has unknown stack operation {rule.op!r}")
            if rule.op == PUSH and rule.symbol not in self.stack_alphabet:
                raise MachineDefinitionError(f"{rule} pushes an unknown stack symbol")
            # first rule wins on lookup; validate_dpda reports the conflicts
            self._index.setdefault((rule.state, rule.read, rule.top), rule)

    @classmethod
    def from_rules(cls, rules: Iterable[Tuple], start: Any, accepting: Iterable,
                   input_alphabet: Iterable, initial_stack: Any = "Z0",
                   acceptance: str = FINAL_STATE, name: str = "dpda") -> 'Dpda':
        """Build from (state, read, top, target, op[, symbol]) rows; read None means ε"""
        transitions = []
        states = {start, *accepting}
        stack = {initial_stack}
        for row in rules:
            state, read, top, target, op = row[:5]
            symbol = row[5] if len(row) > 5 else None
            transitions.append(PdaTransition(state, EPSILON if read is None else read, top, target, op, symbol))
            states.update((state, target))
            stack.add(top)
            if symbol is not None:
                stack.add(symbol)
        return cls(frozenset(states), frozenset(input_alphabet), frozenset(stack), tuple(transitions),
                   start, initial_stack, frozenset(accepting), acceptance, name)

    def lookup(self, state: Any, read: Any, top: Any) -> Optional[PdaTransition]:
        return self._index.get((state, read, top))

    def has_epsilon(self, state: Any, top: Any) -> bool:
        return (state, EPSILON, top) in self._index

    @property
    def accepts_by_state(self) -> bool:
        return self.acceptance in (FINAL_STATE, EITHER)

    @property
    def accepts_by_empty_stack(self) -> bool:
        return self.acceptance in (EMPTY_STACK, EITHER)

    def __repr__(self):
        return (f"<Dpda(name={self.name}, states={len(self.states)}, "
                f"transitions={len(self.transitions)}, acceptance={self.acceptance})>")


def validate_dpda(dpda: Dpda) -> List[str]:
    """List determinism violations.

    Returns:
        One entry per violating (state, symbol, stack-top) triple; empty iff deterministic
    """
    diagnostics = []
    targets = defaultdict(list)
    for rule in dpda.transitions:
        targets[(rule.state, rule.read, rule.top)].append(rule)

    for (state, read, top), rules in targets.items():
        if len(rules) > 1:
            diagnostics.append(f"({state}, {read}, {top}): {len(rules)} transitions")

    for (state, read, top) in targets:
        if read != EPSILON:
            continue
        clashing = sorted(str(r) for (s, r, z) in targets if s == state and z == top and r != EPSILON)
        if clashing:
            diagnostics.append(
                f"({state}, {EPSILON}, {top}): ε-transition alongside input transitions on {', '.join(clashing)}")

    return diagnostics


class DpdaStatus(str, Enum):
    ACCEPT = "accept"
    REJECT = "reject"
    BUDGET = "budget-exhausted"


@dataclass
class DpdaResult:
    status: DpdaStatus
    trace: List[Tuple[Any, int, Tuple]]
    steps: int

    @property
    def accepted(self) -> bool:
        return self.status == DpdaStatus.ACCEPT


def dpda_run(dpda: Dpda, input: Sequence, budget: int = 10000) -> DpdaResult:
    """Run the automaton deterministically.

    ε-transitions take priority over reading. Once the whole input is
    consumed the run accepts as soon as any configuration qualifies, so
    trailing ε-transitions may still lead to acceptance.
    """
    state = dpda.start
    stack = [dpda.initial_stack]
    position = 0
    steps = 0
    trace = [(state, position, tuple(stack))]

    while True:
        if position == len(input) and _qualifies(dpda, state, stack):
            return DpdaResult(DpdaStatus.ACCEPT, trace, steps)
        if not stack:
            break

        top = stack[-1]
        rule = dpda.lookup(state, EPSILON, top)
        if rule is None and position < len(input):
            rule = dpda.lookup(state, input[position], top)
        if rule is None:
            break
        if steps >= budget:
            return DpdaResult(DpdaStatus.BUDGET, trace, steps)

        if not rule.is_epsilon:
            position += 1
        if rule.op == POP:
            stack.pop()
        elif rule.op == PUSH:
            stack.append(rule.symbol)
        state = rule.target
        steps += 1
        trace.append((state, position, tuple(stack)))

    return DpdaResult(DpdaStatus.REJECT, trace, steps)


def _qualifies(dpda: Dpda, state: Any, stack: List) -> bool:
    if dpda.accepts_by_state and state in dpda.accepting:
        return True
    return dpda.accepts_by_empty_stack and not stack
