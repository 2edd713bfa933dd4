"""
Finite Machines Module
Finite state machines and finite-context language model tables
"""

import logging
from dataclasses import dataclass, field
from itertools import product
from typing import Any, Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..utils.errors import MachineDefinitionError

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Fsm:
    """Deterministic finite state machine with a total transition function"""

    states: FrozenSet
    input_alphabet: FrozenSet
    delta: Mapping[Tuple[Any, Any], Any]
    start: Any
    accepting: FrozenSet
    name: str = field(default="fsm", compare=False)

    def __post_init__(self):
        if self.start not in self.states:
            raise MachineDefinitionError(f"start state {self.start!r} is not a state")
        if not self.accepting <= self.states:
            raise MachineDefinitionError("accepting states must be states")
        for state in self.states:
            for symbol in self.input_alphabet:
                target = self.delta.get((state, symbol))
                if target is None:
                    raise MachineDefinitionError(f"delta is not total: no transition for ({state}, {symbol})")
                if target not in self.states:
                    raise MachineDefinitionError(f"transition ({state}, {symbol}) targets unknown state {target!r}")

    def __repr__(self):
        return f"<Fsm(name={self.name}, states={len(self.states)}, alphabet={len(self.input_alphabet)})>"


@dataclass
class FsmResult:
    accepted: bool
    states: List[Any]
    diagnostic: Optional[str] = None


def fsm_run(fsm: Fsm, input: Sequence) -> FsmResult:
    """Single left-to-right pass; an unknown symbol rejects"""
    state = fsm.start
    visited = [state]
    for position, symbol in enumerate(input):
        if symbol not in fsm.input_alphabet:
            diagnostic = f"symbol {symbol!r} at position {position} is not in the input alphabet"
            logger.debug(f"{fsm.name}: {diagnostic}")
            return FsmResult(False, visited, diagnostic)
        state = fsm.delta[(state, symbol)]
        visited.append(state)
    return FsmResult(state in fsm.accepting, visited)


@dataclass(frozen=True)
class LmTable:
    """Finite-context language model: the next token is a function of the last C tokens"""

    vocabulary: FrozenSet
    delta: Mapping[Tuple, Any]
    context_length: int
    name: str = field(default="lm", compare=False)

    def __post_init__(self):
        if self.context_length < 1:
            raise MachineDefinitionError(f"context length must be positive, got {self.context_length}")
        for context in product(sorted(self.vocabulary, key=repr), repeat=self.context_length):
            token = self.delta.get(context)
            if token is None:
                raise MachineDefinitionError(f"delta is not total: no token for context {context}")
            if token not in self.vocabulary:
                raise MachineDefinitionError(f"context {context} generates unknown token {token!r}")

    def next_token(self, context: Tuple) -> Any:
        return self.delta[tuple(context)]

    def __repr__(self):
        return f"<LmTable(name={self.name}, vocabulary={len(self.vocabulary)}, C={self.context_length})>"


@dataclass
class LmRun:
    """Token stream of an autoregressive run"""

    tokens: List[Any]
    generated: List[Any]
    context: Tuple

    @property
    def last(self) -> Any:
        return self.tokens[-1]


def lm_run(lm: LmTable, initial_context: Sequence, input_schedule: Iterable[Tuple[int, Any]] = (),
           steps: Optional[int] = None) -> LmRun:
    """Run the model autoregressively.

    At every step a scheduled input token is appended first, then one
    generated token; the context window keeps the last C tokens.

    Args:
        lm: Model table
        initial_context: Exactly C tokens
        input_schedule: (step, token) pairs
        steps: Number of steps; defaults to one past the last scheduled step

    Returns:
        Full token stream, generated tokens and final context
    """
    if len(initial_context) != lm.context_length:
        raise ValueError(f"initial context must hold {lm.context_length} tokens, got {len(initial_context)}")

    schedule: Dict[int, Any] = {}
    for step, token in input_schedule:
        if token not in lm.vocabulary:
            raise ValueError(f"scheduled token {token!r} at step {step} is not in the vocabulary")
        if step in schedule:
            raise ValueError(f"two tokens scheduled at step {step}")
        schedule[step] = token
    if steps is None:
        steps = max(schedule) + 1 if schedule else 0

    tokens = list(initial_context)
    generated = []
    for step in range(steps):
        if step in schedule:
            tokens.append(schedule[step])
        token = lm.next_token(tuple(tokens[-lm.context_length:]))
        tokens.append(token)
        generated.append(token)

    return LmRun(tokens, generated, tuple(tokens[-lm.context_length:]))
