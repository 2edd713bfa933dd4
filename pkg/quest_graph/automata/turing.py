"""
Turing Machine Module
Single-tape Turing machine definition and direct simulation
"""

import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, List, Mapping, Optional, Sequence, Tuple

from ..utils.errors import MachineDefinitionError

logger = logging.getLogger(__name__)

LEFT = "L"
RIGHT = "R"
DIRECTIONS = (LEFT, RIGHT)

Transition = Tuple[str, str, str]


@dataclass(frozen=True)
class TuringMachine:
    """Deterministic single-tape Turing machine.

    Accepting states halt the machine; delta must be total on every other state.
    """

    states: FrozenSet[str]
    tape_alphabet: FrozenSet[str]
    input_alphabet: FrozenSet[str]
    delta: Mapping[Tuple[str, str], Transition]
    start: str
    blank: str
    accepting: FrozenSet[str]
    name: str = field(default="tm", compare=False)

    def __post_init__(self):
        if not self.input_alphabet <= self.tape_alphabet:
            raise MachineDefinitionError("input alphabet must be a subset of the tape alphabet")
        if self.blank in self.input_alphabet:
            raise MachineDefinitionError(f"blank symbol {self.blank!r} cannot be an input symbol")
        if self.blank not in self.tape_alphabet:
            raise MachineDefinitionError(f"blank symbol {self.blank!r} missing from the tape alphabet")
        if self.start not in self.states:
            raise MachineDefinitionError(f"start state {self.start!r} is not a state")
        if not self.accepting <= self.states:
            raise MachineDefinitionError("accepting states must be states")

        for (state, symbol), (target, write, move) in self.delta.items():
            if state not in self.states or target not in self.states:
                raise MachineDefinitionError(f"transition ({state}, {symbol}) uses an unknown state")
            if symbol not in self.tape_alphabet or write not in self.tape_alphabet:
                raise MachineDefinitionError(f"transition ({state}, {symbol}) uses an unknown symbol")
            if move not in DIRECTIONS:
                raise MachineDefinitionError(f"transition ({state}, {symbol}) has direction {move!r}")

        for state in self.states - self.accepting:
            for symbol in self.tape_alphabet:
                if (state, symbol) not in self.delta:
                    raise MachineDefinitionError(
                        f"delta is not total: no transition for ({state}, {symbol})")

    @classmethod
    def from_rules(cls, rules: Iterable[Tuple[str, str, str, str, str]], start: str,
                   accepting: Iterable[str], input_alphabet: Iterable[str],
                   blank: str = "_", name: str = "tm") -> 'TuringMachine':
        """Build a machine from (state, read, next, write, move) rows.

        States and tape symbols are inferred from the rows.
        """
        delta: Dict[Tuple[str, str], Transition] = {}
        states = {start, *accepting}
        symbols = {blank, *input_alphabet}
        for state, read, target, write, move in rules:
            if (state, read) in delta:
                raise MachineDefinitionError(f"duplicate transition for ({state}, {read})")
            delta[(state, read)] = (target, write, move)
            states.update((state, target))
            symbols.update((read, write))
        return cls(frozenset(states), frozenset(symbols), frozenset(input_alphabet),
                   delta, start, blank, frozenset(accepting), name)

    def step(self, state: str, symbol: str) -> Transition:
        return self.delta[(state, symbol)]

    def __repr__(self):
        return f"<TuringMachine(name={self.name}, states={len(self.states)}, symbols={len(self.tape_alphabet)})>"


class TmStatus(str, Enum):
    ACCEPTING = "halted-accepting"
    REJECTING = "halted-rejecting"
    BUDGET = "budget-exhausted"


@dataclass
class TmResult:
    """Direct simulation record.

    `tape[i]` holds cell `i + offset`; offset is 0 unless the two-way tape grew left.
    """

    status: TmStatus
    tape: List[str]
    offset: int
    head: int
    state: str
    steps: int
    moves: List[str]
    head_trace: List[int]
    write_log: List[Tuple[int, str]]
    blank: str

    @property
    def accepted(self) -> bool:
        return self.status == TmStatus.ACCEPTING

    def content(self) -> Dict[int, str]:
        """Non-blank cells by absolute position"""
        return {i + self.offset: s for i, s in enumerate(self.tape) if s != self.blank}

    def tape_string(self) -> str:
        return "".join(self.tape).strip(self.blank)


def tm_run(tm: TuringMachine, input: Sequence[str], budget: int,
           start: int = 0, two_way: bool = False) -> TmResult:
    """Run the machine directly.

    Args:
        tm: Machine
        input: Input symbols, written from cell 0
        budget: Maximum number of transitions
        start: Initial head position
        two_way: Grow the tape to the left instead of rejecting

    Returns:
        Result with final tape, head trace and write log
    """
    for symbol in input:
        if symbol not in tm.input_alphabet:
            raise ValueError(f"input symbol {symbol!r} is not in the input alphabet")
    if start < 0:
        raise ValueError(f"start position must be non-negative, got {start}")

    tape = list(input) or [tm.blank]
    while len(tape) <= start:
        tape.append(tm.blank)
    offset = 0
    head = start
    state = tm.start
    steps = 0
    moves: List[str] = []
    head_trace = [head]
    write_log: List[Tuple[int, str]] = []

    while True:
        if state in tm.accepting:
            status = TmStatus.ACCEPTING
            break
        if steps >= budget:
            status = TmStatus.BUDGET
            break

        target, write, move = tm.step(state, tape[head - offset])
        tape[head - offset] = write
        write_log.append((head, write))
        moves.append(move)
        steps += 1
        state = target
        head += 1 if move == RIGHT else -1

        if head < offset:
            if not two_way:
                status = TmStatus.REJECTING
                break
            tape.insert(0, tm.blank)
            offset -= 1
        elif head - offset >= len(tape):
            tape.append(tm.blank)
        head_trace.append(head)

    logger.debug(f"{tm.name}: {status.value} after {steps} steps")
    return TmResult(status, tape, offset, head, state, steps, moves, head_trace, write_log, tm.blank)
