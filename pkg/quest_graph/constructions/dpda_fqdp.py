"""
DPDA and FQDP
Pushdown simulation by a depth-first quest tree, and the machine read off an FQDP agent
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .conformance import ACCEPT, BUDGET, ILLEGAL, REJECT, ConformanceResult
from ..automata.pushdown import (
    FINAL_STATE,
    KEEP,
    POP,
    PUSH,
    Dpda,
    DpdaStatus,
    PdaTransition,
    dpda_run,
    validate_dpda,
)
from ..core.types import BOTTOM, END, EPSILON, HALT_MARKS, PARENT, REJECT as REJECT_MARK, TERMINAL, Stop
from ..qdp.actions import CompleteQuest, DiscoverInput, DiscoverSubquest
from ..qdp.engine import FqdpConfig, fqdp_run
from ..qdp.providers import InputTape
from ..qdp.tree import TreeContext
from ..utils.config import Config
from ..utils.errors import MachineDefinitionError

logger = logging.getLogger(__name__)

INPUT = "i"
QUEST = "q"
REPLICA = "q'"

END_SYMBOL = "$"
DPDA_CONFIG = FqdpConfig(child_limit=4, capacity=4)

DPDA_STATUS = {
    DpdaStatus.ACCEPT: ACCEPT,
    DpdaStatus.REJECT: REJECT,
    DpdaStatus.BUDGET: BUDGET,
}


@dataclass(frozen=True)
class Pending:
    """State slot of a node that read one symbol ahead.

    An accepting state with an ε-move reads first to learn whether the
    input is over; a real symbol then rides along the ε-moves until a
    state reads it.
    """

    state: Any
    symbol: Any


def _split(slot) -> Tuple[Any, Any]:
    if isinstance(slot, Pending):
        return slot.state, slot.symbol
    return slot, None


def _carry(state, symbol):
    return state if symbol is None else Pending(state, symbol)


def fqdp_dpda_agent(dpda: Dpda):
    """Agent simulating `dpda` on an FQDP with four context slots.

    Every quest node stands for one stack cell; its goal is (type, stack
    symbol, state on entry). A node reads input, then pushes through a
    sub-quest, pops by completing, or keeps the stack through a replica.
    Once the stack empties at the root a final probe reads the end marker.

    Raises:
        MachineDefinitionError: the machine is not deterministic
    """
    problems = validate_dpda(dpda)
    if problems:
        raise MachineDefinitionError(f"{dpda.name} is not deterministic: {'; '.join(problems)}")

    def accepts_here(state) -> bool:
        return dpda.accepts_by_state and state in dpda.accepting

    def transition(rule: Optional[PdaTransition], context: TreeContext, pending):
        if rule is None:
            return CompleteQuest(REJECT_MARK)
        target = _carry(rule.target, pending)
        if rule.op == PUSH:
            return DiscoverSubquest((QUEST, rule.symbol, target))
        if rule.op == POP:
            return CompleteQuest((BOTTOM, target) if context.is_root else target)
        return DiscoverSubquest((REPLICA, context.focus.goal[1], target))

    def agent(context: TreeContext):
        focus = context.focus
        last = context.last_child

        if context.is_root and focus.response in HALT_MARKS:
            return Stop()

        if last is not None and last.goal[0] == INPUT and last.goal[1] == BOTTOM:
            state, _ = _split(last.goal[2])
            accept = last.response == END and (dpda.accepts_by_empty_stack or state in dpda.accepting)
            return CompleteQuest(TERMINAL if accept else REJECT_MARK)

        if context.is_root and isinstance(focus.response, tuple) and focus.response[0] == BOTTOM:
            slot = focus.response[1]
            _, pending = _split(slot)
            return DiscoverInput((INPUT, BOTTOM, slot), response=pending)

        if last is None:
            _, top, slot = focus.goal
            state, pending = _split(slot)
            if dpda.has_epsilon(state, top) and (pending is not None or not accepts_here(state)):
                return DiscoverInput((INPUT, top, slot), response=EPSILON)
            return DiscoverInput((INPUT, top, slot), response=pending)

        kind = last.goal[0]
        if kind == INPUT:
            _, top, slot = last.goal
            state, pending = _split(slot)
            read = last.response
            if read == END:
                return CompleteQuest(TERMINAL if accepts_here(state) else REJECT_MARK)
            if read == EPSILON:
                return transition(dpda.lookup(state, EPSILON, top), context, pending)
            if pending is None and dpda.has_epsilon(state, top):
                # read ahead from an accepting state: the ε-move still comes first
                return transition(dpda.lookup(state, EPSILON, top), context, read)
            return transition(dpda.lookup(state, read, top), context, None)

        if last.response in HALT_MARKS:
            return CompleteQuest(last.response)
        if kind == QUEST:
            return DiscoverSubquest((REPLICA, focus.goal[1], last.response))
        # replica finished: its state is this node's result
        return CompleteQuest((BOTTOM, last.response) if context.is_root else last.response)

    return agent


def fqdp_accepts(agent, config: FqdpConfig, root_goal: Any, input: Sequence,
                 budget: Optional[int] = None) -> bool:
    """Acceptance of an FQDP: it stops with φ at the root after reading past the input"""
    tape = InputTape(input)
    result = fqdp_run(agent, config, Config.DEFAULT_BUDGET if budget is None else budget,
                      root_goal=root_goal, provider=tape)
    return result.stopped and result.graph.nodes[0].response == TERMINAL and tape.exhausted


def simulate_dpda_on_fqdp(dpda: Dpda, input: Sequence, budget: Optional[int] = None,
                          observer=None) -> ConformanceResult:
    """Run the FQDP simulation and the direct DPDA run side by side.

    Args:
        dpda: Deterministic pushdown automaton
        input: Input symbols
        budget: Step budget for both runs
        observer: Optional per-step hook forwarded to the engine

    Returns:
        Conformance verdict; `run` holds the rollout tree
    """
    budget = Config.DEFAULT_BUDGET if budget is None else budget
    tape = InputTape(input)
    result = fqdp_run(fqdp_dpda_agent(dpda), DPDA_CONFIG, budget,
                      root_goal=(QUEST, dpda.initial_stack, dpda.start), provider=tape, observer=observer)

    root = result.graph.nodes[0].response
    if result.violation is not None:
        status = ILLEGAL
        logger.error(f"{dpda.name}: FQDP agent halted on {result.violation}: {result.diagnostic}")
    elif not result.stopped:
        status = BUDGET
    else:
        status = ACCEPT if root == TERMINAL and tape.exhausted else REJECT

    oracle = dpda_run(dpda, input, budget)
    oracle_status = DPDA_STATUS[oracle.status]
    logger.info(f"{dpda.name} on {''.join(map(str, input))!r}: FQDP {status}, oracle {oracle_status}")
    return ConformanceResult(
        construction="dpda-fqdp",
        status=status,
        oracle_status=oracle_status,
        agree=status == oracle_status,
        steps=result.steps,
        output=root,
        oracle_output=oracle.trace[-1],
        run=result,
        details={"nodes": len(result.graph), "input_read": tape.position,
                 "truncations": result.graph.truncations},
    )


@dataclass
class FqdpDerivation:
    """DPDA read off an FQDP agent.

    Args:
        dpda: Derived machine; run it on the input followed by END_SYMBOL
        contexts: State name -> context digest
        stack_symbols: Stack symbol name -> digest of the suspended parent context
        diagnostics: Exploration problems; empty for a complete derivation
    """

    dpda: Dpda
    contexts: Dict[str, Tuple]
    stack_symbols: Dict[str, Tuple] = field(default_factory=dict)
    diagnostics: List[str] = field(default_factory=list)

    @property
    def complete(self) -> bool:
        return not self.diagnostics


class _Interner:
    """Stable names for digests, in discovery order"""

    def __init__(self, prefix: str):
        self.prefix = prefix
        self.names: Dict[Tuple, str] = {}

    def __call__(self, digest: Tuple) -> str:
        name = self.names.get(digest)
        if name is None:
            name = f"{self.prefix}{len(self.names)}"
            self.names[digest] = name
        return name

    def __len__(self):
        return len(self.names)

    def digests(self) -> Dict[str, Tuple]:
        return {name: digest for digest, name in self.names.items()}


def _with_child(digest: Tuple, child: Tuple, focus_response: Any, room: int) -> Tuple:
    focus, parent, children = digest
    children = (children + (child,))[-room:] if room else ()
    return ((focus[0], focus_response), parent, children)


def dpda_from_fqdp(agent: Callable[[TreeContext], Any], config: FqdpConfig, alphabet: Iterable,
                   root_goal: Any, max_states: Optional[int] = None) -> FqdpDerivation:
    """Explore an agent's reachable contexts and emit the equivalent DPDA.

    States are context digests. Reading a symbol is a discover-input with
    that symbol as response; a sub-quest pushes the suspended parent
    context and moves into the child; completing pops it back with the
    child's response appended. The machine reads END_SYMBOL where the
    agent would see the end marker, and accepts in the contexts where the
    agent stops with φ at the root.

    Args:
        agent: Deterministic FQDP agent
        config: Capacity and child limit the agent runs under
        alphabet: Input symbols
        root_goal: Goal of the root quest
        max_states: Exploration budget in contexts

    Returns:
        Derivation; a partial machine plus diagnostics on overflow
    """
    max_states = Config.DEFAULT_EXPLORATION_BUDGET if max_states is None else max_states
    symbols = [*alphabet, END_SYMBOL]
    states = _Interner("c")
    stack = _Interner("P")
    bottom = "Z0"

    start = ((root_goal, EPSILON), None, ())
    start_name = states(start)
    reads: Dict[str, Dict[Any, str]] = {}
    moves: Dict[Tuple[str, Optional[str]], Tuple[str, str, Optional[str]]] = {}
    pops: Dict[str, Tuple] = {}
    accepting: Set[str] = set()
    diagnostics: List[str] = []

    explored: Set[str] = set()
    overflow = False
    changed = True
    while changed and not overflow:
        changed = False
        for digest, name in list(states.names.items()):
            if name not in explored:
                if len(explored) >= max_states:
                    diagnostics.append(f"exploration budget of {max_states} contexts exceeded")
                    overflow = True
                    break
                explored.add(name)
                changed = True
                _explore(agent, config, digest, name, symbols, states, stack,
                         reads, moves, pops, accepting, diagnostics)

            if name in pops:
                for frame, frame_name in list(stack.names.items()):
                    if frame[0] != pops[name][1] or (name, frame_name) in moves:
                        continue
                    room = config.capacity - (frame[1] is not None)
                    child = (digest[0][0], pops[name][0])
                    target = states(_with_child(frame, child, EPSILON, room))
                    moves[(name, frame_name)] = (target, POP, None)
                    changed = True

    transitions = _emit_transitions(reads, moves, [bottom, *stack.names.values()])
    dpda = Dpda(
        states=frozenset(states.names.values()),
        input_alphabet=frozenset(symbols),
        stack_alphabet=frozenset([bottom, *stack.names.values()]),
        transitions=tuple(transitions),
        start=start_name,
        initial_stack=bottom,
        accepting=frozenset(accepting),
        acceptance=FINAL_STATE,
        name="fqdp-derived",
    )
    logger.info(f"Derived DPDA with {len(states)} states, {len(stack)} stack symbols, "
                f"{len(transitions)} transitions")
    return FqdpDerivation(dpda, states.digests(), stack.digests(), diagnostics)


def _explore(agent, config: FqdpConfig, digest: Tuple, name: str, symbols: List, states: _Interner,
             stack: _Interner, reads, moves, pops, accepting: Set[str], diagnostics: List[str]):
    focus, parent, children = digest
    is_root = parent is None
    room = config.capacity - (not is_root)
    action = agent(TreeContext.from_digest(digest))

    if isinstance(action, Stop):
        if not is_root:
            diagnostics.append(f"context {name} stops off the root")
        elif focus[1] == TERMINAL:
            accepting.add(name)
        return

    if isinstance(action, (DiscoverInput, DiscoverSubquest)) and len(children) >= config.child_limit:
        diagnostics.append(f"context {name} exceeds the child limit")
        return

    if isinstance(action, DiscoverInput):
        if action.response is None:
            reads[name] = {}
            for symbol in symbols:
                response = END if symbol == END_SYMBOL else symbol
                reads[name][symbol] = states(_with_child(digest, (action.goal, response), focus[1], room))
        else:
            moves[(name, None)] = (states(_with_child(digest, (action.goal, action.response), focus[1], room)),
                                   KEEP, None)
    elif isinstance(action, DiscoverSubquest):
        frame = stack(((focus[0], PARENT), parent, children))
        child = ((action.goal, EPSILON), (focus[0], PARENT), ())
        moves[(name, None)] = (states(child), PUSH, frame)
    elif isinstance(action, CompleteQuest):
        if is_root:
            moves[(name, None)] = (states(((focus[0], action.response), parent, children)), KEEP, None)
        else:
            pops[name] = (action.response, parent)
    elif action is None:
        diagnostics.append(f"context {name} has no action")
    else:
        diagnostics.append(f"context {name} emits {action!r}, which an FQDP cannot take")


def _emit_transitions(reads, moves, stack_symbols: List[str]) -> List[PdaTransition]:
    transitions = []
    for name, targets in reads.items():
        for symbol, target in targets.items():
            for top in stack_symbols:
                transitions.append(PdaTransition(name, symbol, top, target, KEEP))
    for (name, top), (target, op, pushed) in moves.items():
        tops = stack_symbols if top is None else [top]
        for symbol in tops:
            transitions.append(PdaTransition(name, EPSILON, symbol, target, op, pushed))
    return transitions
