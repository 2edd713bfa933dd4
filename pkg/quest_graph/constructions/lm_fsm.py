"""
LM and FSM Equivalence
A two-token language model running an FSM, and the FSM of a finite-context model
"""

import logging
from collections import deque
from typing import Any, Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

from .conformance import ACCEPT, REJECT, ConformanceResult
from ..automata.finite import Fsm, LmTable, fsm_run, lm_run
from ..utils.config import Config
from ..utils.errors import BudgetExceededError, MachineDefinitionError

logger = logging.getLogger(__name__)

FSM_CONTEXT_LENGTH = 2


def lm_from_fsm(fsm: Fsm) -> LmTable:
    """Language model with context length 2 over states and input symbols.

    A (state, symbol) context generates the FSM successor. A context
    ending in a state repeats that state, and the unreachable
    (symbol, symbol) contexts fall back to the start state.

    Raises:
        MachineDefinitionError: states and input symbols overlap
    """
    overlap = fsm.states & fsm.input_alphabet
    if overlap:
        raise MachineDefinitionError(f"states and input symbols must be disjoint, both contain {sorted(overlap, key=repr)}")

    vocabulary = fsm.states | fsm.input_alphabet
    delta: Dict[Tuple, Any] = {}
    for first in vocabulary:
        for second in vocabulary:
            if second in fsm.states:
                delta[(first, second)] = second
            elif first in fsm.states:
                delta[(first, second)] = fsm.delta[(first, second)]
            else:
                delta[(first, second)] = fsm.start

    logger.debug(f"LM for {fsm.name}: {len(vocabulary)} tokens, {len(delta)} contexts")
    return LmTable(frozenset(vocabulary), delta, FSM_CONTEXT_LENGTH, name=f"lm({fsm.name})")


def lm_accepts(lm: LmTable, fsm: Fsm, input: Sequence) -> bool:
    """Feed one input token per step and test the last generated state"""
    schedule = list(enumerate(input))
    outcome = lm_run(lm, (fsm.start, fsm.start), schedule, steps=len(schedule))
    return outcome.last in fsm.accepting


def _advance(lm: LmTable, context: Tuple, symbol: Any) -> Tuple:
    """Consume one symbol and fold the following generation step into it"""
    window = (context + (symbol,))[-lm.context_length:]
    return (window + (lm.next_token(window),))[-lm.context_length:]


def fsm_from_lm(lm: LmTable, input_alphabet: Iterable, initial_context: Sequence,
                accepting_tokens: Iterable, max_states: Optional[int] = None) -> Fsm:
    """Deterministic FSM whose states are the model's reachable contexts.

    Each consumption transition already includes the generation step that
    follows it, so no ε-moves remain.

    Args:
        lm: Model table
        input_alphabet: Tokens the environment may feed
        initial_context: Exactly C tokens
        accepting_tokens: A context accepts when its last token is one of these
        max_states: Context budget; defaults to Config.DEFAULT_FSM_STATE_BUDGET

    Raises:
        BudgetExceededError: more reachable contexts than `max_states`
    """
    max_states = Config.DEFAULT_FSM_STATE_BUDGET if max_states is None else max_states
    alphabet: FrozenSet = frozenset(input_alphabet)
    accepting_tokens = frozenset(accepting_tokens)
    start = tuple(initial_context)
    if len(start) != lm.context_length:
        raise ValueError(f"initial context must hold {lm.context_length} tokens, got {len(start)}")
    unknown = alphabet - lm.vocabulary
    if unknown:
        raise MachineDefinitionError(f"input symbols {sorted(unknown, key=repr)} are not in the vocabulary")

    seen = {start}
    frontier = deque([start])
    delta: Dict[Tuple[Tuple, Any], Tuple] = {}
    while frontier:
        context = frontier.popleft()
        for symbol in alphabet:
            target = _advance(lm, context, symbol)
            delta[(context, symbol)] = target
            if target not in seen:
                if len(seen) >= max_states:
                    raise BudgetExceededError(f"{lm.name} reaches more than {max_states} contexts")
                seen.add(target)
                frontier.append(target)

    accepting = frozenset(c for c in seen if c[-1] in accepting_tokens)
    logger.info(f"FSM for {lm.name}: {len(seen)} states, {len(accepting)} accepting")
    return Fsm(frozenset(seen), alphabet, delta, start, accepting, name=f"fsm({lm.name})")


def simulate_fsm_on_lm(fsm: Fsm, input: Sequence) -> ConformanceResult:
    """Run the FSM through its language model and back through the derived FSM.

    Returns:
        Verdict of the language model against fsm_run; details carry the
        derived FSM's verdict and size
    """
    oracle = fsm_run(fsm, input)
    oracle_status = ACCEPT if oracle.accepted else REJECT
    lm = lm_from_fsm(fsm)

    stray = [s for s in input if s not in fsm.input_alphabet]
    if stray:
        logger.warning(f"{fsm.name}: input holds symbols outside the alphabet {stray}")
        accepted = False
        derived_verdict = False
        derived_states = 0
    else:
        accepted = lm_accepts(lm, fsm, input)
        derived = fsm_from_lm(lm, fsm.input_alphabet, (fsm.start, fsm.start), fsm.accepting)
        derived_verdict = fsm_run(derived, input).accepted
        derived_states = len(derived.states)

    status = ACCEPT if accepted else REJECT
    agree = status == oracle_status and derived_verdict == oracle.accepted
    logger.info(f"{fsm.name} on {''.join(map(str, input))!r}: LM {status}, oracle {oracle_status}")
    return ConformanceResult(
        construction="lm-fsm",
        status=status,
        oracle_status=oracle_status,
        agree=agree,
        steps=len(input),
        output=accepted,
        oracle_output=oracle.accepted,
        details={"derived_accepts": derived_verdict, "derived_states": derived_states,
                 "vocabulary": len(lm.vocabulary)},
    )


def simulate_lm_on_fsm(lm: LmTable, input: Sequence, input_alphabet: Iterable, initial_context: Sequence,
                       accepting_tokens: Iterable) -> ConformanceResult:
    """Run the FSM derived from `lm` next to a direct autoregressive rollout.

    The rollout feeds one input token per step and accepts when the last
    generated token is an accepting token.
    """
    accepting_tokens = frozenset(accepting_tokens)
    input_alphabet = frozenset(input_alphabet)
    stray = [s for s in input if s not in input_alphabet]
    if stray:
        logger.warning(f"{lm.name}: input holds symbols outside its input alphabet {stray}")
        return ConformanceResult("lm-fsm", REJECT, REJECT, True, output=False, oracle_output=False)

    schedule = list(enumerate(input))
    oracle = lm_run(lm, initial_context, schedule, steps=len(schedule)).last in accepting_tokens
    derived = fsm_from_lm(lm, input_alphabet, initial_context, accepting_tokens)
    accepted = fsm_run(derived, input).accepted

    status = ACCEPT if accepted else REJECT
    oracle_status = ACCEPT if oracle else REJECT
    logger.info(f"{lm.name} on {''.join(map(str, input))!r}: derived FSM {status}, rollout {oracle_status}")
    return ConformanceResult("lm-fsm", status, oracle_status, status == oracle_status, steps=len(input),
                             output=accepted, oracle_output=oracle,
                             details={"derived_states": len(derived.states)})
