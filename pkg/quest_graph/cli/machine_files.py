"""
Machine Files
JSON machine definitions with a `kind` discriminator, loaded into automata and dumped back
"""

import json
import logging
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Union

from ..automata.cyk import CnfGrammar
from ..automata.finite import Fsm, LmTable
from ..automata.pushdown import FINAL_STATE, Dpda, PdaTransition
from ..automata.turing import TuringMachine
from ..core.types import EPSILON
from ..utils.errors import MachineDefinitionError, MachineFileError

logger = logging.getLogger(__name__)

TM = "tm"
DPDA = "dpda"
FSM = "fsm"
CNF_GRAMMAR = "cnf_grammar"
LM = "lm"
KINDS = (TM, DPDA, FSM, CNF_GRAMMAR, LM)

Machine = Union[TuringMachine, Dpda, Fsm, CnfGrammar, LmTable]


@dataclass
class MachineFile:
    """A parsed machine file.

    Args:
        kind: One of KINDS
        machine: The validated automaton
        path: Source file, if read from disk
        extras: Top-level fields the machine itself does not use
    """

    kind: str
    machine: Machine
    path: Optional[str] = None
    extras: Dict[str, Any] = field(default_factory=dict)


def _require(document: Dict, key: str, path: Optional[str]) -> Any:
    if key not in document:
        raise MachineFileError("missing required field", path=path, field=key)
    return document[key]


def _tm_from(document: Dict, path: Optional[str]) -> TuringMachine:
    rows = []
    for i, row in enumerate(_require(document, "delta", path)):
        if not isinstance(row, list) or len(row) != 5:
            raise MachineFileError(f"row {i} must be [state, read, next, write, move]", path=path, field="delta")
        rows.append(tuple(row))
    tm = TuringMachine.from_rules(rows, _require(document, "start", path), document.get("accepting", []),
                                  _require(document, "input_alphabet", path), document.get("blank", "_"),
                                  document.get("name", "tm"))
    extra_states = frozenset(document.get("states", ())) - tm.states
    extra_symbols = frozenset(document.get("tape_alphabet", ())) - tm.tape_alphabet
    if extra_states or extra_symbols:
        tm = TuringMachine(tm.states | extra_states, tm.tape_alphabet | extra_symbols, tm.input_alphabet,
                           tm.delta, tm.start, tm.blank, tm.accepting, tm.name)
    return tm


def _dpda_from(document: Dict, path: Optional[str]) -> Dpda:
    transitions = []
    for i, rule in enumerate(_require(document, "transitions", path)):
        try:
            read = rule.get("read")
            transitions.append(PdaTransition(rule["state"], EPSILON if read is None else read, rule["top"],
                                             rule["next"], rule.get("op", "keep"), rule.get("symbol")))
        except (KeyError, AttributeError) as e:
            raise MachineFileError(f"transition {i} is missing {e}", path=path, field="transitions")

    initial_stack = document.get("initial_stack", "Z0")
    start = _require(document, "start", path)
    accepting = frozenset(document.get("accepting", []))
    states = {start, *accepting, *document.get("states", [])}
    stack = {initial_stack, *document.get("stack_alphabet", [])}
    for rule in transitions:
        states.update((rule.state, rule.target))
        stack.add(rule.top)
        if rule.symbol is not None:
            stack.add(rule.symbol)
    return Dpda(frozenset(states), frozenset(_require(document, "input_alphabet", path)), frozenset(stack),
                tuple(transitions), start, initial_stack, accepting,
                document.get("acceptance", FINAL_STATE), document.get("name", "dpda"))


def _fsm_from(document: Dict, path: Optional[str]) -> Fsm:
    table = _require(document, "delta", path)
    if not isinstance(table, dict):
        raise MachineFileError("must map each state to {symbol: target}", path=path, field="delta")
    delta = {(state, symbol): target for state, row in table.items() for symbol, target in row.items()}
    states = frozenset(document.get("states", table.keys()))
    return Fsm(states, frozenset(_require(document, "input_alphabet", path)), delta,
               _require(document, "start", path), frozenset(document.get("accepting", [])),
               document.get("name", "fsm"))


def _grammar_from(document: Dict, path: Optional[str]) -> CnfGrammar:
    return CnfGrammar.from_rules(_require(document, "rules", path), document.get("start", "S"),
                                 bool(document.get("allows_empty", False)), document.get("name", "grammar"))


def _lm_from(document: Dict, path: Optional[str]) -> LmTable:
    delta = {}
    for i, entry in enumerate(_require(document, "delta", path)):
        if not isinstance(entry, list) or len(entry) != 2 or not isinstance(entry[0], list):
            raise MachineFileError(f"entry {i} must be [[context...], token]", path=path, field="delta")
        delta[tuple(entry[0])] = entry[1]
    return LmTable(frozenset(_require(document, "vocabulary", path)), delta,
                   int(_require(document, "context_length", path)), document.get("name", "lm"))


_LOADERS: Dict[str, Callable[[Dict, Optional[str]], Machine]] = {
    TM: _tm_from,
    DPDA: _dpda_from,
    FSM: _fsm_from,
    CNF_GRAMMAR: _grammar_from,
    LM: _lm_from,
}

_MACHINE_FIELDS = {
    TM: {"delta", "start", "accepting", "input_alphabet", "blank", "states", "tape_alphabet"},
    DPDA: {"transitions", "start", "accepting", "input_alphabet", "initial_stack", "acceptance",
           "states", "stack_alphabet"},
    FSM: {"delta", "states", "input_alphabet", "start", "accepting"},
    CNF_GRAMMAR: {"rules", "start", "allows_empty"},
    LM: {"delta", "vocabulary", "context_length"},
}


def parse_machine(document: Any, path: Optional[str] = None) -> MachineFile:
    """Validate a decoded JSON document into a machine.

    Raises:
        MachineFileError: unknown kind, missing field or invalid machine
    """
    if not isinstance(document, dict):
        raise MachineFileError("top level must be a JSON object", path=path)
    kind = _require(document, "kind", path)
    if kind not in _LOADERS:
        raise MachineFileError(f"unknown kind {kind!r}, expected one of {', '.join(KINDS)}",
                               path=path, field="kind")
    try:
        machine = _LOADERS[kind](document, path)
    except MachineDefinitionError as e:
        raise MachineFileError(str(e), path=path)
    except (TypeError, ValueError) as e:
        raise MachineFileError(f"malformed {kind} definition: {e}", path=path)

    extras = {k: v for k, v in document.items() if k not in _MACHINE_FIELDS[kind] | {"kind", "name"}}
    return MachineFile(kind, machine, path, extras)


def load_machine(path: Union[str, Path]) -> MachineFile:
    """Read and validate a machine file"""
    path = str(path)
    try:
        with open(path, "r", encoding="utf-8") as f:
            document = json.load(f)
    except OSError as e:
        raise MachineFileError(f"cannot read file: {e.strerror}", path=path)
    except json.JSONDecodeError as e:
        raise MachineFileError(e.msg, path=path, line=e.lineno)

    machine_file = parse_machine(document, path)
    logger.info(f"Loaded {machine_file.kind} machine {machine_file.machine.name!r} from {path}")
    return machine_file


def _sorted(values) -> List:
    return sorted(values, key=repr)


def dump_machine(machine: Machine, **extras) -> Dict[str, Any]:
    """JSON-ready document that parse_machine turns back into an equal machine"""
    if isinstance(machine, TuringMachine):
        document = {
            "kind": TM,
            "start": machine.start,
            "accepting": _sorted(machine.accepting),
            "input_alphabet": _sorted(machine.input_alphabet),
            "blank": machine.blank,
            "states": _sorted(machine.states),
            "tape_alphabet": _sorted(machine.tape_alphabet),
            "delta": [[s, r, *machine.delta[(s, r)]] for s, r in _sorted(machine.delta)],
        }
    elif isinstance(machine, Dpda):
        document = {
            "kind": DPDA,
            "start": machine.start,
            "accepting": _sorted(machine.accepting),
            "input_alphabet": _sorted(machine.input_alphabet),
            "initial_stack": machine.initial_stack,
            "acceptance": machine.acceptance,
            "states": _sorted(machine.states),
            "stack_alphabet": _sorted(machine.stack_alphabet),
            "transitions": [{"state": t.state, "read": None if t.is_epsilon else t.read, "top": t.top,
                             "next": t.target, "op": t.op, "symbol": t.symbol}
                            for t in machine.transitions],
        }
    elif isinstance(machine, Fsm):
        table: Dict[Any, Dict[Any, Any]] = {}
        for (state, symbol), target in machine.delta.items():
            table.setdefault(state, {})[symbol] = target
        document = {
            "kind": FSM,
            "states": _sorted(machine.states),
            "input_alphabet": _sorted(machine.input_alphabet),
            "start": machine.start,
            "accepting": _sorted(machine.accepting),
            "delta": table,
        }
    elif isinstance(machine, CnfGrammar):
        document = {
            "kind": CNF_GRAMMAR,
            "start": machine.start,
            "allows_empty": machine.allows_empty,
            "rules": machine.rule_lines(),
        }
    elif isinstance(machine, LmTable):
        document = {
            "kind": LM,
            "vocabulary": _sorted(machine.vocabulary),
            "context_length": machine.context_length,
            "delta": [[list(context), token] for context, token in machine.delta.items()],
        }
    else:
        raise TypeError(f"cannot dump {type(machine).__name__}")

    document["name"] = machine.name
    document.update(extras)
    return document


def save_machine(machine: Machine, path: Union[str, Path], **extras):
    with open(path, "w", encoding="utf-8") as f:
        json.dump(dump_machine(machine, **extras), f, indent=2, ensure_ascii=False)
    logger.info(f"Saved {machine.name!r} to {path}")


def parse_input(text: str) -> List[str]:
    """Split an input string into symbols.

    Whitespace-separated tokens when the string contains whitespace,
    otherwise one symbol per character.
    """
    if any(ch.isspace() for ch in text):
        return text.split()
    return list(text)
