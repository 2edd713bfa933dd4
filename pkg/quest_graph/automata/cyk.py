"""
CNF Grammar Module
Chomsky normal form grammars and CYK membership with parse-tree counting
"""

import logging
from collections import defaultdict
from dataclasses import dataclass, field
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from ..utils.errors import MachineDefinitionError

logger = logging.getLogger(__name__)

Rule = Tuple[str, Tuple[str, ...]]


@dataclass(frozen=True)
class CnfGrammar:
    """Grammar whose rules are all A -> B C or A -> a, plus an optional S -> ε flag"""

    nonterminals: FrozenSet[str]
    terminals: FrozenSet[str]
    rules: FrozenSet[Rule]
    start: str
    allows_empty: bool = False
    name: str = field(default="grammar", compare=False)
    _unary: Dict = field(default_factory=dict, init=False, repr=False, compare=False)
    _binary: Dict = field(default_factory=dict, init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.start not in self.nonterminals:
            raise MachineDefinitionError(f"start symbol {self.start!r} is not a nonterminal")
        if self.nonterminals & self.terminals:
            raise MachineDefinitionError("terminals and nonterminals must be disjoint")

        for lhs, rhs in self.rules:
            if lhs not in self.nonterminals:
                raise MachineDefinitionError(f"rule {lhs} -> {' '.join(rhs)} has an unknown left side")
            if len(rhs) == 1 and rhs[0] in self.terminals:
                self._unary.setdefault(rhs[0], set()).add(lhs)
            elif len(rhs) == 2 and all(s in self.nonterminals for s in rhs):
                self._binary.setdefault(rhs, set()).add(lhs)
            else:
                raise MachineDefinitionError(f"rule {lhs} -> {' '.join(rhs)} is not in CNF")
            if self.allows_empty and self.start in rhs:
                raise MachineDefinitionError(
                    f"start symbol {self.start} cannot appear on a right side when S -> ε is allowed")

    @classmethod
    def from_rules(cls, rules: Iterable[str], start: str = "S", allows_empty: bool = False,
                   name: str = "grammar") -> 'CnfGrammar':
        """Parse rules written as 'S -> C B | A B' or 'A -> a'.

        Symbols appearing on a left side are nonterminals, everything else a terminal.
        """
        parsed: List[Rule] = []
        for line in rules:
            if "->" not in line:
                raise MachineDefinitionError(f"rule {line!r} has no '->'")
            lhs, alternatives = line.split("->", 1)
            lhs = lhs.strip()
            for alternative in alternatives.split("|"):
                rhs = tuple(alternative.split())
                if not rhs:
                    raise MachineDefinitionError(f"rule {line!r} has an empty alternative")
                parsed.append((lhs, rhs))

        nonterminals = {lhs for lhs, _ in parsed} | {start}
        terminals = {s for _, rhs in parsed for s in rhs if s not in nonterminals}
        return cls(frozenset(nonterminals), frozenset(terminals), frozenset(parsed), start, allows_empty, name)

    def producers_of_terminal(self, terminal: Any) -> FrozenSet[str]:
        return frozenset(self._unary.get(terminal, ()))

    def producers_of_pair(self, left: Iterable[str], right: Iterable[str]) -> FrozenSet[str]:
        """Nonterminals A with a rule A -> B C, B in left, C in right"""
        right = set(right)
        found: Set[str] = set()
        for b in left:
            for c in right:
                found |= self._binary.get((b, c), set())
        return frozenset(found)

    def rule_lines(self) -> List[str]:
        """Rules grouped by left side, in the 'A -> B C | a' text form"""
        grouped = defaultdict(list)
        for lhs, rhs in sorted(self.rules):
            grouped[lhs].append(" ".join(rhs))
        return [f"{lhs} -> {' | '.join(alts)}" for lhs, alts in grouped.items()]

    def __repr__(self):
        return f"<CnfGrammar(name={self.name}, rules={len(self.rules)}, start={self.start})>"


def cyk_table(grammar: CnfGrammar, input: Sequence) -> Dict[Tuple[int, int], FrozenSet[str]]:
    """Nonterminals deriving each span input[i:j], keyed by (i, j)"""
    n = len(input)
    table: Dict[Tuple[int, int], FrozenSet[str]] = {}
    for i, symbol in enumerate(input):
        table[(i, i + 1)] = grammar.producers_of_terminal(symbol)
    for length in range(2, n + 1):
        for i in range(n - length + 1):
            j = i + length
            cell: Set[str] = set()
            for k in range(i + 1, j):
                cell |= grammar.producers_of_pair(table[(i, k)], table[(k, j)])
            table[(i, j)] = frozenset(cell)
    return table


def cyk_member(grammar: CnfGrammar, input: Sequence) -> Tuple[bool, int]:
    """Membership plus the number of distinct parse trees.

    Returns:
        (member, derivation_count) with exact integer counts
    """
    n = len(input)
    if n == 0:
        return (grammar.allows_empty, 1 if grammar.allows_empty else 0)

    counts: Dict[Tuple[int, int], Dict[str, int]] = {}
    for i, symbol in enumerate(input):
        counts[(i, i + 1)] = {a: 1 for a in grammar.producers_of_terminal(symbol)}

    for length in range(2, n + 1):
        for i in range(n - length + 1):
            j = i + length
            cell: Dict[str, int] = defaultdict(int)
            for k in range(i + 1, j):
                left, right = counts[(i, k)], counts[(k, j)]
                for (b, c), heads in grammar._binary.items():
                    if b in left and c in right:
                        ways = left[b] * right[c]
                        for a in heads:
                            cell[a] += ways
            counts[(i, j)] = dict(cell)

    total = counts[(0, n)].get(grammar.start, 0)
    return (total > 0, total)
