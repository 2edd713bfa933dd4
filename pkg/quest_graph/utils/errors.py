"""
Errors Module
Exception hierarchy shared by every quest_graph subpackage
"""

from typing import Optional, Tuple


class QuestGraphError(Exception):
    """Base class for all quest_graph errors"""


class GraphBuildError(QuestGraphError):
    """Invalid seed description for a quest graph or a quest tree"""


class IllegalActionError(QuestGraphError):
    """An agent action broke a legality rule.

    Args:
        message: Human readable diagnostic
        rule: Short name of the violated rule
    """

    def __init__(self, message: str, rule: str = "illegal-action"):
        super().__init__(message)
        self.rule = rule


class MachineDefinitionError(QuestGraphError):
    """An automaton definition violates its structural invariants"""


class BudgetExceededError(QuestGraphError):
    """An exploration went past its declared budget"""


class NonMonotonicTimeError(QuestGraphError):
    """A reference write arrived with a timestamp that is not the newest"""


class CycleError(QuestGraphError):
    """The dependency graph is not acyclic.

    Args:
        back_edge: One (source, target) edge closing a cycle
    """

    def __init__(self, back_edge: Tuple[str, str]):
        super().__init__(f"cycle detected, back edge {back_edge[0]} -> {back_edge[1]}")
        self.back_edge = back_edge


class MachineFileError(QuestGraphError):
    """A machine definition file could not be parsed or validated.

    Args:
        message: What went wrong
        path: File being read
        field: Offending field, if known
        line: Offending line, if known
    """

    def __init__(self, message: str, path: Optional[str] = None,
                 field: Optional[str] = None, line: Optional[int] = None):
        location = []
        if path:
            location.append(str(path))
        if line is not None:
            location.append(f"line {line}")
        if field:
            location.append(f"field '{field}'")
        prefix = f"{', '.join(location)}: " if location else ""
        super().__init__(f"{prefix}{message}")
        self.path = path
        self.field = field
        self.line = line
