"""
QDP Actions
Action vocabulary of the tree-shaped quest decision processes
"""

from dataclasses import dataclass
from typing import Any, ClassVar, Optional

from ..core.types import AgentAction, Stop


@dataclass(frozen=True)
class DiscoverInput(AgentAction):
    """Add a child whose response is external information.

    With `response` left as None the engine asks its input provider;
    an explicit response is stored as given.
    """

    goal: Any
    response: Optional[Any] = None

    kind: ClassVar[str] = "discover_input"


@dataclass(frozen=True)
class DiscoverSubquest(AgentAction):
    """Add an ε child; deterministic variants also mark the focus π and descend"""

    goal: Any

    kind: ClassVar[str] = "discover_subquest"


@dataclass(frozen=True)
class CompleteQuest(AgentAction):
    """Write the focus response and return to the parent (self-loop at the root)"""

    response: Any

    kind: ClassVar[str] = "complete_quest"


@dataclass(frozen=True)
class Pursue(AgentAction):
    """Mark the focus π and move to one of its incomplete children"""

    child: int

    kind: ClassVar[str] = "pursue"


@dataclass(frozen=True)
class Retrieve(AgentAction):
    """Add a child whose response is looked up in the reference graph"""

    goal: Any

    kind: ClassVar[str] = "retrieve"


__all__ = ['DiscoverInput', 'DiscoverSubquest', 'CompleteQuest', 'Pursue', 'Retrieve', 'Stop']
