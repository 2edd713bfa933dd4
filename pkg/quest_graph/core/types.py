"""
Core Types
Marks, node snapshots, local contexts, actions and run records
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, ClassVar, List, Optional, Tuple


@dataclass(frozen=True)
class Mark:
    """Reserved response value that can never collide with construction payloads"""

    symbol: str

    def __repr__(self) -> str:
        return self.symbol

    __str__ = __repr__


EPSILON = Mark("ε")      # incomplete node
PARENT = Mark("π")       # node with an in-progress child
TERMINAL = Mark("φ")     # accepting shutdown sweep
REJECT = Mark("✗")       # rejecting shutdown sweep
BOTTOM = Mark("⊥")       # stack emptied at the root
END = Mark("⊣")          # input provider read past the end

HALT_MARKS = (TERMINAL, REJECT)


def is_complete(response: Any) -> bool:
    """A response is complete once it is neither ε nor the parent mark"""
    return response != EPSILON and response != PARENT


@dataclass(frozen=True)
class NodeView:
    """Immutable snapshot of one node, as shown to an agent"""

    id: int
    goal: Any
    response: Any

    @property
    def payload(self) -> Tuple[Any, Any]:
        return (self.goal, self.response)


@dataclass(frozen=True)
class LocalContext:
    """Focus snapshot plus up to C neighbor snapshots, in selector order"""

    focus: NodeView
    neighbors: Tuple[NodeView, ...] = ()

    @property
    def members(self) -> Tuple[int, ...]:
        return (self.focus.id,) + tuple(n.id for n in self.neighbors)

    def neighbor(self, node_id: int) -> Optional[NodeView]:
        for view in self.neighbors:
            if view.id == node_id:
                return view
        return None

    def digest(self) -> Tuple:
        """Context payload without node ids"""
        return (self.focus.payload, tuple(n.payload for n in self.neighbors))


class AgentAction:
    """Base class of every action an agent may emit"""

    kind: ClassVar[str] = "action"


@dataclass(frozen=True)
class Discover(AgentAction):
    """Create a node and attach it to context members (the focus included)"""

    goal: Any
    response: Any = EPSILON
    attach: Tuple[int, ...] = ()

    kind: ClassVar[str] = "discover"


@dataclass(frozen=True)
class RespondMove(AgentAction):
    """Overwrite the focus response, then move the focus (self-loop allowed)"""

    response: Any
    move_to: int

    kind: ClassVar[str] = "respond_move"


@dataclass(frozen=True)
class Stop(AgentAction):
    kind: ClassVar[str] = "stop"


@dataclass(frozen=True)
class StepOutcome:
    halted: bool = False
    created: Optional[int] = None


class HaltReason(str, Enum):
    STOPPED = "stopped"
    BUDGET = "budget_exhausted"
    ILLEGAL = "illegal_action"


@dataclass(frozen=True)
class TraceEvent:
    """One applied step of a run

    Args:
        step: Zero-based step index
        focus: Focus id when the action was chosen
        digest: Context digest the agent saw
        action: Action applied
        created: Id of the node created by the step, if any
    """

    step: int
    focus: int
    digest: Tuple
    action: AgentAction
    created: Optional[int] = None


@dataclass
class RunResult:
    """Outcome of a budgeted run"""

    reason: HaltReason
    graph: Any
    trace: List[TraceEvent] = field(default_factory=list)
    counts: Counter = field(default_factory=Counter)
    steps: int = 0
    diagnostic: Optional[str] = None
    violation: Optional[str] = None

    @property
    def stopped(self) -> bool:
        return self.reason == HaltReason.STOPPED

    @property
    def exhausted(self) -> bool:
        return self.reason == HaltReason.BUDGET

    def __repr__(self):
        return (f"<RunResult(reason={self.reason.value}, steps={self.steps}, "
                f"nodes={len(self.graph)})>")
