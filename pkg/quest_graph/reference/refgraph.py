"""
Reference Graph Module
Latest-response store keyed by reference, with full write history
"""

import bisect
import logging
from dataclasses import dataclass
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

from ..core.types import EPSILON
from ..utils.errors import NonMonotonicTimeError

logger = logging.getLogger(__name__)

TauFn = Callable[[Hashable, Any], Hashable]


@dataclass(frozen=True)
class RefEntry:
    response: Any
    timestamp: int


@dataclass(frozen=True)
class RefWrite:
    reference: Hashable
    response: Any
    timestamp: int


class ReferenceGraph:
    """Reference store with ordered keys.

    Keys are kept sorted so a lookup costs one binary search. Only explicit
    writes create retrievable entries; registering a reference does not.
    """

    def __init__(self):
        self._keys: List[Hashable] = []
        self._entries: Dict[Hashable, RefEntry] = {}
        self._history: List[RefWrite] = []
        self.known: set = set()
        self.head: Optional[Hashable] = None
        self.last_time: Optional[int] = None

    def __len__(self) -> int:
        return len(self._entries)

    def __contains__(self, reference: Hashable) -> bool:
        return self._find(reference)

    @property
    def active(self) -> int:
        """Number of references holding a written response"""
        return len(self._entries)

    def register(self, reference: Hashable):
        self.known.add(reference)

    def record(self, reference: Hashable, response: Any, time: int):
        if self.last_time is not None and time <= self.last_time:
            raise NonMonotonicTimeError(
                f"write at time {time} to reference {reference!r} is not after {self.last_time}")
        if not self._find(reference):
            bisect.insort(self._keys, reference)
        self._entries[reference] = RefEntry(response, time)
        self._history.append(RefWrite(reference, response, time))
        self.known.add(reference)
        self.last_time = time

    def retrieve(self, reference: Hashable) -> Any:
        if not self._find(reference):
            return EPSILON
        return self._entries[reference].response

    def entry(self, reference: Hashable) -> Optional[RefEntry]:
        return self._entries.get(reference) if self._find(reference) else None

    def items(self) -> List[Tuple[Hashable, Any]]:
        return [(k, self._entries[k].response) for k in self._keys]

    def history(self) -> List[RefWrite]:
        return list(self._history)

    def as_of(self, time: int) -> Dict[Hashable, Any]:
        """Latest response per reference among writes at or before `time`"""
        snapshot: Dict[Hashable, Any] = {}
        for write in self._history:
            if write.timestamp > time:
                break
            snapshot[write.reference] = write.response
        return snapshot

    def _find(self, reference: Hashable) -> bool:
        i = bisect.bisect_left(self._keys, reference)
        return i < len(self._keys) and self._keys[i] == reference

    def __repr__(self):
        return f"<ReferenceGraph(references={len(self._entries)}, head={self.head!r})>"


def assign_reference(parent_ref: Hashable, goal: Any, tau: TauFn,
                     refgraph: Optional[ReferenceGraph] = None) -> Hashable:
    """Apply τ to a parent reference and a new node's goal"""
    reference = tau(parent_ref, goal)
    if refgraph is not None:
        refgraph.register(reference)
    return reference


def record_response(refgraph: ReferenceGraph, reference: Hashable, response: Any,
                    time: int) -> ReferenceGraph:
    refgraph.record(reference, response, time)
    return refgraph


def retrieve(refgraph: ReferenceGraph, reference: Hashable) -> Any:
    """Latest response written at `reference`, or ε when none was written"""
    return refgraph.retrieve(reference)
