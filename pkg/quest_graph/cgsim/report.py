"""
Simulation Reports
Operation counters and per-run records of the computation graph simulators
"""

import math
from dataclasses import asdict, dataclass, field
from typing import Any, Dict


@dataclass
class OpCounter:
    """Agent actions of one simulation.

    Retrieves are also weighted by log2 of the number of active
    references at the time of the lookup; every other action costs 1.
    """

    discover: int = 0
    respond_move: int = 0
    complete: int = 0
    retrieve: int = 0
    stop: int = 0
    retrieve_weight: float = 0.0

    def add_retrieve(self, active_references: int):
        self.retrieve += 1
        self.retrieve_weight += math.log2(max(2, active_references))

    @property
    def raw_ops(self) -> int:
        return self.discover + self.respond_move + self.complete + self.retrieve + self.stop

    @property
    def weighted_cost(self) -> float:
        return self.discover + self.respond_move + self.complete + self.stop + self.retrieve_weight

    def as_dict(self) -> Dict[str, Any]:
        values = asdict(self)
        values.update(raw_ops=self.raw_ops, weighted_cost=self.weighted_cost)
        return values


@dataclass
class SimReport:
    """One simulator run on an N-node computation graph"""

    variant: str
    n: int
    c: int
    counter: OpCounter
    halted: bool
    wall_ms: float = 0.0
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def raw_ops(self) -> int:
        return self.counter.raw_ops

    @property
    def weighted_cost(self) -> float:
        return self.counter.weighted_cost

    def csv_row(self) -> Dict[str, Any]:
        return {
            "variant": self.variant,
            "N": self.n,
            "C": self.c,
            "raw_ops": self.raw_ops,
            "weighted_cost": round(self.weighted_cost, 3),
            "wall_ms": round(self.wall_ms, 3),
        }

    def __repr__(self):
        return (f"<SimReport(variant={self.variant}, N={self.n}, C={self.c}, "
                f"raw_ops={self.raw_ops}, halted={self.halted})>")


CSV_FIELDS = ["variant", "N", "C", "raw_ops", "weighted_cost", "wall_ms"]
