"""
Conformance Module
Verdict record shared by every construction-versus-oracle comparison
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Optional

from ..core.types import RunResult

ACCEPT = "accept"
REJECT = "reject"
BUDGET = "budget"
ILLEGAL = "illegal"


@dataclass
class ConformanceResult:
    """Outcome of one construction run next to its oracle.

    Args:
        construction: Construction name (tm-qg, dpda-fqdp, ...)
        status: accept, reject, budget or illegal
        oracle_status: accept, reject or budget
        agree: Statuses match and, where the construction has one, outputs match
        steps: Agent actions taken
        output: Construction read-off (tape, verdict, final state)
        oracle_output: Oracle read-off in the same shape
        run: Underlying rollout, when there is one
        details: Construction-specific diagnostics
    """

    construction: str
    status: str
    oracle_status: str
    agree: bool
    steps: int = 0
    output: Any = None
    oracle_output: Any = None
    run: Optional[RunResult] = None
    details: Dict[str, Any] = field(default_factory=dict)

    @property
    def accepted(self) -> bool:
        return self.status == ACCEPT

    @property
    def oracle_accepted(self) -> bool:
        return self.oracle_status == ACCEPT

    def verdict_line(self) -> str:
        return f"{self.status} / oracle: {self.oracle_status} / {'AGREE' if self.agree else 'DISAGREE'}"

    def __repr__(self):
        return (f"<ConformanceResult(construction={self.construction}, status={self.status}, "
                f"oracle={self.oracle_status}, agree={self.agree})>")
