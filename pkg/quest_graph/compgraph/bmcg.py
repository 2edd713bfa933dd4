"""
BMCG Module
Bounded computation graphs: proxy trees keep every in-degree at or below C
"""

import logging
from collections import deque
from dataclasses import dataclass, field
from typing import Callable, Dict, FrozenSet, List, Optional, Sequence, Tuple

from .dag import Dag
from .mcg import Mcg

logger = logging.getLogger(__name__)

ORIGINAL = "original"
PROXY = "proxy"
TERMINAL = "terminal"


def proxy_count(d: int, c: int) -> int:
    """Proxy nodes needed to bring in-degree d down to at most c"""
    if c < 2:
        raise ValueError(f"the in-degree bound must be at least 2, got {c}")
    if d < 2:
        return 0
    return (d - 2) // (c - 1)


def total_proxy_count(n: int, c: int) -> Tuple[int, int]:
    """Proxies added to an n-node MCG, as (closed form, brute-force sum)"""
    if n < 1:
        raise ValueError(f"node count must be positive, got {n}")
    if c < 2:
        raise ValueError(f"the in-degree bound must be at least 2, got {c}")
    k = max(0, (n - 3) // (c - 1))
    closed = k * (n - 2) - (c - 1) * k * (k + 1) // 2
    brute = sum(proxy_count(d, c) for d in range(n))
    return closed, brute


@dataclass
class Bmcg:
    """Computation graph with bounded in-degree.

    Args:
        order: Execution order; each node's proxies come right before it
        kinds: Label -> original, proxy or terminal
        deps: Label -> direct dependencies after decomposition
        bound: In-degree bound C
    """

    order: List[str]
    kinds: Dict[str, str]
    deps: Dict[str, List[str]]
    bound: int
    _position: Dict[str, int] = field(default_factory=dict, init=False, repr=False)

    def __post_init__(self):
        self._position = {label: i for i, label in enumerate(self.order)}

    def __len__(self) -> int:
        return len(self.order)

    def dependencies(self, label: str) -> List[str]:
        return list(self.deps[label])

    def position(self, label: str) -> int:
        return self._position[label]

    def in_degree(self, label: str) -> int:
        return len(self.deps[label])

    @property
    def max_in_degree(self) -> int:
        return max((len(d) for d in self.deps.values()), default=0)

    @property
    def terminal(self) -> str:
        return self.order[-1]

    @property
    def originals(self) -> List[str]:
        return [n for n in self.order if self.kinds[n] != PROXY]

    @property
    def proxy_total(self) -> int:
        return sum(1 for kind in self.kinds.values() if kind == PROXY)

    def edges(self) -> List[Tuple[str, str]]:
        return [(source, target) for target in self.order for source in self.deps[target]]

    @property
    def edge_count(self) -> int:
        return sum(len(d) for d in self.deps.values())

    def contract(self) -> Dict[str, FrozenSet[str]]:
        """Dependency sets of the non-proxy nodes with every proxy tree collapsed"""
        expanded: Dict[str, FrozenSet[str]] = {}

        def leaves(label: str) -> FrozenSet[str]:
            if label not in expanded:
                found = set()
                for dep in self.deps[label]:
                    if self.kinds[dep] == PROXY:
                        found |= leaves(dep)
                    else:
                        found.add(dep)
                expanded[label] = frozenset(found)
            return expanded[label]

        for label in self.order:
            leaves(label)
        return {label: expanded[label] for label in self.order if self.kinds[label] != PROXY}

    def stats(self) -> Dict[str, int]:
        return {
            "nodes": len(self.order),
            "edges": self.edge_count,
            "originals": len(self.originals),
            "proxies": self.proxy_total,
            "max_in_degree": self.max_in_degree,
            "bound": self.bound,
        }

    def to_edge_list(self) -> List[str]:
        isolated = [n for n in self.order if not self.deps[n] and
                    not any(n in d for d in self.deps.values())]
        return isolated + [f"{s} {t}" for s, t in self.edges()]

    def __repr__(self):
        return f"<Bmcg(nodes={len(self.order)}, proxies={self.proxy_total}, bound={self.bound})>"


def _decompose(order: Sequence[str], deps_of: Callable[[str], List[str]], c: int,
               kind_of: Callable[[str], str]) -> Bmcg:
    """Replace every over-full dependency list by a tree of proxies.

    Dependencies wait in a FIFO queue; while more than c remain, the first
    c are grouped under a new proxy that joins the back of the queue.
    """
    if c < 2:
        raise ValueError(f"the in-degree bound must be at least 2, got {c}")

    result_order: List[str] = []
    kinds: Dict[str, str] = {}
    deps: Dict[str, List[str]] = {}
    for label in order:
        queue = deque(deps_of(label))
        serial = 0
        while len(queue) > c:
            proxy = f"{label}#p{serial}"
            serial += 1
            deps[proxy] = [queue.popleft() for _ in range(c)]
            kinds[proxy] = PROXY
            result_order.append(proxy)
            queue.append(proxy)
        deps[label] = list(queue)
        kinds[label] = kind_of(label)
        result_order.append(label)

    return Bmcg(result_order, kinds, deps, c)


def bmcg_from_mcg(mcg: Mcg, c: int) -> Bmcg:
    added = mcg.terminal if mcg.added_terminal else None
    bmcg = _decompose(mcg.order, mcg.dependencies, c,
                      lambda label: TERMINAL if label == added else ORIGINAL)
    logger.debug(f"BMCG of {len(mcg)} MCG nodes with C={c}: {bmcg.proxy_total} proxies")
    return bmcg


def bmcg_from_dag(dag: Dag, c: int) -> Bmcg:
    """Decompose the DAG's own in-degrees without passing through an MCG"""
    bmcg = _decompose(dag.topological_order(), dag.predecessors, c, lambda label: ORIGINAL)
    logger.debug(f"BMCG of a {len(dag)}-node DAG with C={c}: {bmcg.proxy_total} proxies")
    return bmcg


def validate_bmcg(bmcg: Bmcg, mcg: Optional[Mcg], c: int) -> List[str]:
    """List violations of the bound, the contraction law and the node count"""
    diagnostics = []
    for label in bmcg.order:
        if bmcg.in_degree(label) > c:
            diagnostics.append(f"node {label} has in-degree {bmcg.in_degree(label)} > {c}")

    if mcg is not None:
        contracted = bmcg.contract()
        expected = mcg.dependency_map()
        if set(contracted) != set(expected):
            diagnostics.append("contracted node set differs from the MCG")
        else:
            for label, dependencies in expected.items():
                if contracted[label] != dependencies:
                    diagnostics.append(f"node {label} depends on {len(contracted[label])} nodes after "
                                       f"contraction, expected {len(dependencies)}")

        _, proxies = total_proxy_count(len(mcg), c)
        if len(bmcg) != len(mcg) + proxies:
            diagnostics.append(f"{len(bmcg)} nodes, expected {len(mcg)} + {proxies}")

    if diagnostics:
        logger.warning(f"BMCG validation found {len(diagnostics)} problems")
    return diagnostics
