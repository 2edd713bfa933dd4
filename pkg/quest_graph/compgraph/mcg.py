"""
MCG Module
Maximal computation graphs: a total execution order where every node depends on all earlier ones
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterator, List, Tuple

import networkx as nx

from .dag import Dag

logger = logging.getLogger(__name__)

UNIFIED_TERMINAL = "terminal"


@dataclass
class Mcg:
    """Execution order of a maximal computation graph.

    Args:
        order: Node labels, dependencies first, terminal last
        added_terminal: True when a unified terminal was created
        levels: Distance of each node to the terminal
    """

    order: List[str]
    added_terminal: bool = False
    levels: Dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        self._position = {label: i for i, label in enumerate(self.order)}

    def __len__(self) -> int:
        return len(self.order)

    @property
    def terminal(self) -> str:
        return self.order[-1]

    def position(self, label: str) -> int:
        return self._position[label]

    def dependencies(self, label: str) -> List[str]:
        return self.order[:self._position[label]]

    def in_degree(self, label: str) -> int:
        return self._position[label]

    def edges(self) -> Iterator[Tuple[str, str]]:
        for i, target in enumerate(self.order):
            for source in self.order[:i]:
                yield source, target

    @property
    def edge_count(self) -> int:
        n = len(self.order)
        return n * (n - 1) // 2

    def dependency_map(self) -> Dict[str, FrozenSet[str]]:
        return {label: frozenset(self.order[:i]) for i, label in enumerate(self.order)}

    def preserves(self, dag: Dag) -> bool:
        """Every DAG edge runs forward in the execution order"""
        return all(self._position[s] < self._position[t] for s, t in dag.edges)

    @classmethod
    def of_size(cls, n: int) -> 'Mcg':
        """MCG of an n-node chain, the benchmark's standard instance"""
        return mcg_from_dag(Dag.chain(n))

    def __repr__(self):
        return f"<Mcg(nodes={len(self.order)}, edges={self.edge_count}, added_terminal={self.added_terminal})>"


def mcg_from_dag(dag: Dag) -> Mcg:
    """Order a DAG totally so that every original edge still runs forward.

    Several sinks are first joined under one new terminal. Each node's
    level is its longest distance to the terminal; the execution order
    sorts by descending level, then by insertion order.

    Raises:
        CycleError: the DAG has a cycle
    """
    dag.validate()
    if len(dag) == 0:
        raise ValueError("cannot order an empty DAG")

    graph = dag.graph.copy()
    sinks = [n for n in graph.nodes if graph.out_degree(n) == 0]
    added = len(sinks) > 1
    terminal = sinks[0]
    if added:
        terminal = UNIFIED_TERMINAL
        while terminal in graph:
            terminal += "'"
        graph.add_node(terminal)
        for sink in sinks:
            graph.add_edge(sink, terminal)

    levels: Dict[str, int] = {}
    for node in reversed(list(nx.topological_sort(graph))):
        successors = list(graph.successors(node))
        levels[node] = max(levels[s] + 1 for s in successors) if successors else 0

    insertion = {n: i for i, n in enumerate(graph.nodes)}
    order = sorted(graph.nodes, key=lambda n: (-levels[n], insertion[n]))
    logger.debug(f"MCG of {len(dag)} nodes: terminal {terminal!r}, added={added}")
    return Mcg(order, added, levels)
