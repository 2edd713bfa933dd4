"""
DAG Module
Dependency graphs of abstract operations and their edge-list file format
"""

import logging
from pathlib import Path
from typing import Iterable, List, Optional, Tuple, Union

import networkx as nx

from ..utils.errors import CycleError, MachineFileError

logger = logging.getLogger(__name__)


class Dag:
    """Directed acyclic dependency graph.

    An edge (u, v) means v can only be computed after u. Nodes keep their
    insertion order, which every later tie-break relies on.
    """

    def __init__(self):
        self.graph = nx.DiGraph()

    def add_node(self, label: str):
        self.graph.add_node(str(label))

    def add_edge(self, source: str, target: str):
        self.graph.add_edge(str(source), str(target))

    @property
    def nodes(self) -> List[str]:
        return list(self.graph.nodes)

    @property
    def edges(self) -> List[Tuple[str, str]]:
        return list(self.graph.edges)

    def __len__(self) -> int:
        return self.graph.number_of_nodes()

    def index(self, label: str) -> int:
        return self.nodes.index(label)

    def predecessors(self, label: str) -> List[str]:
        """Dependencies of a node, in insertion order"""
        position = {n: i for i, n in enumerate(self.graph.nodes)}
        return sorted(self.graph.predecessors(label), key=position.__getitem__)

    def terminals(self) -> List[str]:
        return [n for n in self.graph.nodes if self.graph.out_degree(n) == 0]

    def in_degree(self, label: str) -> int:
        return self.graph.in_degree(label)

    def validate(self):
        """Raises CycleError with one back edge when the graph has a cycle"""
        try:
            cycle = nx.find_cycle(self.graph)
        except nx.NetworkXNoCycle:
            return
        source, target = cycle[-1][:2]
        raise CycleError((source, target))

    def topological_order(self) -> List[str]:
        """Dependencies first; ties broken by insertion order"""
        self.validate()
        position = {n: i for i, n in enumerate(self.graph.nodes)}
        return list(nx.lexicographical_topological_sort(self.graph, key=position.__getitem__))

    @classmethod
    def from_edges(cls, edges: Iterable[Tuple[str, str]], nodes: Iterable[str] = ()) -> 'Dag':
        dag = cls()
        for label in nodes:
            dag.add_node(label)
        for source, target in edges:
            dag.add_edge(source, target)
        dag.validate()
        return dag

    @classmethod
    def chain(cls, n: int) -> 'Dag':
        """n0 -> n1 -> ... -> n{n-1}"""
        if n < 1:
            raise ValueError(f"a chain needs at least one node, got {n}")
        dag = cls()
        dag.add_node("n0")
        for i in range(1, n):
            dag.add_edge(f"n{i - 1}", f"n{i}")
        return dag

    @classmethod
    def from_edge_list(cls, source: Union[str, Path, Iterable[str]],
                       path: Optional[str] = None) -> 'Dag':
        """Parse `source target` lines; a lone label declares an isolated node.

        Args:
            source: File path, or an iterable of lines
            path: Name used in error messages when lines are passed directly

        Raises:
            MachineFileError: malformed line
            CycleError: the edges close a cycle
        """
        if isinstance(source, (str, Path)):
            path = str(source)
            try:
                lines = Path(source).read_text(encoding="utf-8").splitlines()
            except OSError as e:
                raise MachineFileError(f"cannot read edge list: {e}", path=path)
        else:
            lines = list(source)

        dag = cls()
        for number, raw in enumerate(lines, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) == 1:
                dag.add_node(fields[0])
            elif len(fields) == 2:
                if fields[0] == fields[1]:
                    raise CycleError((fields[0], fields[1]))
                dag.add_edge(fields[0], fields[1])
            else:
                raise MachineFileError(f"expected 'source target', got {len(fields)} fields", path=path, line=number)

        dag.validate()
        logger.debug(f"Read DAG with {len(dag)} nodes and {len(dag.edges)} edges from {path or 'lines'}")
        return dag

    def to_edge_list(self) -> List[str]:
        isolated = [n for n in self.graph.nodes if self.graph.degree(n) == 0]
        return isolated + [f"{s} {t}" for s, t in self.graph.edges]

    def __repr__(self):
        return f"<Dag(nodes={len(self)}, edges={self.graph.number_of_edges()})>"
