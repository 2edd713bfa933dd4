"""
Quest Graph Store
Node and edge storage with a focus pointer and a step clock
"""

import logging
from dataclasses import dataclass
from typing import Any, Dict, FrozenSet, Iterable, List, Sequence, Set, Tuple

from .types import EPSILON, NodeView
from ..utils.errors import GraphBuildError

logger = logging.getLogger(__name__)


@dataclass
class QuestNode:
    """A (goal, response) node; the goal never changes after creation"""

    id: int
    goal: Any
    response: Any = EPSILON
    created_at: int = 0
    updated_at: int = 0

    def __repr__(self):
        return f"<QuestNode(id={self.id}, goal={self.goal!r}, response={self.response!r})>"


class QuestGraph:
    """Undirected graph of quest nodes with a focus node.

    Node ids are dense integers in creation order. Adjacency lists keep
    edge-creation order, which the default observation policy relies on.
    """

    def __init__(self):
        self.nodes: Dict[int, QuestNode] = {}
        self._adjacency: Dict[int, List[int]] = {}
        self.focus: int = 0
        self.clock: int = 0
        self.truncations: int = 0

    def __len__(self) -> int:
        return len(self.nodes)

    def __contains__(self, node_id: int) -> bool:
        return node_id in self.nodes

    @property
    def edges(self) -> Set[FrozenSet[int]]:
        return {frozenset((a, b)) for a, adjacent in self._adjacency.items()
                for b in adjacent if a < b}

    def add_node(self, goal: Any, response: Any = EPSILON) -> int:
        node_id = len(self.nodes)
        self.nodes[node_id] = QuestNode(node_id, goal, response, self.clock, self.clock)
        self._adjacency[node_id] = []
        return node_id

    def add_edge(self, a: int, b: int) -> bool:
        """Connect two nodes.

        Returns:
            False when the edge already existed
        """
        if a not in self.nodes or b not in self.nodes:
            raise GraphBuildError(f"edge ({a}, {b}) references a missing node")
        if a == b:
            raise GraphBuildError(f"self-edge on node {a} cannot be stored")
        if b in self._adjacency[a]:
            return False
        self._adjacency[a].append(b)
        self._adjacency[b].append(a)
        return True

    def neighbors(self, node_id: int) -> List[int]:
        return list(self._adjacency[node_id])

    def degree(self, node_id: int) -> int:
        return len(self._adjacency[node_id])

    def tick(self) -> int:
        self.clock += 1
        return self.clock

    def set_response(self, node_id: int, response: Any):
        node = self.nodes[node_id]
        node.response = response
        node.updated_at = self.clock

    def move_focus(self, node_id: int):
        if node_id not in self.nodes:
            raise GraphBuildError(f"focus target {node_id} does not exist")
        self.focus = node_id

    def view(self, node_id: int) -> NodeView:
        node = self.nodes[node_id]
        return NodeView(node.id, node.goal, node.response)

    def copy(self) -> 'QuestGraph':
        clone = QuestGraph()
        clone.nodes = {i: QuestNode(n.id, n.goal, n.response, n.created_at, n.updated_at)
                       for i, n in self.nodes.items()}
        clone._adjacency = {i: list(adj) for i, adj in self._adjacency.items()}
        clone.focus = self.focus
        clone.clock = self.clock
        clone.truncations = self.truncations
        return clone

    def snapshot(self) -> Tuple:
        """Comparable value covering nodes, edges, focus and clock"""
        nodes = tuple((n.id, n.goal, n.response, n.created_at, n.updated_at)
                      for n in self.nodes.values())
        edges = tuple(sorted(tuple(sorted(e)) for e in self.edges))
        return (nodes, edges, self.focus, self.clock)

    def __repr__(self):
        return f"<QuestGraph(nodes={len(self.nodes)}, edges={len(self.edges)}, focus={self.focus})>"


def new_graph(seed_nodes: Sequence[Tuple[Any, Any]],
              seed_edges: Iterable[Tuple[int, int]] = (),
              focus_index: int = 0) -> QuestGraph:
    """Build an initial configuration.

    Args:
        seed_nodes: (goal, response) pairs; ids follow list order
        seed_edges: Index pairs into seed_nodes
        focus_index: Index of the initial focus node

    Returns:
        Graph with clock 0
    """
    if not seed_nodes:
        raise GraphBuildError("a quest graph needs at least one node to focus on")
    if not 0 <= focus_index < len(seed_nodes):
        raise GraphBuildError(f"focus index {focus_index} out of range for {len(seed_nodes)} nodes")

    graph = QuestGraph()
    for goal, response in seed_nodes:
        graph.add_node(goal, response)
    for a, b in seed_edges:
        if not (0 <= a < len(seed_nodes) and 0 <= b < len(seed_nodes)):
            raise GraphBuildError(f"dangling seed edge ({a}, {b})")
        graph.add_edge(a, b)
    graph.focus = focus_index
    logger.debug(f"Seeded graph with {len(graph)} nodes, focus {focus_index}")
    return graph
