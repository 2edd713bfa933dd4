"""
Quest Tree Module
Parent/child bookkeeping, tree-shaped local contexts and pre-built trees
"""

import logging
from collections import deque
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

import networkx as nx

from ..core.graph import QuestGraph, new_graph
from ..core.types import EPSILON, NodeView, is_complete
from ..utils.errors import GraphBuildError

logger = logging.getLogger(__name__)


class QuestTree:
    """Parent pointers and ordered children of a tree-shaped quest graph"""

    def __init__(self, root: int = 0):
        self.root = root
        self.parent: Dict[int, Optional[int]] = {root: None}
        self.children: Dict[int, List[int]] = {root: []}
        self.complete: Dict[int, bool] = {root: False}

    def add_child(self, parent: int, child: int, complete: bool = False):
        self.parent[child] = parent
        self.children[parent].append(child)
        self.children[child] = []
        self.complete[child] = complete

    def incomplete_children(self, node_id: int) -> List[int]:
        return [c for c in self.children[node_id] if not self.complete[c]]

    def is_root(self, node_id: int) -> bool:
        return node_id == self.root

    def path_to_root(self, node_id: int) -> List[int]:
        path = [node_id]
        while self.parent[path[-1]] is not None:
            path.append(self.parent[path[-1]])
        return path

    def depth(self, node_id: int) -> int:
        return len(self.path_to_root(node_id)) - 1

    def copy(self) -> 'QuestTree':
        clone = QuestTree(self.root)
        clone.parent = dict(self.parent)
        clone.children = {k: list(v) for k, v in self.children.items()}
        clone.complete = dict(self.complete)
        return clone

    @classmethod
    def from_graph(cls, graph: QuestGraph, root: int = 0) -> 'QuestTree':
        """Derive the tree view by walking out from the root.

        Raises:
            GraphBuildError: the graph is not a tree
        """
        if len(graph.edges) != len(graph) - 1:
            raise GraphBuildError(f"{len(graph)} nodes with {len(graph.edges)} edges is not a tree")
        tree = cls(root)
        tree.complete[root] = is_complete(graph.nodes[root].response)
        frontier = deque([root])
        while frontier:
            node = frontier.popleft()
            for neighbor in graph.neighbors(node):
                if neighbor == tree.parent[node]:
                    continue
                if neighbor in tree.parent:
                    raise GraphBuildError(f"node {neighbor} is reachable along two paths")
                tree.add_child(node, neighbor, is_complete(graph.nodes[neighbor].response))
                frontier.append(neighbor)
        if len(tree.parent) != len(graph):
            raise GraphBuildError("quest tree is not connected")
        return tree


@dataclass(frozen=True)
class TreeContext:
    """Focus, its parent and its most recent children"""

    focus: NodeView
    parent: Optional[NodeView] = None
    children: Tuple[NodeView, ...] = ()

    @property
    def is_root(self) -> bool:
        return self.parent is None

    @property
    def last_child(self) -> Optional[NodeView]:
        return self.children[-1] if self.children else None

    @property
    def members(self) -> Tuple[int, ...]:
        ids = (self.focus.id,) + tuple(c.id for c in self.children)
        return ids + ((self.parent.id,) if self.parent is not None else ())

    def incomplete_children(self) -> List[NodeView]:
        return [c for c in self.children if not is_complete(c.response)]

    def digest(self) -> Tuple:
        """Context payload without node ids"""
        return (
            self.focus.payload,
            self.parent.payload if self.parent is not None else None,
            tuple(c.payload for c in self.children),
        )

    @classmethod
    def from_digest(cls, digest: Tuple) -> 'TreeContext':
        """Rebuild a context from its digest, numbering nodes locally"""
        focus, parent, children = digest
        return cls(
            focus=NodeView(0, *focus),
            parent=NodeView(-1, *parent) if parent is not None else None,
            children=tuple(NodeView(i + 1, *c) for i, c in enumerate(children)),
        )


@dataclass(frozen=True)
class TreeNodeSpec:
    """One node of a pre-built tree description"""

    goal: Any
    response: Any = EPSILON


def prebuild(nodes: Sequence[TreeNodeSpec], links: Sequence[Tuple[int, int]],
             focus: int = 0) -> QuestGraph:
    """Instantiate a pre-built quest tree.

    Args:
        nodes: Node specs; ids follow list order
        links: (parent, child) index pairs
        focus: Initial focus index

    Returns:
        Graph whose node 0 is the tree root
    """
    if not nodes:
        raise GraphBuildError("a pre-built tree needs at least one node")

    described = nx.DiGraph()
    described.add_nodes_from(range(len(nodes)))
    for parent, child in links:
        if not (0 <= parent < len(nodes) and 0 <= child < len(nodes)):
            raise GraphBuildError(f"link ({parent}, {child}) references a missing node")
        described.add_edge(parent, child)

    for node, in_degree in described.in_degree():
        if in_degree > 1:
            raise GraphBuildError(f"node {node} has {in_degree} parents")
    if not nx.is_directed_acyclic_graph(described):
        cycle = nx.find_cycle(described)
        raise GraphBuildError(f"tree description contains a cycle through {cycle[0][0]}")
    roots = [n for n, d in described.in_degree() if d == 0]
    if roots != [0]:
        raise GraphBuildError(f"tree description must be rooted at node 0, found roots {roots}")

    graph = new_graph([(spec.goal, spec.response) for spec in nodes], links, focus)
    logger.debug(f"Pre-built tree with {len(graph)} nodes")
    return graph
