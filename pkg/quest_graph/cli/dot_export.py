"""
DOT Export
Graphviz rendering of a rollout: quest nodes, creation edges labeled by action, final focus marked
"""

import logging
from typing import Callable, Dict, Optional, Sequence, Tuple

from graphviz import Digraph

from ..constructions.tm_rqdp import WRITE
from ..core.graph import QuestGraph
from ..core.types import TraceEvent

logger = logging.getLogger(__name__)

EDGE_LABELS = {
    "discover": "disc",
    "discover_input": "in",
    "discover_subquest": "sub",
    "retrieve": "ret",
    "pursue": "pursue",
}

EdgeLabeler = Callable[[QuestGraph, TraceEvent], Optional[str]]


def _label(value) -> str:
    text = str(value)
    return text if len(text) <= 60 else text[:57] + "..."


def right_move_labeler(graph: QuestGraph, event: TraceEvent) -> Optional[str]:
    """'R' on the sub-quest opened under a write node of the reference-tape machine"""
    parent = graph.nodes.get(event.focus)
    if event.action.kind == "discover_subquest" and parent is not None \
            and isinstance(parent.goal, tuple) and parent.goal and parent.goal[0] == WRITE:
        return "R"
    return None


def export_trace_dot(trace: Sequence[TraceEvent], graph: QuestGraph, name: str = "rollout",
                     labeler: Optional[EdgeLabeler] = None) -> str:
    """Render a rollout as DOT text.

    Args:
        trace: Applied steps, in order
        graph: Final graph of the rollout
        name: Graph name
        labeler: Optional override of the edge label for a creation step

    Returns:
        DOT source

    Raises:
        ValueError: empty trace
    """
    if not trace:
        raise ValueError("cannot render an empty trace")

    dot = Digraph(name=name, graph_attr={"rankdir": "TB"}, node_attr={"shape": "box", "fontsize": "10"})
    for node in graph.nodes.values():
        attrs = {"style": "filled", "fillcolor": "#FFFF8080", "penwidth": "2"} if node.id == graph.focus else {}
        dot.node(str(node.id), label=f"{_label(node.goal)}\\n{_label(node.response)}", **attrs)

    created: Dict[Tuple[int, int], str] = {}
    for event in trace:
        kind = event.action.kind
        if event.created is not None:
            text = (labeler(graph, event) if labeler else None) or EDGE_LABELS.get(kind, kind)
            sources = getattr(event.action, "attach", None) or (event.focus,)
            for source in sources:
                created[(source, event.created)] = text
        elif kind == "pursue":
            created.setdefault((event.focus, event.action.child), "pursue")

    for (source, target), text in created.items():
        dot.edge(str(source), str(target), label=text)
    for edge in sorted(tuple(sorted(e)) for e in graph.edges):
        if edge not in created and edge[::-1] not in created:
            dot.edge(str(edge[0]), str(edge[1]), dir="none", style="dashed")

    logger.debug(f"DOT export of {len(trace)} steps over {len(graph)} nodes")
    return dot.source


def write_trace_dot(trace: Sequence[TraceEvent], graph: QuestGraph, path, **kwargs) -> str:
    source = export_trace_dot(trace, graph, **kwargs)
    with open(path, "w", encoding="utf-8") as f:
        f.write(source)
    logger.info(f"Trace written to {path}")
    return source
