"""
Special open sets.

An open set U is special when it is connected and every connected component
of its complement contains a point with at least two tangent directions
pointing into U.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Tuple

import networkx as nx

from src.errors import MalformedOpenSet
from src.graph_core import ClosedSubgraph, MetricGraph, Point

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class OpenSetDescription:
    """The open set closure minus boundary."""
    closure: ClosedSubgraph
    boundary: Tuple[Point, ...]


def _cut_points(graph: MetricGraph, u: OpenSetDescription) -> dict:
    cuts = {e.id: {Fraction(0), e.length} for e in graph.edges}
    for edge_id, spans in u.closure.intervals.items():
        for a, b in spans:
            cuts[edge_id].update((a, b))
    for point in u.boundary:
        if point.vertex is None:
            cuts[point.edge].add(point.offset)
    return cuts


def _incidence_graph(graph: MetricGraph, u: OpenSetDescription) -> Tuple[nx.MultiGraph, set]:
    """Points and segments of the cut graph as nodes; the set of nodes inside U."""
    boundary = {graph.canonical(p) for p in u.boundary}
    view = nx.MultiGraph()
    view.add_nodes_from(Point(vertex=v) for v in graph.vertices)
    inside = set()
    for edge_id, offsets in _cut_points(graph, u).items():
        offsets = sorted(offsets)
        for a, b in zip(offsets, offsets[1:]):
            segment = ("segment", edge_id, a)
            ends = (graph.point(edge_id, a), graph.point(edge_id, b))
            view.add_node(segment)
            for end in ends:
                view.add_edge(segment, end)
            if u.closure.contains(graph.point(edge_id, (a + b) / 2)):
                inside.add(segment)
    for point in list(view.nodes):
        if isinstance(point, Point) and u.closure.contains(point) and point not in boundary:
            inside.add(point)
    return view, inside


def is_special_open(graph: MetricGraph, u: OpenSetDescription) -> bool:
    for point in u.boundary:
        if not u.closure.contains(graph.canonical(point)):
            raise MalformedOpenSet(f"Boundary point {point} is not in the closure")

    view, inside = _incidence_graph(graph, u)
    if not inside:
        raise MalformedOpenSet("The open set is empty")
    for node in view.nodes:
        if isinstance(node, tuple) and node not in inside:
            stray = [end for end in view.neighbors(node) if end in inside]
            if stray:
                raise MalformedOpenSet(f"{stray[0]} is interior but touches the complement; add it to the boundary")

    if not nx.is_connected(view.subgraph(inside)):
        logger.debug("[is_special_open] interior is disconnected")
        return False

    outside = set(view.nodes) - inside
    for component in nx.connected_components(view.subgraph(outside)):
        points = [node for node in component if isinstance(node, Point)]
        if not any(_degree_into(view, p, inside) >= 2 for p in points):
            logger.debug("[is_special_open] complement component at %s has no point of out-degree 2",
                         min(points) if points else "?")
            return False
    return True


def _degree_into(view: nx.MultiGraph, point: Point, inside: set) -> int:
    """Segment ends at point that lie in U; a segment looping back counts twice."""
    return sum(1 for _, other in view.edges(point) if other in inside)
