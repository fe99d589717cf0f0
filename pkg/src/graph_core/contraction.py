import logging
from dataclasses import dataclass
from typing import Tuple

import networkx as nx

from .graph import Edge, MetricGraph, Point, validate

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class PointMap:
    """Sends points of the original graph to the graph with bridges contracted."""
    source: MetricGraph
    target: MetricGraph
    vertex_map: Tuple[Tuple[str, str], ...]
    bridges: frozenset

    def __call__(self, point: Point) -> Point:
        images = dict(self.vertex_map)
        point = self.source.canonical(point)
        if point.vertex is not None:
            return Point(vertex=images[point.vertex])
        if point.edge in self.bridges:
            return Point(vertex=images[self.source.edge(point.edge).tail])
        return self.target.point(point.edge, point.offset)


def separating_edges(graph: MetricGraph) -> list[str]:
    """Ids of the bridges of the graph; parallel edges and loops are never bridges."""
    view = graph.simple_view()
    found = []
    for u, v in nx.bridges(view):
        data = view[u][v]
        if data["multiplicity"] == 1:
            found.append(data["id"])
    return sorted(found)


def contract_separating_edges(graph: MetricGraph) -> Tuple[MetricGraph, PointMap]:
    bridges = frozenset(separating_edges(graph))

    merged = nx.Graph()
    merged.add_nodes_from(graph.vertices)
    for edge_id in bridges:
        edge = graph.edge(edge_id)
        merged.add_edge(edge.tail, edge.head)
    images = {}
    for component in nx.connected_components(merged):
        representative = min(component)
        for vertex in component:
            images[vertex] = representative

    vertices = tuple(v for v in graph.vertices if images[v] == v)
    edges = tuple(
        Edge(e.id, images[e.tail], images[e.head], e.length) for e in graph.edges if e.id not in bridges
    )
    contracted = validate(MetricGraph(vertices, edges, name=graph.name))
    if bridges:
        logger.info("[contract_separating_edges] contracted %d bridges: %s", len(bridges), ", ".join(sorted(bridges)))
    return contracted, PointMap(graph, contracted, tuple(sorted(images.items())), bridges)
