"""
Metric graphs with exact rational edge lengths, and points on them.

A point is either a vertex or an (edge, offset) pair with the offset strictly
inside the edge; offsets 0 and length are always rewritten to the endpoint
vertex so that equal points compare equal.
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, total_ordering
from typing import Iterable, Optional, Sequence, Tuple

import networkx as nx

from src.errors import (DanglingEdgeEndpoint, Disconnected, DuplicateIdentifier, IncompatibleDenominator,
                        NonpositiveLength, UnknownPoint)
from .rationals import RationalLike, common_denominator, format_rational, parse_rational

logger = logging.getLogger(__name__)

# (edge id, offset, +1 toward the head or -1 toward the tail)
Direction = Tuple[str, Fraction, int]


@total_ordering
@dataclass(frozen=True)
class Point:
    """A canonical point of a metric graph: a vertex name, or an edge id with an interior offset."""
    vertex: Optional[str] = None
    edge: Optional[str] = None
    offset: Fraction = Fraction(0)

    @property
    def is_vertex(self) -> bool:
        return self.vertex is not None

    @property
    def key(self) -> tuple:
        if self.vertex is not None:
            return (0, self.vertex, "", Fraction(0))
        return (1, "", self.edge, self.offset)

    def __lt__(self, other: "Point") -> bool:
        return self.key < other.key

    def __str__(self) -> str:
        if self.vertex is not None:
            return self.vertex
        return f"{self.edge}@{format_rational(self.offset)}"


@dataclass(frozen=True)
class Edge:
    id: str
    tail: str
    head: str
    length: Fraction

    @property
    def is_loop(self) -> bool:
        return self.tail == self.head


@dataclass(frozen=True)
class MetricGraph:
    vertices: Tuple[str, ...]
    edges: Tuple[Edge, ...]
    name: str = field(default="", compare=False)

    # ============ Lookups ============

    @cached_property
    def edge_map(self) -> dict:
        return {edge.id: edge for edge in self.edges}

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def _incidence(self) -> dict:
        incidence = {v: [] for v in self.vertices}
        for edge in sorted(self.edges, key=lambda e: e.id):
            if edge.tail in incidence:
                incidence[edge.tail].append((edge.id, Fraction(0), 1))
            if edge.head in incidence:
                incidence[edge.head].append((edge.id, edge.length, -1))
        return incidence

    def edge(self, edge_id: str) -> Edge:
        try:
            return self.edge_map[edge_id]
        except KeyError:
            raise UnknownPoint(f"No edge named {edge_id!r}") from None

    def incident(self, vertex: str) -> list[Direction]:
        """Tangent directions leaving a vertex; a loop edge contributes two."""
        if vertex not in self.vertex_set:
            raise UnknownPoint(f"No vertex named {vertex!r}")
        return list(self._incidence[vertex])

    def valence(self, vertex: str) -> int:
        return len(self._incidence[vertex])

    # ============ Invariants ============

    @cached_property
    def genus(self) -> int:
        return len(self.edges) - len(self.vertices) + 1

    @cached_property
    def total_length(self) -> Fraction:
        return sum((edge.length for edge in self.edges), Fraction(0))

    @cached_property
    def scale(self) -> int:
        """Smallest positive integer turning every edge length into an integer."""
        return common_denominator(edge.length for edge in self.edges)

    @cached_property
    def base_vertex(self) -> str:
        """Canonical basepoint: the lexicographically first vertex name."""
        return min(self.vertices)

    # ============ Points ============

    def vertex_point(self, name: str) -> Point:
        if name not in self.vertex_set:
            raise UnknownPoint(f"No vertex named {name!r}")
        return Point(vertex=name)

    def point(self, edge_id: str, offset: RationalLike) -> Point:
        edge = self.edge(edge_id)
        offset = parse_rational(offset)
        if offset < 0 or offset > edge.length:
            raise UnknownPoint(
                f"Offset {format_rational(offset)} outside edge {edge_id} of length {format_rational(edge.length)}"
            )
        if offset == 0:
            return Point(vertex=edge.tail)
        if offset == edge.length:
            return Point(vertex=edge.head)
        return Point(edge=edge_id, offset=offset)

    def canonical(self, point: Point) -> Point:
        if point.vertex is not None:
            return self.vertex_point(point.vertex)
        return self.point(point.edge, point.offset)

    def parse_point(self, text: str) -> Point:
        """Read "v1" as a vertex and "e3@3/2" as an offset along an edge."""
        text = text.strip()
        if "@" in text:
            edge_id, offset = text.split("@", 1)
            return self.point(edge_id.strip(), offset)
        return self.vertex_point(text)

    def offsets_on(self, point: Point, edge_id: str) -> list[Fraction]:
        """Offsets at which a point sits on an edge (two for the vertex of a loop edge)."""
        edge = self.edge(edge_id)
        if point.vertex is None:
            return [point.offset] if point.edge == edge_id else []
        offsets = []
        if edge.tail == point.vertex:
            offsets.append(Fraction(0))
        if edge.head == point.vertex:
            offsets.append(edge.length)
        return offsets

    def directions(self, point: Point) -> list[Direction]:
        if point.vertex is not None:
            return self.incident(point.vertex)
        return [(point.edge, point.offset, 1), (point.edge, point.offset, -1)]

    def point_at_distance(self, edge_id: str, distance: RationalLike, from_head: bool = False) -> Point:
        edge = self.edge(edge_id)
        distance = parse_rational(distance)
        return self.point(edge_id, edge.length - distance if from_head else distance)

    def midpoint(self, edge_id: str) -> Point:
        return self.point_at_distance(edge_id, self.edge(edge_id).length / 2)

    def antipode(self, point: Point, edge_id: str) -> Point:
        """Point half the circumference away from point around a loop edge."""
        edge = self.edge(edge_id)
        if not edge.is_loop:
            raise UnknownPoint(f"Edge {edge_id} is not a loop")
        offsets = self.offsets_on(point, edge_id)
        if not offsets:
            raise UnknownPoint(f"{point} does not lie on edge {edge_id}")
        return self.point_at_distance(edge_id, (offsets[0] + edge.length / 2) % edge.length)

    def lattice_step(self, q: int) -> Fraction:
        """Spacing of the 1/q lattice after lengths are scaled to integers."""
        if q < 1:
            raise IncompatibleDenominator(f"Grid denominator must be a positive integer, got {q}")
        return Fraction(1, self.scale * q)

    def lattice_points(self, q: int) -> list[Point]:
        step = self.lattice_step(q)
        points = [Point(vertex=v) for v in self.vertices]
        for edge in self.edges:
            count = int(edge.length / step)
            points.extend(Point(edge=edge.id, offset=k * step) for k in range(1, count))
        return sorted(points)

    def lattice_neighbors(self, point: Point, q: int) -> list[Point]:
        step = self.lattice_step(q)
        neighbors = []
        for edge_id, offset, sign in self.directions(point):
            neighbors.append(self.point(edge_id, offset + sign * step))
        return neighbors

    def on_lattice(self, point: Point, q: int) -> bool:
        if point.vertex is not None:
            return True
        return (point.offset / self.lattice_step(q)).denominator == 1

    # ============ networkx views ============

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            graph.add_edge(edge.tail, edge.head, key=edge.id, length=edge.length)
        return graph

    def simple_view(self) -> nx.Graph:
        """Simple graph keeping the shortest of parallel edges and dropping loops."""
        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        for edge in self.edges:
            if edge.is_loop:
                continue
            if graph.has_edge(edge.tail, edge.head):
                data = graph[edge.tail][edge.head]
                data["multiplicity"] += 1
                if edge.length < data["length"]:
                    data["length"] = edge.length
                    data["id"] = edge.id
            else:
                graph.add_edge(edge.tail, edge.head, length=edge.length, id=edge.id, multiplicity=1)
        return graph

    def __repr__(self) -> str:
        label = self.name or "MetricGraph"
        return f"<{label}: {len(self.vertices)} vertices, {len(self.edges)} edges, genus {self.genus}>"


# ============ Validation ============

def check_description(vertices: Sequence[str], edges: Iterable[Tuple[str, str, str, Fraction]]) -> Tuple[bool, str]:
    """
    Check a raw graph description without building it.
    Returns (is_valid, reason).
    """
    try:
        build_graph(vertices, edges)
    except (Disconnected, NonpositiveLength, DanglingEdgeEndpoint, DuplicateIdentifier) as exc:
        return False, f"{type(exc).__name__}: {exc}"
    return True, "Graph description is valid"


def validate(graph: MetricGraph) -> MetricGraph:
    if not graph.vertices:
        raise Disconnected("A metric graph needs at least one vertex")
    if len(set(graph.vertices)) != len(graph.vertices):
        raise DuplicateIdentifier("Vertex names must be unique")
    if len(graph.edge_map) != len(graph.edges):
        raise DuplicateIdentifier("Edge ids must be unique")

    for edge in graph.edges:
        for end in (edge.tail, edge.head):
            if end not in graph.vertex_set:
                raise DanglingEdgeEndpoint(f"Edge {edge.id} ends at unknown vertex {end!r}")
        if edge.length <= 0:
            raise NonpositiveLength(f"Edge {edge.id} has length {format_rational(edge.length)}")

    if not nx.is_connected(graph.to_networkx()):
        raise Disconnected("Metric graph is not connected")

    logger.debug("[validate] %r", graph)
    return graph


def genus(graph: MetricGraph) -> int:
    return graph.genus


def build_graph(vertices: Sequence[str], edges: Iterable[Tuple[str, str, str, RationalLike]], name: str = "") -> MetricGraph:
    """Build and validate a graph from vertex names and (id, tail, head, length) tuples."""
    built = tuple(Edge(edge_id, tail, head, parse_rational(length)) for edge_id, tail, head, length in edges)
    return validate(MetricGraph(tuple(vertices), built, name=name))


def scale_graph(graph: MetricGraph, factor: RationalLike) -> MetricGraph:
    factor = parse_rational(factor)
    if factor <= 0:
        raise NonpositiveLength(f"Scale factor must be positive, got {format_rational(factor)}")
    edges = tuple(Edge(e.id, e.tail, e.head, e.length * factor) for e in graph.edges)
    return validate(MetricGraph(graph.vertices, edges, name=graph.name))


def point_distances(graph: MetricGraph, source: Point, targets: Iterable[Point]) -> dict:
    """Exact shortest-path distances from source to each target point."""
    targets = [graph.canonical(t) for t in targets]
    cuts: dict = {edge.id: {Fraction(0), edge.length} for edge in graph.edges}
    for point in [graph.canonical(source)] + targets:
        if point.vertex is None:
            cuts[point.edge].add(point.offset)
    view = nx.Graph()
    view.add_nodes_from(Point(vertex=v) for v in graph.vertices)
    for edge in graph.edges:
        offsets = sorted(cuts[edge.id])
        for a, b in zip(offsets, offsets[1:]):
            u, v = graph.point(edge.id, a), graph.point(edge.id, b)
            if u == v:
                continue
            if not view.has_edge(u, v) or view[u][v]["length"] > b - a:
                view.add_edge(u, v, length=b - a)
    lengths = nx.single_source_dijkstra_path_length(view, graph.canonical(source), weight="length")
    return {t: lengths[t] for t in targets}
