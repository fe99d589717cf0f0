"""
Closed subgraphs: finite unions of closed rational intervals on edges.
"""
from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Tuple

from src.errors import UnknownPoint
from .graph import Direction, MetricGraph, Point
from .rationals import RationalLike, parse_rational

Interval = Tuple[Fraction, Fraction]


def _merge(intervals: Iterable[Interval]) -> Tuple[Interval, ...]:
    merged: list = []
    for a, b in sorted(intervals):
        if merged and a <= merged[-1][1]:
            merged[-1] = (merged[-1][0], max(merged[-1][1], b))
        else:
            merged.append((a, b))
    return tuple(merged)


class ClosedSubgraph:
    """
    A closed subset of a metric graph.

    Stored per edge as sorted disjoint closed intervals [a, b] (a == b allowed
    for isolated points) plus the set of member vertices. A vertex is a member
    when it is listed explicitly or an interval touches it.
    """

    def __init__(
        self,
        graph: MetricGraph,
        intervals: Optional[Mapping[str, Iterable[Tuple[RationalLike, RationalLike]]]] = None,
        vertices: Iterable[str] = (),
    ):
        self.graph = graph
        cleaned = {}
        for edge_id, spans in (intervals or {}).items():
            edge = graph.edge(edge_id)
            parsed = []
            for a, b in spans:
                a, b = parse_rational(a), parse_rational(b)
                if not (0 <= a <= b <= edge.length):
                    raise UnknownPoint(f"Interval [{a}, {b}] does not fit on edge {edge_id}")
                parsed.append((a, b))
            if parsed:
                cleaned[edge_id] = _merge(parsed)
        self.intervals: dict = cleaned

        members = set()
        for name in vertices:
            graph.vertex_point(name)
            members.add(name)
        for edge_id, spans in cleaned.items():
            edge = graph.edge(edge_id)
            if spans[0][0] == 0:
                members.add(edge.tail)
            if spans[-1][1] == edge.length:
                members.add(edge.head)
        self.vertices = frozenset(members)

    # ============ Constructors ============

    @classmethod
    def whole(cls, graph: MetricGraph) -> "ClosedSubgraph":
        return cls(graph, {e.id: [(0, e.length)] for e in graph.edges}, graph.vertices)

    @classmethod
    def from_edges(cls, graph: MetricGraph, edge_ids: Sequence[str], vertices: Iterable[str] = ()) -> "ClosedSubgraph":
        return cls(graph, {e: [(0, graph.edge(e).length)] for e in edge_ids}, vertices)

    @classmethod
    def from_points(cls, graph: MetricGraph, points: Iterable[Point]) -> "ClosedSubgraph":
        intervals: dict = {}
        vertices = []
        for point in points:
            if point.vertex is not None:
                vertices.append(point.vertex)
            else:
                intervals.setdefault(point.edge, []).append((point.offset, point.offset))
        return cls(graph, intervals, vertices)

    def union(self, other: "ClosedSubgraph") -> "ClosedSubgraph":
        intervals = {k: list(v) for k, v in self.intervals.items()}
        for edge_id, spans in other.intervals.items():
            intervals.setdefault(edge_id, []).extend(spans)
        return ClosedSubgraph(self.graph, intervals, self.vertices | other.vertices)

    # ============ Membership ============

    @property
    def is_empty(self) -> bool:
        return not self.intervals and not self.vertices

    def contains(self, point: Point) -> bool:
        if point.vertex is not None:
            return point.vertex in self.vertices
        return any(a <= point.offset <= b for a, b in self.intervals.get(point.edge, ()))

    def contains_direction(self, direction: Direction) -> bool:
        """Whether a short segment leaving offset along the edge in the given sense lies inside."""
        edge_id, offset, sign = direction
        for a, b in self.intervals.get(edge_id, ()):
            if sign > 0 and a <= offset < b:
                return True
            if sign < 0 and a < offset <= b:
                return True
        return False

    def out_degree(self, point: Point) -> int:
        return sum(1 for d in self.graph.directions(point) if not self.contains_direction(d))

    def _candidate_points(self) -> list[Point]:
        points = {Point(vertex=v) for v in self.vertices}
        for edge_id, spans in self.intervals.items():
            for a, b in spans:
                points.add(self.graph.point(edge_id, a))
                points.add(self.graph.point(edge_id, b))
        return sorted(points)

    def boundary(self) -> list[Tuple[Point, int]]:
        """Boundary points with their out-degrees, i.e. the boundary divisor."""
        result = []
        for point in self._candidate_points():
            degree = self.out_degree(point)
            if degree > 0:
                result.append((point, degree))
        return result

    def boundary_directions(self) -> list[Tuple[Point, Direction]]:
        result = []
        for point in self._candidate_points():
            for direction in self.graph.directions(point):
                if not self.contains_direction(direction):
                    result.append((point, direction))
        return result

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ClosedSubgraph):
            return NotImplemented
        return self.intervals == other.intervals and self.vertices == other.vertices

    def __repr__(self) -> str:
        spans = ", ".join(
            f"{e}:[{a},{b}]" for e, items in sorted(self.intervals.items()) for a, b in items
        )
        return f"ClosedSubgraph(vertices={sorted(self.vertices)}, {spans})"
