"""
Dhar's burning algorithm on a metric graph.

Fire starts at the basepoint and spreads along edges. A point holding k chips
stops the fire until more than k of its directions are burning. Only the
vertices, the support of the divisor and the basepoint can block, so the burn
runs on the segments between those points.
"""
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Tuple

from src.errors import NotEffectiveAwayFromBasepoint
from src.graph_core import ClosedSubgraph, Divisor, MetricGraph, Point


@dataclass(frozen=True)
class Segment:
    edge: str
    start: Fraction
    end: Fraction
    tail: Point
    head: Point


@dataclass(frozen=True)
class BurnResult:
    unburnt: ClosedSubgraph
    boundary_chips: Tuple[Tuple[Point, int], ...]

    @property
    def is_reduced(self) -> bool:
        return self.unburnt.is_empty


def augmented_segments(graph: MetricGraph, points: Iterable[Point]) -> list[Segment]:
    """Cut every edge at the given points; the pieces between consecutive cuts."""
    cuts: dict = {edge.id: {Fraction(0), edge.length} for edge in graph.edges}
    for point in points:
        if point.vertex is None:
            cuts[point.edge].add(point.offset)
    segments = []
    for edge in graph.edges:
        offsets = sorted(cuts[edge.id])
        for a, b in zip(offsets, offsets[1:]):
            segments.append(Segment(edge.id, a, b, graph.point(edge.id, a), graph.point(edge.id, b)))
    return segments


def dhar_burn(d: Divisor, q: Point) -> BurnResult:
    graph = d.graph
    q = graph.canonical(q)
    for point, coeff in d.items():
        if point != q and coeff < 0:
            raise NotEffectiveAwayFromBasepoint(f"{d!r} has {coeff} chips at {point}")

    segments = augmented_segments(graph, list(d.support) + [q])
    incidence: dict = {Point(vertex=v): [] for v in graph.vertices}
    for idx, segment in enumerate(segments):
        incidence.setdefault(segment.tail, []).append(idx)
        incidence.setdefault(segment.head, []).append(idx)
    incidence.setdefault(q, [])

    burnt_points = {q}
    burnt_segments = set()
    incoming: Counter = Counter()
    stack = [q]
    while stack:
        x = stack.pop()
        for idx in incidence[x]:
            if idx in burnt_segments:
                continue
            burnt_segments.add(idx)
            segment = segments[idx]
            for y in (segment.tail, segment.head):
                if y in burnt_points:
                    continue
                incoming[y] += 1
                if incoming[y] > d[y]:
                    burnt_points.add(y)
                    stack.append(y)

    unburnt_points = [p for p in incidence if p not in burnt_points]
    intervals: dict = {}
    for idx, segment in enumerate(segments):
        if idx not in burnt_segments:
            intervals.setdefault(segment.edge, []).append((segment.start, segment.end))
    for point in unburnt_points:
        if point.vertex is None:
            intervals.setdefault(point.edge, []).append((point.offset, point.offset))
    unburnt = ClosedSubgraph(graph, intervals, [p.vertex for p in unburnt_points if p.vertex is not None])

    boundary = tuple(sorted((p, incoming[p]) for p in unburnt_points if incoming[p] > 0))
    return BurnResult(unburnt, boundary)


def is_reduced(d: Divisor, q: Point) -> bool:
    q = d.graph.canonical(q)
    if not d.is_effective_away_from(q):
        return False
    return dhar_burn(d, q).is_reduced
