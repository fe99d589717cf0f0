from collections import Counter
from fractions import Fraction
from typing import Iterable, Optional

from src.errors import FiringTimeTooLarge, InsufficientChips
from src.graph_core import ClosedSubgraph, Divisor, Point
from src.graph_core.rationals import RationalLike, format_rational, parse_rational


def max_firing_time(d: Divisor, s: ClosedSubgraph, obstacles: Iterable[Point] = ()) -> Optional[Fraction]:
    """
    Largest t for which firing s moves every boundary chip without meeting a
    vertex, a support point of d, another front or any extra obstacle before
    time t. Fronts running head-on meet at the midpoint of their gap. None
    when s has no boundary.
    """
    graph = s.graph
    blockers = [p for p in set(d.support) | set(obstacles) if not s.contains(p)]
    best: Optional[Fraction] = None
    for _, (edge_id, offset, sign) in s.boundary_directions():
        edge = graph.edge(edge_id)
        far_offset = edge.length if sign > 0 else Fraction(0)
        far_vertex = edge.head if sign > 0 else edge.tail
        gap = abs(far_offset - offset)
        candidates = [gap / 2 if far_vertex in s.vertices else gap]
        for a, b in s.intervals.get(edge_id, ()):
            ahead = ((a if sign > 0 else b) - offset) * sign
            if ahead > 0:
                candidates.append(ahead / 2)
        for point in blockers:
            if point.vertex is None and point.edge == edge_id:
                ahead = (point.offset - offset) * sign
                if ahead > 0:
                    candidates.append(ahead)
        reach = min(candidates)
        if best is None or reach < best:
            best = reach
    return best


def _fire(d: Divisor, s: ClosedSubgraph, t: Fraction) -> Divisor:
    graph = d.graph
    moves: Counter = Counter()
    for point, (edge_id, offset, sign) in s.boundary_directions():
        moves[point] -= 1
        moves[graph.point(edge_id, offset + sign * t)] += 1
    return d + Divisor(graph, moves)


def fire_subgraph(d: Divisor, s: ClosedSubgraph, t: RationalLike) -> Divisor:
    """Subtract the boundary of s and add the boundary of its t-neighbourhood."""
    t = parse_rational(t)
    if t <= 0:
        raise FiringTimeTooLarge(f"Firing time must be positive, got {format_rational(t)}")
    for point, degree in s.boundary():
        if d[point] < degree:
            raise InsufficientChips(f"{point} holds {d[point]} chips but has out-degree {degree}")
    limit = max_firing_time(d, s)
    if limit is None:
        return d
    if t > limit:
        raise FiringTimeTooLarge(
            f"An event occurs at time {format_rational(limit)}, before {format_rational(t)}"
        )
    return _fire(d, s, t)
