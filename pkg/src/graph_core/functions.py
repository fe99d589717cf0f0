"""
Piecewise-linear functions with integer slopes and their principal divisors.
"""
from collections import Counter
from fractions import Fraction
from typing import Callable, Mapping, Sequence, Tuple, Union

import networkx as nx

from src.errors import InconsistentFunction, NonIntegerSlope
from .divisor import Divisor
from .graph import MetricGraph, Point
from .rationals import RationalLike, format_rational, parse_rational
from .subgraph import ClosedSubgraph

Breakpoint = Tuple[Fraction, Fraction]


class PLFunction:
    """
    A continuous piecewise-linear function given edge by edge.

    Each edge carries its breakpoints (offset, value), sorted, starting at 0 and
    ending at the edge length.
    """

    def __init__(self, graph: MetricGraph, pieces: Mapping[str, Sequence[Tuple[RationalLike, RationalLike]]]):
        self.graph = graph
        self.pieces = {}
        for edge in graph.edges:
            if edge.id not in pieces:
                raise InconsistentFunction(f"No breakpoints given for edge {edge.id}")
            points = [(parse_rational(o), parse_rational(v)) for o, v in pieces[edge.id]]
            offsets = [o for o, _ in points]
            if not points or offsets[0] != 0 or offsets[-1] != edge.length:
                raise InconsistentFunction(f"Breakpoints on {edge.id} must start at 0 and end at its length")
            if any(b <= a for a, b in zip(offsets, offsets[1:])):
                raise InconsistentFunction(f"Breakpoint offsets on {edge.id} must increase")
            self.pieces[edge.id] = tuple(points)
        self._check_vertices()

    def _check_vertices(self) -> None:
        values: dict = {}
        for edge in self.graph.edges:
            points = self.pieces[edge.id]
            for vertex, value in ((edge.tail, points[0][1]), (edge.head, points[-1][1])):
                if vertex in values and values[vertex] != value:
                    raise InconsistentFunction(f"Values disagree at vertex {vertex}")
                values[vertex] = value

    @classmethod
    def constant(cls, graph: MetricGraph, value: RationalLike = 0) -> "PLFunction":
        value = parse_rational(value)
        return cls(graph, {e.id: [(0, value), (e.length, value)] for e in graph.edges})

    def value(self, edge_id: str, offset: RationalLike) -> Fraction:
        offset = parse_rational(offset)
        points = self.pieces[edge_id]
        for (a, fa), (b, fb) in zip(points, points[1:]):
            if a <= offset <= b:
                return fa + (fb - fa) * (offset - a) / (b - a)
        raise InconsistentFunction(f"Offset {format_rational(offset)} outside edge {edge_id}")

    def __add__(self, other: Union["PLFunction", RationalLike]) -> "PLFunction":
        if not isinstance(other, PLFunction):
            shift = parse_rational(other)
            return PLFunction(self.graph, {e: [(o, v + shift) for o, v in pts] for e, pts in self.pieces.items()})
        pieces = {}
        for edge_id, points in self.pieces.items():
            offsets = sorted({o for o, _ in points} | {o for o, _ in other.pieces[edge_id]})
            pieces[edge_id] = [(o, self.value(edge_id, o) + other.value(edge_id, o)) for o in offsets]
        return PLFunction(self.graph, pieces)

    __radd__ = __add__


def div_of_pl(f: PLFunction) -> Divisor:
    """
    Principal divisor of f: at every point, the sum of the slopes of f along
    the tangent directions leaving that point.
    """
    graph = f.graph
    orders: Counter = Counter()
    for edge_id, points in f.pieces.items():
        for (a, fa), (b, fb) in zip(points, points[1:]):
            slope = (fb - fa) / (b - a)
            if slope.denominator != 1:
                raise NonIntegerSlope(
                    f"Slope {format_rational(slope)} on {edge_id} between {format_rational(a)} and {format_rational(b)}"
                )
            orders[graph.point(edge_id, a)] += int(slope)
            orders[graph.point(edge_id, b)] -= int(slope)
    return Divisor(graph, orders)


def pl_from_lattice_values(graph: MetricGraph, q: int, values: Callable[[Point], RationalLike]) -> PLFunction:
    """
    Linear interpolation of values given at every point of the 1/q lattice.
    Slopes are integers whenever the values are multiples of the lattice step.
    """
    step = graph.lattice_step(q)
    pieces = {}
    for edge in graph.edges:
        count = int(edge.length / step)
        pieces[edge.id] = [(k * step, parse_rational(values(graph.point(edge.id, k * step)))) for k in range(count + 1)]
    return PLFunction(graph, pieces)


def _distances_to(subgraph: ClosedSubgraph) -> dict:
    graph = subgraph.graph
    view = nx.Graph()
    view.add_nodes_from(graph.vertices)
    source = ("__source__",)
    view.add_node(source)
    for vertex in subgraph.vertices:
        view.add_edge(source, vertex, length=Fraction(0))
    for edge in graph.edges:
        spans = subgraph.intervals.get(edge.id)
        if spans:
            for vertex, dist in ((edge.tail, spans[0][0]), (edge.head, edge.length - spans[-1][1])):
                if not view.has_edge(source, vertex) or view[source][vertex]["length"] > dist:
                    view.add_edge(source, vertex, length=dist)
        if edge.is_loop:
            continue
        if not view.has_edge(edge.tail, edge.head) or view[edge.tail][edge.head]["length"] > edge.length:
            view.add_edge(edge.tail, edge.head, length=edge.length)
    return nx.single_source_dijkstra_path_length(view, source, weight="length")


def firing_function(subgraph: ClosedSubgraph, t: RationalLike) -> PLFunction:
    """
    The function -min(t, dist(x, subgraph)); adding its divisor to D fires
    the subgraph for time t.
    """
    graph = subgraph.graph
    t = parse_rational(t)
    distances = _distances_to(subgraph)
    infinity = graph.total_length + t + 1
    pieces = {}
    for edge in graph.edges:
        length = edge.length
        d_tail = distances.get(edge.tail, infinity)
        d_head = distances.get(edge.head, infinity)
        spans = subgraph.intervals.get(edge.id, ())

        def dist(o: Fraction) -> Fraction:
            best = min(d_tail + o, d_head + length - o)
            for a, b in spans:
                if o < a:
                    best = min(best, a - o)
                elif o > b:
                    best = min(best, o - b)
                else:
                    return Fraction(0)
            return best

        # every kink lies where two of the distance lines meet or where a line reaches t
        lines = [(d_tail, 1), (d_head + length, -1)]
        for a, b in spans:
            lines.append((a, -1))
            lines.append((-b, 1))
        candidates = {Fraction(0), length}
        for a, b in spans:
            candidates.update((a, b))
        for i, (c1, s1) in enumerate(lines):
            if s1 != 0:
                candidates.add((t - c1) / s1)
            for c2, s2 in lines[i + 1:]:
                if s1 != s2:
                    candidates.add((c2 - c1) / (s1 - s2))
        offsets = sorted(o for o in candidates if 0 <= o <= length)
        pieces[edge.id] = [(o, -min(t, dist(o))) for o in offsets]
    return PLFunction(graph, pieces)
