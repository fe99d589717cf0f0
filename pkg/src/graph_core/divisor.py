"""
Divisors: finite integer combinations of points of a metric graph.
"""
from collections import Counter
from fractions import Fraction
from math import lcm
from typing import Iterable, Iterator, Mapping, Optional, Tuple

from .graph import MetricGraph, Point
from .rationals import RationalLike, parse_rational


class Divisor:
    """
    An immutable map from canonical points to nonzero integers.

    Attributes
    ----------
    graph : MetricGraph
        the graph the points live on
    degree : int
        sum of the coefficients
    """

    __slots__ = ("graph", "_coeffs", "_hash")

    def __init__(self, graph: MetricGraph, coeffs: Optional[Mapping[Point, int]] = None):
        merged: Counter = Counter()
        for point, coeff in (coeffs or {}).items():
            merged[graph.canonical(point)] += int(coeff)
        self.graph = graph
        self._coeffs = {p: c for p, c in merged.items() if c != 0}
        self._hash = None

    # ============ Constructors ============

    @classmethod
    def zero(cls, graph: MetricGraph) -> "Divisor":
        return cls(graph)

    @classmethod
    def from_points(cls, graph: MetricGraph, points: Iterable[Point]) -> "Divisor":
        return cls(graph, Counter(points))

    @classmethod
    def of(cls, graph: MetricGraph, *names: str) -> "Divisor":
        """Sum of points given as "v1" or "e3@3/2" strings."""
        return cls.from_points(graph, (graph.parse_point(name) for name in names))

    @classmethod
    def _trusted(cls, graph: MetricGraph, coeffs: dict) -> "Divisor":
        divisor = cls.__new__(cls)
        divisor.graph = graph
        divisor._coeffs = {p: c for p, c in coeffs.items() if c != 0}
        divisor._hash = None
        return divisor

    # ============ Queries ============

    def __getitem__(self, point: Point) -> int:
        return self._coeffs.get(point, 0)

    def items(self) -> list[Tuple[Point, int]]:
        return sorted(self._coeffs.items())

    def __iter__(self) -> Iterator[Point]:
        return iter(sorted(self._coeffs))

    def __len__(self) -> int:
        return len(self._coeffs)

    @property
    def support(self) -> list[Point]:
        return sorted(self._coeffs)

    @property
    def degree(self) -> int:
        return sum(self._coeffs.values())

    @property
    def is_effective(self) -> bool:
        return all(c > 0 for c in self._coeffs.values())

    def is_effective_away_from(self, q: Point) -> bool:
        return all(c > 0 for p, c in self._coeffs.items() if p != q)

    def points(self) -> list[Point]:
        """Effective part as a sorted list of points with repetition."""
        return [p for p, c in self.items() if c > 0 for _ in range(c)]

    def sort_key(self) -> tuple:
        return tuple((p.key, c) for p, c in self.items())

    # ============ Arithmetic ============

    def _combine(self, other: "Divisor", sign: int) -> "Divisor":
        coeffs = dict(self._coeffs)
        for point, coeff in other._coeffs.items():
            coeffs[point] = coeffs.get(point, 0) + sign * coeff
        return Divisor._trusted(self.graph, coeffs)

    def __add__(self, other: "Divisor") -> "Divisor":
        return self._combine(other, 1)

    def __sub__(self, other: "Divisor") -> "Divisor":
        return self._combine(other, -1)

    def __neg__(self) -> "Divisor":
        return Divisor._trusted(self.graph, {p: -c for p, c in self._coeffs.items()})

    def __mul__(self, factor: int) -> "Divisor":
        return Divisor._trusted(self.graph, {p: factor * c for p, c in self._coeffs.items()})

    __rmul__ = __mul__

    def plus_point(self, point: Point, coeff: int = 1) -> "Divisor":
        coeffs = dict(self._coeffs)
        coeffs[point] = coeffs.get(point, 0) + coeff
        return Divisor._trusted(self.graph, coeffs)

    def scaled(self, graph: MetricGraph, factor: RationalLike) -> "Divisor":
        """The same divisor on a copy of its graph with every length multiplied by factor."""
        factor = parse_rational(factor)
        coeffs = {}
        for point, coeff in self._coeffs.items():
            moved = point if point.is_vertex else Point(edge=point.edge, offset=point.offset * factor)
            coeffs[moved] = coeff
        return Divisor(graph, coeffs)

    # ============ Equality ============

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Divisor):
            return NotImplemented
        same_graph = self.graph is other.graph or self.graph == other.graph
        return same_graph and self._coeffs == other._coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._coeffs.items()))
        return self._hash

    def __repr__(self) -> str:
        if not self._coeffs:
            return "0"
        terms = []
        for point, coeff in self.items():
            if coeff == 1:
                terms.append(f"+ {point}")
            elif coeff == -1:
                terms.append(f"- {point}")
            elif coeff > 0:
                terms.append(f"+ {coeff}*{point}")
            else:
                terms.append(f"- {-coeff}*{point}")
        text = " ".join(terms)
        return text[2:] if text.startswith("+ ") else "-" + text[2:]


def canonical_divisor(graph: MetricGraph) -> Divisor:
    """K = sum over vertices of (valence - 2) * v."""
    return Divisor(graph, {Point(vertex=v): graph.valence(v) - 2 for v in graph.vertices})


def point_divisor(graph: MetricGraph, point: Point, coeff: int = 1) -> Divisor:
    return Divisor(graph, {point: coeff})


def lattice_denominator(graph: MetricGraph, points: Iterable[Point]) -> int:
    """Smallest q such that every given point lies on the 1/q lattice of the graph."""
    q = 1
    for point in points:
        if point.vertex is None:
            scaled = Fraction(point.offset) * graph.scale
            q = lcm(q, scaled.denominator)
    return q
