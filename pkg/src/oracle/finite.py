"""
Finite-graph model of a metric graph and brute-force chip-firing.

The metric graph is scaled to integer lengths and cut into unit edges at the
1/q lattice. Reduced divisors and Baker-Norine ranks are then computed on the
finite graph with its integer Laplacian, independently of the metric code.
"""
import logging
import random
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Tuple

import networkx as nx
import numpy as np

from config.config import TBN_BUDGET
from src.errors import IncompatibleDenominator, ResourceBudgetExceeded
from src.graph_core import Divisor, MetricGraph, Point

logger = logging.getLogger(__name__)


@dataclass(eq=False)
class FiniteGraph:
    """
    Unit-edge subdivision of a metric graph.

    Attributes
    ----------
    metric : MetricGraph
        the graph that was subdivided
    q : int
        lattice denominator used for the subdivision
    names : tuple of str
        vertex labels; original vertices keep their names, new ones are "edge#k"
    points : tuple of Point
        provenance of every vertex on the metric graph
    laplacian : numpy.ndarray
        integer Laplacian (loops do not contribute)
    loops : tuple of int
        number of unit loop edges at each vertex
    """
    metric: MetricGraph
    q: int
    names: Tuple[str, ...]
    points: Tuple[Point, ...]
    laplacian: np.ndarray = field(repr=False)
    loops: Tuple[int, ...]
    edge_count: int

    @cached_property
    def index(self) -> dict:
        return {point: i for i, point in enumerate(self.points)}

    @cached_property
    def adjacency(self) -> list:
        size = len(self.names)
        return [
            [(j, int(-self.laplacian[i, j])) for j in range(size) if j != i and self.laplacian[i, j] != 0]
            for i in range(size)
        ]

    @cached_property
    def nx_graph(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(range(len(self.names)))
        for i, neighbors in enumerate(self.adjacency):
            graph.add_edges_from((i, j) for j, _ in neighbors if j > i)
        return graph

    @cached_property
    def base(self) -> int:
        return self.index[Point(vertex=self.metric.base_vertex)]

    @property
    def size(self) -> int:
        return len(self.names)

    @property
    def genus(self) -> int:
        return self.edge_count - self.size + 1

    def valence(self, i: int) -> int:
        return int(self.laplacian[i, i]) + 2 * self.loops[i]

    def vertex_of(self, point: Point) -> int:
        point = self.metric.canonical(point)
        if point not in self.index:
            raise IncompatibleDenominator(f"{point} is not on the 1/{self.q} lattice of {self.metric!r}")
        return self.index[point]

    def divisor(self, divisor: Divisor) -> "FiniteDivisor":
        coeffs = [0] * self.size
        for point, coeff in divisor.items():
            coeffs[self.vertex_of(point)] += coeff
        return FiniteDivisor(self, tuple(coeffs))

    def to_metric(self, divisor: "FiniteDivisor") -> Divisor:
        return Divisor(self.metric, {self.points[i]: c for i, c in enumerate(divisor.coeffs) if c})

    def unit(self, i: int) -> "FiniteDivisor":
        coeffs = [0] * self.size
        coeffs[i] = 1
        return FiniteDivisor(self, tuple(coeffs))


@dataclass(frozen=True)
class FiniteDivisor:
    graph: FiniteGraph = field(compare=False, hash=False, repr=False)
    coeffs: Tuple[int, ...]

    @classmethod
    def from_array(cls, graph: FiniteGraph, array: np.ndarray) -> "FiniteDivisor":
        return cls(graph, tuple(int(x) for x in array))

    @property
    def array(self) -> np.ndarray:
        return np.array(self.coeffs, dtype=np.int64)

    @property
    def degree(self) -> int:
        return sum(self.coeffs)

    @property
    def is_effective(self) -> bool:
        return all(c >= 0 for c in self.coeffs)

    def __add__(self, other: "FiniteDivisor") -> "FiniteDivisor":
        return FiniteDivisor(self.graph, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FiniteDivisor") -> "FiniteDivisor":
        return FiniteDivisor(self.graph, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))


# ============ Subdivision ============

@lru_cache(maxsize=64)
def subdivide(graph: MetricGraph, q: int) -> Tuple[FiniteGraph, dict]:
    """Cut every scaled edge into unit edges at the 1/q lattice; returns the graph and its point map."""
    if q < 1:
        raise IncompatibleDenominator(f"Lattice denominator must be a positive integer, got {q}")
    step = graph.lattice_step(q)

    names = list(graph.vertices)
    points = [Point(vertex=v) for v in graph.vertices]
    position = {v: i for i, v in enumerate(graph.vertices)}
    links = []
    for edge in graph.edges:
        units = edge.length / step
        if units.denominator != 1:
            raise IncompatibleDenominator(f"Edge {edge.id} is not a whole number of lattice steps")
        chain = [position[edge.tail]]
        for k in range(1, int(units)):
            names.append(f"{edge.id}#{k}")
            points.append(Point(edge=edge.id, offset=k * step))
            chain.append(len(names) - 1)
        chain.append(position[edge.head])
        links.extend(zip(chain, chain[1:]))

    size = len(names)
    laplacian = np.zeros((size, size), dtype=np.int64)
    loops = [0] * size
    for u, v in links:
        if u == v:
            loops[u] += 1
            continue
        laplacian[u, u] += 1
        laplacian[v, v] += 1
        laplacian[u, v] -= 1
        laplacian[v, u] -= 1

    finite = FiniteGraph(graph, q, tuple(names), tuple(points), laplacian, tuple(loops), len(links))
    logger.debug("[subdivide] %r at q=%d -> %d vertices, %d unit edges", graph, q, size, len(links))
    return finite, finite.index


# ============ Reduction ============

def _unburnt(graph: FiniteGraph, chips: np.ndarray, q: int) -> list:
    burnt = [False] * graph.size
    burnt[q] = True
    incoming = [0] * graph.size
    stack = [q]
    while stack:
        x = stack.pop()
        for y, mult in graph.adjacency[x]:
            if burnt[y]:
                continue
            incoming[y] += mult
            if incoming[y] > chips[y]:
                burnt[y] = True
                stack.append(y)
    return [i for i in range(graph.size) if not burnt[i]]


def finite_burn(d: FiniteDivisor, q: int) -> list:
    """Vertices left unburnt by Dhar's algorithm started at q."""
    return _unburnt(d.graph, d.array, q)


def finite_reduce(d: FiniteDivisor, q: int) -> FiniteDivisor:
    graph = d.graph
    chips = d.array
    laplacian = graph.laplacian

    # phase A: clear debt away from q, farthest vertices first, by firing balls around q
    distance = nx.single_source_shortest_path_length(graph.nx_graph, q)
    levels: dict = {}
    for vertex, k in distance.items():
        levels.setdefault(k, []).append(vertex)
    for k in sorted(levels, reverse=True):
        if k == 0:
            continue
        debtors = [v for v in levels[k] if chips[v] < 0]
        if not debtors:
            continue
        ball = np.array([1 if distance[i] <= k - 1 else 0 for i in range(graph.size)], dtype=np.int64)
        delta = laplacian @ ball
        for v in sorted(levels[k]):
            if chips[v] >= 0:
                continue
            gain = int(-delta[v])
            times = -(int(chips[v]) // gain)
            chips = chips - times * delta

    # phase B: fire the unburnt set until Dhar's algorithm burns everything
    firings = 0
    while True:
        unburnt = _unburnt(graph, chips, q)
        if not unburnt:
            break
        indicator = np.zeros(graph.size, dtype=np.int64)
        indicator[unburnt] = 1
        chips = chips - laplacian @ indicator
        firings += 1

    logger.debug("[finite_reduce] %d set firings", firings)
    return FiniteDivisor.from_array(graph, chips)


# ============ Rank ============

def finite_rank(d: FiniteDivisor, budget: int = TBN_BUDGET) -> int:
    """
    Baker-Norine rank by exhaustive subtraction over every vertex.

    Level r holds the distinct classes of d - E for all effective E of degree
    r, keyed by their reduced form; the rank is the last level at which every
    class is still effective. Degrees above 2g - 2 are answered by
    Riemann-Roch as deg - g.
    """
    graph = d.graph
    base = graph.base
    if d.degree < 0:
        return -1
    if d.degree > 2 * graph.genus - 2:
        return d.degree - graph.genus

    start = finite_reduce(d, base)
    if start.coeffs[base] < 0:
        return -1

    frontier = {start}
    rank = 0
    while rank < d.degree:
        if len(frontier) * graph.size > budget:
            raise ResourceBudgetExceeded(
                f"Rank search would test {len(frontier) * graph.size} divisors (budget {budget})"
            )
        following = set()
        for current in frontier:
            for v in range(graph.size):
                reduced = finite_reduce(current - graph.unit(v), base)
                if reduced.coeffs[base] < 0:
                    return rank
                following.add(reduced)
        frontier = following
        rank += 1
    return rank


def finite_canonical_divisor(graph: FiniteGraph) -> FiniteDivisor:
    return FiniteDivisor(graph, tuple(graph.valence(i) - 2 for i in range(graph.size)))


# ============ Sampling ============

def random_lattice_divisor(graph: MetricGraph, q: int, degree: int, rng: random.Random, extra: int = 2) -> Divisor:
    """A divisor of the given degree supported on the 1/q lattice."""
    lattice = graph.lattice_points(q)
    negatives = rng.randint(0, extra) + max(0, -degree)
    positives = negatives + degree
    divisor = Divisor.zero(graph)
    for _ in range(positives):
        divisor = divisor.plus_point(rng.choice(lattice))
    for _ in range(negatives):
        divisor = divisor.plus_point(rng.choice(lattice), -1)
    return divisor
