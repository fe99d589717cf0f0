"""
Tropical Jacobian coordinates.

H1(G, Z) is spanned by the fundamental cycles of a spanning tree; the length
pairing on edges gives the Gram matrix M. A path from the basepoint w to x
pairs with each basis cycle, and M^-1 applied to those pairings, reduced
modulo 1, is the Abel-Jacobi image of x - w.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Optional, Sequence, Tuple

import networkx as nx
import sympy as sp

from src.graph_core import Divisor, MetricGraph, Point
from src.graph_core.rationals import format_rational, frac_mod1

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TorusPoint:
    """Coordinates modulo the integer lattice, each in [0, 1)."""
    coordinates: Tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "coordinates", tuple(frac_mod1(Fraction(c)) for c in self.coordinates))

    def __sub__(self, other: "TorusPoint") -> "TorusPoint":
        return TorusPoint(tuple(a - b for a, b in zip(self.coordinates, other.coordinates)))

    def lifted(self) -> Tuple[Fraction, ...]:
        """Representative with every coordinate in (-1/2, 1/2]."""
        return tuple(c - 1 if c > Fraction(1, 2) else c for c in self.coordinates)

    def as_strings(self) -> list[str]:
        return [format_rational(c) for c in self.coordinates]


@dataclass(frozen=True)
class JacobianBasis:
    graph: MetricGraph
    basepoint: str
    tree_edges: Tuple[str, ...]
    cycle_edges: Tuple[str, ...]
    cycles: Tuple[dict, ...]
    gram: Tuple[Tuple[Fraction, ...], ...]

    @property
    def genus(self) -> int:
        return len(self.cycle_edges)

    @cached_property
    def inverse(self) -> Tuple[Tuple[Fraction, ...], ...]:
        if not self.gram:
            return ()
        matrix = sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in row] for row in self.gram])
        inv = matrix.inv()
        return tuple(
            tuple(Fraction(int(inv[i, j].p), int(inv[i, j].q)) for j in range(inv.cols))
            for i in range(inv.rows)
        )

    @cached_property
    def _tree(self) -> nx.Graph:
        tree = nx.Graph()
        tree.add_nodes_from(self.graph.vertices)
        for edge_id in self.tree_edges:
            edge = self.graph.edge(edge_id)
            tree.add_edge(edge.tail, edge.head, id=edge_id)
        return tree

    def tree_path(self, start: str, end: str) -> list[Tuple[str, int]]:
        """Edges of the tree path from start to end with +1 when walked tail to head."""
        nodes = nx.shortest_path(self._tree, start, end)
        steps = []
        for a, b in zip(nodes, nodes[1:]):
            edge = self.graph.edge(self._tree[a][b]["id"])
            steps.append((edge.id, 1 if edge.tail == a else -1))
        return steps

    def pairing(self, chain: dict) -> Tuple[Fraction, ...]:
        """Length pairing of an edge chain {edge id: signed length} with each basis cycle."""
        return tuple(
            sum((cycle.get(e, 0) * amount for e, amount in chain.items()), Fraction(0))
            for cycle in self.cycles
        )

    def path_chain(self, point: Point) -> dict:
        """A chain from the basepoint to the point: a tree path then a run along the point's edge."""
        graph = self.graph
        chain: dict = {}
        if point.vertex is not None:
            target, partial = point.vertex, None
        else:
            target, partial = graph.edge(point.edge).tail, (point.edge, point.offset)
        for edge_id, sign in self.tree_path(self.basepoint, target):
            chain[edge_id] = chain.get(edge_id, Fraction(0)) + sign * graph.edge(edge_id).length
        if partial is not None:
            chain[partial[0]] = chain.get(partial[0], Fraction(0)) + partial[1]
        return chain


def jacobian_basis(graph: MetricGraph, basepoint: Optional[str] = None) -> JacobianBasis:
    basepoint = basepoint or graph.base_vertex
    graph.vertex_point(basepoint)

    ordered = sorted(graph.edges, key=lambda e: e.id)
    multigraph = nx.MultiGraph()
    multigraph.add_nodes_from(graph.vertices)
    for rank, edge in enumerate(ordered):
        multigraph.add_edge(edge.tail, edge.head, key=edge.id, order=rank)
    tree_edges = sorted(
        key for _, _, key in nx.minimum_spanning_edges(
            multigraph, algorithm="kruskal", weight="order", keys=True, data=False
        )
    )
    in_tree = set(tree_edges)
    cycle_edges = [edge.id for edge in ordered if edge.id not in in_tree]

    partial = JacobianBasis(graph, basepoint, tuple(tree_edges), tuple(cycle_edges), (), ())
    cycles = []
    for edge_id in cycle_edges:
        edge = graph.edge(edge_id)
        cycle = {edge_id: 1}
        for tree_id, sign in partial.tree_path(edge.head, edge.tail):
            cycle[tree_id] = cycle.get(tree_id, 0) + sign
        cycles.append(cycle)

    gram = tuple(
        tuple(
            sum((ci[e] * cj.get(e, 0) * graph.edge(e).length for e in ci), Fraction(0))
            for cj in cycles
        )
        for ci in cycles
    )
    logger.debug("[jacobian_basis] %r: tree %s, cycles %s", graph, tree_edges, cycle_edges)
    return JacobianBasis(graph, basepoint, tuple(tree_edges), tuple(cycle_edges), tuple(cycles), gram)


def abel_jacobi_point(point: Point, basis: JacobianBasis) -> Tuple[Fraction, ...]:
    pairing = basis.pairing(basis.path_chain(basis.graph.canonical(point)))
    return tuple(
        sum((row[j] * pairing[j] for j in range(len(pairing))), Fraction(0))
        for row in basis.inverse
    )


def abel_jacobi(d: Divisor, basis: JacobianBasis) -> TorusPoint:
    total = [Fraction(0)] * basis.genus
    for point, coeff in d.items():
        for i, value in enumerate(abel_jacobi_point(point, basis)):
            total[i] += coeff * value
    return TorusPoint(tuple(total))


def lattice_rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    """Rank over Q of a list of rational vectors."""
    if not vectors:
        return 0
    return sp.Matrix([[sp.Rational(x.numerator, x.denominator) for x in v] for v in vectors]).rank()
