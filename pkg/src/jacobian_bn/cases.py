"""
Case check showing that v1 + w1 lies under no rank-one divisor of degree 3 on
a genus-4 loop of loops whose first single edge is longest.

For each position of the third chip w the divisor v1 + w1 + w, after at most
one firing of a genus-1 subgraph, is reduced at a vertex that it misses.
"""
import logging
from dataclasses import dataclass
from typing import Literal, Optional

from src.errors import CaseMismatch, UnsupportedGraph
from src.graph_core import ClosedSubgraph, Divisor, MetricGraph, Point
from src.graph_core.io import divisor_to_entries
from src.models import CaseReport
from src.rank import rank
from src.reduction import dhar_burn, fire_subgraph, reduce

logger = logging.getLogger(__name__)

_VERTICES = {"v1", "v2", "v3", "w1", "w2", "w3"}
_EDGES = {
    "e1": ("v1", "w1"), "e2": ("v2", "w2"), "e3": ("v3", "w3"),
    "p1a": ("w1", "v2"), "p1b": ("w1", "v2"),
    "p2a": ("w2", "v3"), "p2b": ("w2", "v3"),
    "p3a": ("w3", "v1"), "p3b": ("w3", "v1"),
}


@dataclass(frozen=True)
class CaseCheck:
    case: Literal[1, 2, 3]
    basepoint: Point
    divisor: Divisor
    fired: Optional[Divisor]
    reduced: Divisor
    rank: int

    def to_report(self) -> CaseReport:
        return CaseReport(
            case=self.case,
            basepoint=str(self.basepoint),
            divisor=divisor_to_entries(self.divisor),
            fired=divisor_to_entries(self.fired) if self.fired is not None else None,
            reduced=divisor_to_entries(self.reduced),
            rank=self.rank,
        )


def _check_shape(graph: MetricGraph):
    if set(graph.vertices) != _VERTICES or set(graph.edge_map) != set(_EDGES):
        raise UnsupportedGraph(f"{graph!r} is not a genus-4 loop of loops")
    for edge_id, ends in _EDGES.items():
        edge = graph.edge(edge_id)
        if (edge.tail, edge.head) != ends:
            raise UnsupportedGraph(f"Edge {edge_id} should run {ends[0]} -> {ends[1]}")
    lengths = [graph.edge(f"e{i}").length for i in (1, 2, 3)]
    if lengths[0] < lengths[1] or lengths[0] < lengths[2]:
        raise UnsupportedGraph("The single edge e1 must be the longest")


def classify(w: Point) -> int:
    if w.vertex in ("v2", "w2") or w.edge == "e2":
        return 2
    if w.vertex in ("v3", "w3") or w.edge == "e3":
        return 3
    return 1


def _offset_on(w: Point, edge_id: str, graph: MetricGraph):
    if w.vertex is not None:
        return graph.offsets_on(w, edge_id)[0]
    return w.offset


def _genus_one_firing(d: Divisor, w: Point, case: int) -> Optional[Divisor]:
    """Fire the genus-1 subgraph between the moving chip and w until w reaches a vertex."""
    graph = d.graph
    pairs = {2: ("p1a", "p1b"), 3: ("p3a", "p3b")}[case]
    if case == 2:
        offset = _offset_on(w, "e2", graph)
        segment = ClosedSubgraph(graph, {"e2": [(0, offset)]})
        t = graph.edge("e2").length - offset
    else:
        offset = _offset_on(w, "e3", graph)
        segment = ClosedSubgraph(graph, {"e3": [(offset, graph.edge("e3").length)]})
        t = offset
    if t == 0:
        return None
    return fire_subgraph(d, ClosedSubgraph.from_edges(graph, pairs).union(segment), t)


def w13_case_check(graph: MetricGraph, w: Point) -> CaseCheck:
    _check_shape(graph)
    w = graph.canonical(w)
    d = Divisor.of(graph, "v1", "w1").plus_point(w)
    case = classify(w)
    basepoint = Point(vertex={1: "v2", 2: "v3", 3: "v2"}[case])

    fired = _genus_one_firing(d, w, case) if case in (2, 3) else None
    candidate = fired if fired is not None else d
    if not dhar_burn(candidate, basepoint).is_reduced or candidate[basepoint] != 0:
        raise CaseMismatch(f"Case {case}: {candidate!r} is not {basepoint}-reduced without a chip there")
    reduced = reduce(d, basepoint).divisor
    if reduced != candidate:
        raise CaseMismatch(f"Case {case}: reduction gave {reduced!r}, expected {candidate!r}")
    r = rank(d)
    if r != 0:
        raise CaseMismatch(f"Case {case}: {d!r} has rank {r}")
    logger.info("[w13_case_check] w=%s: case %d, reduced at %s", w, case, basepoint)
    return CaseCheck(case, basepoint, d, fired, reduced, r)
