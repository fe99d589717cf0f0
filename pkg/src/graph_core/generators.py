"""
Named metric graph families.

Vertex names follow the usual pictures: a loop of loops has v_i, w_i joined by
a single edge e_i and pairs of edges from w_i to v_{i+1}; a chain of loops has
loops between v_i and w_i joined by bridges.
"""
import inspect
import logging
from fractions import Fraction
from typing import Optional, Sequence

from src.errors import BadGenus, InvalidParameter, NonpositiveLength, UnknownFamily
from .graph import MetricGraph, build_graph
from .rationals import RationalLike, parse_rational

logger = logging.getLogger(__name__)


def _lengths(values: Sequence[RationalLike], count: int, label: str) -> list[Fraction]:
    parsed = [parse_rational(v) for v in values]
    if len(parsed) != count:
        raise BadGenus(f"Expected {count} {label}, got {len(parsed)}")
    for value in parsed:
        if value <= 0:
            raise NonpositiveLength(f"{label} must be positive, got {value}")
    return parsed


# ============ Families ============

def loop_of_loops(g: int, lengths: Sequence[RationalLike], pair_lengths: Optional[Sequence[RationalLike]] = None) -> MetricGraph:
    """
    Loop of loops of genus g >= 3.

    lengths are the g-1 single edges [v_i, w_i]; pair_lengths the g-1 lengths
    of the doubled edges leaving w_i (both edges of a pair share a length).
    """
    if g < 3:
        raise BadGenus(f"A loop of loops needs genus at least 3, got {g}")
    singles = _lengths(lengths, g - 1, "single edge lengths")
    pairs = _lengths(pair_lengths if pair_lengths is not None else [1] * (g - 1), g - 1, "pair lengths")

    n = g - 1
    vertices = [f"v{i}" for i in range(1, n + 1)] + [f"w{i}" for i in range(1, n + 1)]
    edges = []
    for i in range(1, n + 1):
        nxt = i % n + 1
        edges.append((f"e{i}", f"v{i}", f"w{i}", singles[i - 1]))
        edges.append((f"p{i}a", f"w{i}", f"v{nxt}", pairs[i - 1]))
        edges.append((f"p{i}b", f"w{i}", f"v{nxt}", pairs[i - 1]))
    return build_graph(vertices, edges, name=f"loop_of_loops_g{g}")


def degenerate_loop_of_loops(lengths: Sequence[RationalLike] = (1, 1, 1)) -> MetricGraph:
    """Three vertices, each pair joined by two edges of the given length."""
    a, b, c = _lengths(lengths, 3, "pair lengths")
    edges = [
        ("p12a", "v1", "v2", a), ("p12b", "v1", "v2", a),
        ("p23a", "v2", "v3", b), ("p23b", "v2", "v3", b),
        ("p31a", "v3", "v1", c), ("p31b", "v3", "v1", c),
    ]
    return build_graph(["v1", "v2", "v3"], edges, name="degenerate_loop_of_loops")


def yu_graph() -> MetricGraph:
    """Genus 3: single edges v0-v1 and w0-w1, doubled edges v_i-w_i, all of length 1."""
    edges = [
        ("ev", "v0", "v1", 1), ("ew", "w0", "w1", 1),
        ("p0a", "v0", "w0", 1), ("p0b", "v0", "w0", 1),
        ("p1a", "v1", "w1", 1), ("p1b", "v1", "w1", 1),
    ]
    return build_graph(["v0", "v1", "w0", "w1"], edges, name="yu_graph")


def chain_of_loops(
    g: int,
    loop_lengths: Optional[Sequence[Sequence[RationalLike]]] = None,
    bridge_lengths: Optional[Sequence[RationalLike]] = None,
) -> MetricGraph:
    """
    g loops joined in a chain by g-1 bridges.

    Loop i consists of edges a_i (length l_i) and b_i (length m_i) from v_i to
    w_i; bridge c_i runs from w_i to v_{i+1}. The default lengths (2g-2, 1)
    avoid the torsion ratios that make a chain of loops special.
    """
    if g < 1:
        raise BadGenus(f"A chain of loops needs genus at least 1, got {g}")
    if loop_lengths is None:
        loop_lengths = [(2 * g - 2 if g > 1 else 1, 1)] * g
    if len(loop_lengths) != g:
        raise BadGenus(f"Expected {g} loop length pairs, got {len(loop_lengths)}")
    bridges = _lengths(bridge_lengths if bridge_lengths is not None else [1] * (g - 1), g - 1, "bridge lengths")

    vertices = [f"v{i}" for i in range(1, g + 1)] + [f"w{i}" for i in range(1, g + 1)]
    edges = []
    for i, pair in enumerate(loop_lengths, start=1):
        top, bottom = _lengths(pair, 2, "loop arc lengths")
        edges.append((f"a{i}", f"v{i}", f"w{i}", top))
        edges.append((f"b{i}", f"v{i}", f"w{i}", bottom))
        if i < g:
            edges.append((f"c{i}", f"w{i}", f"v{i + 1}", bridges[i - 1]))
    return build_graph(vertices, edges, name=f"chain_of_loops_g{g}")


def loop_of_loops_scaled(t: RationalLike, lengths: Sequence[RationalLike] = (5, 4, 3)) -> MetricGraph:
    """
    Genus-4 loop of loops with single edges t*l_i and unit pairs; t = 0 gives
    the degenerate loop of loops with unit pairs.
    """
    t = parse_rational(t)
    if t < 0:
        raise NonpositiveLength(f"Sweep parameter must be nonnegative, got {t}")
    if t == 0:
        return degenerate_loop_of_loops((1, 1, 1))
    graph = loop_of_loops(4, [t * parse_rational(x) for x in lengths])
    return MetricGraph(graph.vertices, graph.edges, name=f"loop_of_loops_scaled_t{t}")


def circle(length: RationalLike = 1) -> MetricGraph:
    return build_graph(["v"], [("e", "v", "v", length)], name="circle")


def figure_eight(first: RationalLike = 1, second: RationalLike = 1) -> MetricGraph:
    return build_graph(["v"], [("e1", "v", "v", first), ("e2", "v", "v", second)], name="figure_eight")


def banana(k: int = 3, lengths: Optional[Sequence[RationalLike]] = None) -> MetricGraph:
    lengths = _lengths(lengths if lengths is not None else [1] * k, k, "edge lengths")
    edges = [(f"e{i}", "u", "v", lengths[i - 1]) for i in range(1, k + 1)]
    return build_graph(["u", "v"], edges, name=f"banana_{k}")


def dumbbell(first: RationalLike = 1, bridge: RationalLike = 1, second: RationalLike = 1) -> MetricGraph:
    edges = [("l1", "u", "u", first), ("br", "u", "v", bridge), ("l2", "v", "v", second)]
    return build_graph(["u", "v"], edges, name="dumbbell")


def tree(n: int = 5, length: RationalLike = 1) -> MetricGraph:
    """A path on n vertices."""
    if n < 1:
        raise BadGenus("A tree needs at least one vertex")
    vertices = [f"t{i}" for i in range(1, n + 1)]
    edges = [(f"b{i}", f"t{i}", f"t{i + 1}", length) for i in range(1, n)]
    return build_graph(vertices, edges, name=f"tree_{n}")


FAMILIES = {
    "loop_of_loops": loop_of_loops,
    "degenerate_loop_of_loops": degenerate_loop_of_loops,
    "yu_graph": yu_graph,
    "chain_of_loops": chain_of_loops,
    "loop_of_loops_scaled": loop_of_loops_scaled,
    "lol4_scaled": loop_of_loops_scaled,
    "circle": circle,
    "figure_eight": figure_eight,
    "banana": banana,
    "dumbbell": dumbbell,
    "tree": tree,
}


def generate(family: str, **params) -> MetricGraph:
    key = family.replace("-", "_")
    if key not in FAMILIES:
        raise UnknownFamily(f"Unknown graph family {family!r}; choose from {', '.join(sorted(FAMILIES))}")
    builder = FAMILIES[key]
    try:
        inspect.signature(builder).bind(**params)
    except TypeError as exc:
        raise InvalidParameter(f"Family {family!r}: {exc}") from exc
    graph = builder(**params)
    logger.info("[generate] %s -> %r", key, graph)
    return graph
