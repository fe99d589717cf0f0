"""
Baker-Norine rank through rank-determining sets.

An effective divisor D' has D' - p equivalent to an effective divisor exactly
when its p-reduced form holds a chip at p, so subtracting the points of E one
at a time from an effective representative decides whether d - E is
equivalent to an effective divisor.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from math import comb
from typing import Iterable, Literal, Optional, Sequence, Tuple

from config.config import TBN_BUDGET
from src.errors import InvalidParameter, ResourceBudgetExceeded
from src.graph_core import Divisor, MetricGraph, Point, point_distances
from src.reduction import effective_representative, reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RankDeterminingSet:
    points: Tuple[Point, ...]
    provenance: Literal["vertex_closure", "user_supplied"] = "user_supplied"

    def __post_init__(self):
        if not self.points:
            raise InvalidParameter("A rank-determining set needs at least one point")


def bn_number(g: int, r: int, d: int) -> int:
    """Brill-Noether number g - (r + 1)(g - d + r)."""
    return g - (r + 1) * (g - d + r)


def rank_determining_set(graph: MetricGraph) -> RankDeterminingSet:
    points = {Point(vertex=v) for v in graph.vertices}
    points.update(graph.antipode(Point(vertex=e.tail), e.id) for e in graph.edges if e.is_loop)
    return RankDeterminingSet(tuple(sorted(points)), "vertex_closure")


def user_set(graph: MetricGraph, points: Iterable[Point]) -> RankDeterminingSet:
    return RankDeterminingSet(tuple(sorted({graph.canonical(p) for p in points})), "user_supplied")


# ============ Subtraction ============

def _subtract_point(effective: Divisor, p: Point) -> Optional[Divisor]:
    reduced = reduce(effective, p).divisor
    if reduced[p] < 1:
        return None
    return reduced.plus_point(p, -1)


def subtract_effective(d: Divisor, points: Sequence[Point]) -> Optional[Divisor]:
    """An effective divisor equivalent to d minus the given points, or None."""
    current = d if d.is_effective else effective_representative(d)
    for p in points:
        if current is None:
            return None
        current = _subtract_point(current, d.graph.canonical(p))
    return current


def _check_budget(size: int, level: int, budget: int):
    count = comb(size + level - 1, level)
    if count > budget:
        raise ResourceBudgetExceeded(
            f"Level {level} needs {count} subtractions from a set of {size} points (budget {budget})"
        )


def _level_search(rep: Divisor, points: Sequence[Point], top: int, budget: int) -> int:
    """Largest r <= top such that every multiset of r points can be subtracted from rep."""
    cache = {(): rep}
    for level in range(1, top + 1):
        _check_budget(len(points), level, budget)
        following = {}
        for multiset in combinations_with_replacement(points, level):
            child = _subtract_point(cache[multiset[:-1]], multiset[-1])
            if child is None:
                logger.debug("[a_rank] %r fails on %s", rep, [str(p) for p in multiset])
                return level - 1
            following[multiset] = child
        cache = following
    return top


def a_rank(d: Divisor, a: RankDeterminingSet, budget: int = TBN_BUDGET) -> int:
    rep = effective_representative(d)
    if rep is None:
        return -1
    points = sorted(d.graph.canonical(p) for p in a.points)
    return _level_search(rep, points, d.degree, budget)


def rank(d: Divisor, budget: int = TBN_BUDGET) -> int:
    g = d.graph.genus
    if d.degree < 0:
        return -1
    if d.degree > 2 * g - 2:
        return d.degree - g
    return a_rank(d, rank_determining_set(d.graph), budget)


def rank_at_least(d: Divisor, r: int, budget: int = TBN_BUDGET) -> bool:
    """rank(d) >= r, testing only multisets of size exactly r."""
    if r < 0:
        return True
    if d.degree < r:
        return False
    g = d.graph.genus
    if d.degree > 2 * g - 2:
        return d.degree - g >= r
    rep = effective_representative(d)
    if rep is None:
        return False
    points = rank_determining_set(d.graph).points
    _check_budget(len(points), r, budget)
    return all(
        subtract_effective(rep, multiset) is not None
        for multiset in combinations_with_replacement(points, r)
    )


def non_rank_determining_witness(a: RankDeterminingSet, d: Divisor) -> Optional[Tuple[int, int]]:
    """(a_rank, rank) when they differ, which shows a is not rank determining."""
    ra, r = a_rank(d, a), rank(d)
    if ra != r:
        logger.info("[non_rank_determining_witness] A-rank %d but rank %d for %r", ra, r, d)
        return ra, r
    return None


# ============ Reduced-divisor inspection ============

def contains_point_after_equivalence(d: Divisor, p: Point) -> bool:
    """Whether some effective divisor equivalent to d has a chip at p."""
    if d.degree < 1:
        return False
    rep = effective_representative(d)
    return rep is not None and reduce(rep, p).divisor[p] >= 1


def lexicographic_distance_profile(reduced: Divisor, q: Point) -> list[Fraction]:
    """Distances from q of the chips away from q, largest first, one entry per chip."""
    q = reduced.graph.canonical(q)
    chips = [(p, c) for p, c in reduced.items() if p != q]
    distances = point_distances(reduced.graph, q, [p for p, _ in chips])
    profile = []
    for p, c in chips:
        profile.extend([distances[p]] * c)
    return sorted(profile, reverse=True)
