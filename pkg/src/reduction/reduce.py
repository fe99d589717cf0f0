"""
q-reduced divisors and linear equivalence.

Divisors that are effective away from q are reduced by the metric burning
loop: burn from q, fire the unburnt set for the longest event-free time,
repeat. Anything else, or a loop that runs past its step budget, is reduced
on the unit subdivision by the finite-graph oracle.
"""
import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Optional

from config.config import TBN_REDUCE_STEPS
from src.graph_core import Divisor, MetricGraph, Point, lattice_denominator
from src.oracle.finite import finite_reduce, subdivide
from .burn import dhar_burn
from .firing import _fire, max_firing_time

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class ReducedForm:
    divisor: Divisor
    basepoint: Point

    @property
    def coefficient_at_basepoint(self) -> int:
        return self.divisor[self.basepoint]


def canonical_basepoint(graph: MetricGraph) -> Point:
    return Point(vertex=graph.base_vertex)


@lru_cache(maxsize=200_000)
def _metric_reduce(d: Divisor, q: Point, max_steps: int) -> Optional[Divisor]:
    current = d
    for step in range(max_steps):
        burn = dhar_burn(current, q)
        if burn.is_reduced:
            logger.debug("[reduce] %r reduced at %s after %d firings", d, q, step)
            return current
        t = max_firing_time(current, burn.unburnt, obstacles=[q])
        current = _fire(current, burn.unburnt, t)
    return None


def oracle_reduce(d: Divisor, q: Point) -> Divisor:
    denominator = lattice_denominator(d.graph, list(d.support) + [q])
    finite, _ = subdivide(d.graph, denominator)
    reduced = finite_reduce(finite.divisor(d), finite.vertex_of(q))
    return finite.to_metric(reduced)


def reduce(d: Divisor, q: Point, max_steps: int = TBN_REDUCE_STEPS) -> ReducedForm:
    """The unique q-reduced divisor linearly equivalent to d."""
    q = d.graph.canonical(q)
    if d.is_effective_away_from(q):
        result = _metric_reduce(d, q, max_steps)
        if result is not None:
            return ReducedForm(result, q)
        logger.warning("[reduce] metric loop passed %d steps for %r; using the finite-graph oracle", max_steps, d)
    return ReducedForm(oracle_reduce(d, q), q)


def class_key(d: Divisor) -> Divisor:
    """Reduced form at the canonical basepoint; equal keys mean equivalent divisors."""
    return reduce(d, canonical_basepoint(d.graph)).divisor


def is_equivalent(d1: Divisor, d2: Divisor) -> bool:
    if d1.degree != d2.degree:
        return False
    return class_key(d1) == class_key(d2)


def effective_representative(d: Divisor) -> Optional[Divisor]:
    if d.degree < 0:
        return None
    reduced = reduce(d, canonical_basepoint(d.graph))
    if reduced.coefficient_at_basepoint < 0:
        return None
    return reduced.divisor
