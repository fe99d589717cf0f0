import logging
import random
from typing import Optional, Tuple

from config.config import TBN_SEED
from src.graph_core import Divisor, MetricGraph, lattice_denominator
from src.errors import IncompatibleDenominator
from .finite import finite_rank, random_lattice_divisor, subdivide

logger = logging.getLogger(__name__)


def compare_ranks(d: Divisor, q: int) -> Tuple[int, int]:
    """(metric rank, finite-graph rank of the image on the 1/q subdivision)."""
    # imported here: the reduction package falls back on this one
    from src.rank import rank

    if q % lattice_denominator(d.graph, d.support) != 0:
        raise IncompatibleDenominator(f"Support of {d!r} is not on the 1/{q} lattice")
    finite, _ = subdivide(d.graph, q)
    return rank(d), finite_rank(finite.divisor(d))


def cross_check(d: Divisor, q: int) -> bool:
    metric, finite = compare_ranks(d, q)
    if metric != finite:
        logger.warning("[cross_check] rank mismatch for %r: metric %d, finite %d", d, metric, finite)
    return metric == finite


def cross_check_batch(graph: MetricGraph, q: int, trials: int, seed: int = TBN_SEED,
                      min_degree: int = -1, max_degree: Optional[int] = None) -> list[dict]:
    """Random lattice divisors compared trial by trial; returns the failures."""
    rng = random.Random(seed)
    if max_degree is None:
        max_degree = max(2 * graph.genus - 2, 0)
    failures = []
    for trial in range(trials):
        d = random_lattice_divisor(graph, q, rng.randint(min_degree, max_degree), rng)
        metric, finite = compare_ranks(d, q)
        if metric != finite:
            failures.append({"trial": trial, "divisor": repr(d), "metric": metric, "finite": finite})
    logger.info("[cross_check_batch] %d trials on %r, %d failures", trials, graph, len(failures))
    return failures
