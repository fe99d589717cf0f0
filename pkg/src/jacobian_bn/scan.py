"""
Exact grid scans of Brill-Noether loci.

Every class of degree d and rank at least r contains a divisor r*b + E with E
effective, where b is the canonical basepoint; scanning E over the 1/q
lattice therefore reaches every such class with a lattice representative.
Classes are deduplicated by their reduced form at b, and two classes are
adjacent when their representatives differ by moving one chip one grid step.
"""
import logging
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement
from math import comb
from typing import Optional, Tuple

from config.config import TBN_BUDGET, TBN_JOBS, TBN_SEED
from src.errors import IncompatibleDenominator, ResourceBudgetExceeded
from src.graph_core import Divisor, MetricGraph
from src.graph_core.io import divisor_to_entries
from src.models import ClassRecord, ScanReport
from src.rank import rank_at_least
from src.reduction import canonical_basepoint, class_key, effective_representative
from .jacobian import JacobianBasis, TorusPoint, abel_jacobi, jacobian_basis, lattice_rank

logger = logging.getLogger(__name__)


@dataclass
class WrdScan:
    graph: MetricGraph
    r: int
    d: int
    q: int
    classes: list[Tuple[Divisor, TorusPoint]] = field(default_factory=list)
    adjacency: list[Tuple[int, int]] = field(default_factory=list)
    dim_estimate: int = 0

    @property
    def keys(self) -> list[Divisor]:
        return [key for key, _ in self.classes]

    def to_report(self) -> ScanReport:
        return ScanReport(
            r=self.r,
            d=self.d,
            q=self.q,
            classes=[ClassRecord(reduced=divisor_to_entries(key), aj=aj.as_strings()) for key, aj in self.classes],
            adjacency=self.adjacency,
            dim_estimate=self.dim_estimate,
        )


# ============ Worker tasks ============
# top level so that process pools can pickle them

def _key_task(candidate: Divisor) -> Divisor:
    return class_key(candidate)


def _rank_task(args: Tuple[Divisor, int]) -> bool:
    key, r = args
    return rank_at_least(key, r)


def _map(fn, items: list, jobs: int) -> list:
    if jobs <= 1 or len(items) < 2:
        return [fn(item) for item in items]
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=max(1, len(items) // (4 * jobs))))


# ============ Enumeration ============

def check_budget(lattice_size: int, degree: int, budget: int, label: str = "candidates"):
    count = comb(lattice_size + degree - 1, degree) if degree > 0 else 1
    if count > budget:
        raise ResourceBudgetExceeded(
            f"{count} {label} of degree {degree} on {lattice_size} lattice points (budget {budget})"
        )
    return count


def lattice_divisors(graph: MetricGraph, q: int, degree: int, budget: int = TBN_BUDGET) -> list[Divisor]:
    """All effective divisors of the given degree on the 1/q lattice, in lexicographic order."""
    lattice = graph.lattice_points(q)
    check_budget(len(lattice), degree, budget)
    return [Divisor.from_points(graph, combo) for combo in combinations_with_replacement(lattice, degree)]


def _moves(e: Divisor, q: int) -> list[Divisor]:
    moved = []
    for point in e.support:
        for neighbor in e.graph.lattice_neighbors(point, q):
            moved.append(e.plus_point(point, -1).plus_point(neighbor))
    return moved


def scan_Wrd(graph: MetricGraph, r: int, d: int, q: int, budget: int = TBN_BUDGET,
             jobs: int = TBN_JOBS, basis: Optional[JacobianBasis] = None) -> WrdScan:
    if q < 1:
        raise IncompatibleDenominator(f"Grid denominator must be a positive integer, got {q}")
    scan = WrdScan(graph, r, d, q)
    if d < 0 or r > d or r < 0:
        return scan

    base = canonical_basepoint(graph)
    lattice = graph.lattice_points(q)
    total = check_budget(len(lattice), d - r, budget)
    logger.info("--- Scanning W^%d_%d at q=%d: %d candidates ---", r, d, q, total)

    tails = lattice_divisors(graph, q, d - r, budget)
    keys = _map(_key_task, [tail.plus_point(base, r) for tail in tails], jobs)
    key_of = dict(zip(tails, keys))

    distinct = sorted(set(keys), key=lambda k: k.sort_key())
    if r == 0:
        passing = distinct
    else:
        verdicts = _map(_rank_task, [(key, r) for key in distinct], jobs)
        passing = [key for key, ok in zip(distinct, verdicts) if ok]
    index = {key: i for i, key in enumerate(passing)}

    edges = set()
    for tail, key in key_of.items():
        if key not in index:
            continue
        for moved in _moves(tail, q):
            other = key_of.get(moved)
            if other is not None and other in index and other != key:
                edges.add(tuple(sorted((index[key], index[other]))))
    scan.adjacency = sorted(edges)

    basis = basis or jacobian_basis(graph)
    scan.classes = [(key, abel_jacobi(key, basis)) for key in passing]
    scan.dim_estimate = _dimension_estimate(scan)
    logger.info("[scan_Wrd] %d classes, %d adjacencies, dimension estimate %d",
                len(scan.classes), len(scan.adjacency), scan.dim_estimate)
    return scan


def _dimension_estimate(scan: WrdScan) -> int:
    """Largest rank of the torus directions from a class to its grid neighbours."""
    neighbors: dict = {i: [] for i in range(len(scan.classes))}
    for i, j in scan.adjacency:
        neighbors[i].append(j)
        neighbors[j].append(i)
    best = 0
    for i, others in neighbors.items():
        here = scan.classes[i][1]
        vectors = [(scan.classes[j][1] - here).lifted() for j in others]
        best = max(best, lattice_rank(vectors))
    return best


# ============ Effective locus ============

def effective_locus_scan(graph: MetricGraph, d: int, q: int = 1, samples: int = 200,
                         seed: int = TBN_SEED) -> list[Tuple[Divisor, bool]]:
    """
    Sampled classes of degree d as (reduced key, has an effective representative).

    Samples are d*b + sum of g differences of lattice points, which reach
    every lattice class of degree d.
    """
    rng = random.Random(seed)
    lattice = graph.lattice_points(q)
    base = canonical_basepoint(graph)
    seen: dict = {}
    for _ in range(samples):
        sample = Divisor.zero(graph).plus_point(base, d)
        for _ in range(graph.genus):
            sample = sample.plus_point(rng.choice(lattice)).plus_point(rng.choice(lattice), -1)
        key = class_key(sample)
        if key not in seen:
            seen[key] = effective_representative(key) is not None
    logger.info("[effective_locus_scan] %d distinct classes, %d effective",
                len(seen), sum(seen.values()))
    return sorted(seen.items(), key=lambda item: item[0].sort_key())
