"""
Brill-Noether rank at a grid resolution.

The Brill-Noether rank is the largest rho such that every effective E of
degree r + rho lies under some effective D of degree d and rank at least r.
Every rank-r class of the scan is tested for domination of each lattice E,
level by level, and the first E that no class dominates is kept as the
witness. Within a level, supplied hints come first, then sums of distinct
lattice points in lexicographic order, then sums with repeated points.
"""
import logging
from dataclasses import dataclass
from itertools import combinations, combinations_with_replacement
from typing import Iterable, Iterator, Literal, Optional, Sequence, Tuple

from config.config import TBN_BUDGET, TBN_JOBS
from src.graph_core import Divisor, MetricGraph
from src.graph_core.io import divisor_to_entries
from src.models import CertificateReport
from src.rank import subtract_effective
from src.reduction import canonical_basepoint
from .scan import WrdScan, check_budget, scan_Wrd

logger = logging.getLogger(__name__)

WitnessSource = Literal["hint", "distinct_points", "repeated_points", "degree_bound"]


@dataclass(frozen=True)
class BnRankCertificate:
    r: int
    d: int
    q: int
    rho: int
    mode: Literal["verified_at_resolution", "falsified_with_witness"]
    witness: Optional[Divisor] = None
    witness_source: Optional[WitnessSource] = None

    def to_report(self) -> CertificateReport:
        return CertificateReport(
            r=self.r,
            d=self.d,
            q=self.q,
            rho=self.rho,
            mode=self.mode,
            witness=divisor_to_entries(self.witness) if self.witness is not None else None,
            witness_source=self.witness_source,
        )


def is_dominated(e: Divisor, classes: Iterable[Divisor]) -> bool:
    """Whether some class has an effective representative containing e."""
    points = e.points()
    return any(subtract_effective(c, points) is not None for c in classes)


def _candidates(graph: MetricGraph, lattice: Sequence, level: int,
                hints: Sequence[Divisor]) -> Iterator[Tuple[Divisor, WitnessSource]]:
    for hint in hints:
        if hint.degree == level and hint.is_effective:
            yield hint, "hint"
    for combo in combinations(lattice, level):
        yield Divisor.from_points(graph, combo), "distinct_points"
    for combo in combinations_with_replacement(lattice, level):
        if len(set(combo)) < level:
            yield Divisor.from_points(graph, combo), "repeated_points"


def bn_rank(graph: MetricGraph, r: int, d: int, q: int, budget: int = TBN_BUDGET,
            jobs: int = TBN_JOBS, scan: Optional[WrdScan] = None,
            hints: Sequence[Divisor] = ()) -> BnRankCertificate:
    """
    Certificate for the Brill-Noether rank at resolution q.

    hints are effective divisors tried before the sweep of their degree, so
    a known witness is reported when it is one.
    """
    scan = scan or scan_Wrd(graph, r, d, q, budget=budget, jobs=jobs)
    if not scan.classes:
        logger.info("[bn_rank] W^%d_%d is empty at q=%d", r, d, q)
        return BnRankCertificate(r, d, q, -1, "verified_at_resolution")

    classes = scan.keys
    lattice = graph.lattice_points(q)
    for level in range(r + 1, d + 1):
        check_budget(len(lattice), level, budget, label="test divisors")
        for e, source in _candidates(graph, lattice, level, hints):
            if not is_dominated(e, classes):
                logger.info("[bn_rank] %r (%s) lies under no class of W^%d_%d", e, source, r, d)
                return BnRankCertificate(r, d, q, level - r - 1, "falsified_with_witness", e, source)

    # no divisor of degree d contains one of degree d + 1
    witness = Divisor.zero(graph).plus_point(canonical_basepoint(graph), d + 1)
    return BnRankCertificate(r, d, q, d - r, "falsified_with_witness", witness, "degree_bound")
