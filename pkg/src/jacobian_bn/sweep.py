import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

import pandas as pd

from config.config import TBN_BUDGET, TBN_JOBS
from src.errors import TropicalError
from src.graph_core import MetricGraph, generate
from src.graph_core.rationals import RationalLike, format_rational, parse_rational
from .bn_rank import bn_rank
from .scan import scan_Wrd

logger = logging.getLogger(__name__)

COLUMNS = ["t", "classes", "dim_estimate", "rho"]


@dataclass
class FamilySpec:
    """
    A one-parameter family of graphs.

    parameter names the generator keyword that receives each sweep value;
    None repeats the same graph for every value.
    """
    family: str
    ts: Sequence[RationalLike]
    params: dict = field(default_factory=dict)
    parameter: Optional[str] = "t"

    def instantiate(self, t: Fraction) -> MetricGraph:
        params = dict(self.params)
        if self.parameter is not None:
            params[self.parameter] = t
        return generate(self.family, **params)


def family_sweep(spec: FamilySpec, r: int, d: int, q: int, budget: int = TBN_BUDGET,
                 jobs: int = TBN_JOBS, skip_errors: bool = False) -> pd.DataFrame:
    rows = []
    for raw in spec.ts:
        t = parse_rational(raw)
        try:
            graph = spec.instantiate(t)
            scan = scan_Wrd(graph, r, d, q, budget=budget, jobs=jobs)
            certificate = bn_rank(graph, r, d, q, budget=budget, jobs=jobs, scan=scan)
        except TropicalError as exc:
            if not skip_errors:
                raise
            logger.warning("[family_sweep] skipping t=%s: %s: %s", format_rational(t), type(exc).__name__, exc)
            continue
        rows.append({
            "t": format_rational(t),
            "classes": len(scan.classes),
            "dim_estimate": scan.dim_estimate,
            "rho": certificate.rho,
        })
        logger.info("[family_sweep] t=%s done", format_rational(t))
    return pd.DataFrame(rows, columns=COLUMNS)
