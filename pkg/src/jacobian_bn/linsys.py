import logging

from config.config import TBN_BUDGET
from src.graph_core import Divisor
from src.reduction import class_key
from .scan import lattice_divisors

logger = logging.getLogger(__name__)


def linsys_enum(d: Divisor, q: int, budget: int = TBN_BUDGET) -> list[Divisor]:
    """Lattice-supported effective divisors equivalent to d, sorted canonically."""
    if d.degree < 0:
        return []
    target = class_key(d)
    members = [e for e in lattice_divisors(d.graph, q, d.degree, budget) if class_key(e) == target]
    logger.info("[linsys_enum] %d members of |%r| at q=%d", len(members), d, q)
    return sorted(members, key=lambda e: e.sort_key())
