from .finite import (FiniteGraph,
                     FiniteDivisor,
                     subdivide,
                     finite_burn,
                     finite_reduce,
                     finite_rank,
                     finite_canonical_divisor,
                     random_lattice_divisor)
from .cross_check import cross_check, compare_ranks, cross_check_batch
