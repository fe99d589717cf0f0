from .rationals import parse_rational, format_rational, parse_rational_list
from .graph import (Point,
                    Edge,
                    MetricGraph,
                    build_graph,
                    check_description,
                    validate,
                    genus,
                    scale_graph,
                    point_distances)
from .divisor import Divisor, canonical_divisor, point_divisor, lattice_denominator
from .subgraph import ClosedSubgraph
from .functions import PLFunction, div_of_pl, pl_from_lattice_values, firing_function
from .contraction import contract_separating_edges, separating_edges, PointMap
from .generators import (generate,
                         loop_of_loops,
                         degenerate_loop_of_loops,
                         yu_graph,
                         chain_of_loops,
                         loop_of_loops_scaled,
                         circle,
                         figure_eight,
                         banana,
                         dumbbell,
                         tree)
from .io import load_graph, dump_graph, load_divisor, dump_divisor, divisor_to_json, divisor_to_entries
