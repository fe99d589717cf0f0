from .burn import BurnResult, Segment, augmented_segments, dhar_burn, is_reduced
from .firing import fire_subgraph, max_firing_time
from .reduce import (ReducedForm,
                     reduce,
                     is_equivalent,
                     effective_representative,
                     class_key,
                     canonical_basepoint,
                     oracle_reduce)
