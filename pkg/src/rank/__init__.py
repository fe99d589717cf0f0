from .rank import (RankDeterminingSet,
                   bn_number,
                   rank_determining_set,
                   user_set,
                   subtract_effective,
                   a_rank,
                   rank,
                   rank_at_least,
                   non_rank_determining_witness,
                   contains_point_after_equivalence,
                   lexicographic_distance_profile)
from .special import OpenSetDescription, is_special_open
