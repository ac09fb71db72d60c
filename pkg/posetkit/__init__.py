import sys
try:
    from .core import (Poset, Relation, compare, down_set, dual, element_height, from_relations, hasse, height,
                       induced, linear_extension, up_set)
    from .duality import (KWitness, SearchBudget, dilworth, k_witness_search, koenig_cover, max_matching,
                          maximum_chain, mirsky_levels, split_bipartite, width)
    from .decomposition import (GraphKind, Witness, combine_witnesses, graph_view, inc_components, lex_sum,
                                linear_sum)
    from .witness import Method, ak_witness, validate_k_witness, validate_witness
    from .recognition import (Pattern, find_pattern, inc_degree_profile, inc_neighborhood_height, is_semiorder,
                              semiorder_from_unit_intervals)
    from .lazy import bfs_layers, builtin_certificate, builtin_family, prefix, verify_omega_split
except Exception as e:
    print(e, file=sys.stderr)
    ...
__version__ = '0.1.0'
