"""Exact independent-set counting and bound certification for regular graphs."""

from .bounds import (
    BoundParams,
    BoundReport,
    alekseev_bound,
    alekseev_weighted_bound,
    alon_bound,
    binary_entropy,
    c_lambda_from_c,
    conjecture_bound,
    conjecture_holds_exact,
    fixed_size_bound,
    improved_count_bound,
    improved_fixed_size_bound,
    improved_weighted_bound,
    independent_first_bound,
    independent_first_holds_exact,
    kahn_bound,
    kdd_exponent_expansion,
    kdd_weighted_bound,
    order_bound,
    sapozhenko_simple_bound,
    weighted_conjecture_holds_exact,
    weighted_kahn_bound,
)
from .cover import (
    CoverCertificate,
    build_cover,
    cover_count_bound,
    cover_count_bound_relaxed,
    phi_default,
    sapozhenko_alpha_bound,
    verify_cover,
)
from .graphs import (
    Graph,
    GraphError,
    GraphStats,
    build_graph,
    disjoint_union,
    gen_complete,
    gen_complete_bipartite,
    gen_cycle,
    gen_petersen,
    gen_random_regular,
    graph_stats,
    is_independent,
    mask_of,
    mask_vertices,
    max_independent_set,
    parse_graph6,
    write_graph6,
)
from .polynomial import (
    IndependencePolynomial,
    brute_force_polynomial,
    count_independent_sets,
    evaluate,
    independence_polynomial,
    kdd_polynomial,
    kdd_union_polynomial,
    poly_product,
)

__version__ = "0.1.0"
