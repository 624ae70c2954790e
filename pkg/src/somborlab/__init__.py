"""somborlab: extremal graphs for degree-based indices, with an exhaustive oracle.

Construct the canonical extremal graphs of pendant degree sequences (greedy
tree, BFS-unicyclic, BFS-bicyclic), evaluate the general Sombor index and
arbitrary connectivity functions, recognize BFS-graphs, and verify the
extremality/majorization claims by exhaustive enumeration at desk scale.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .bfs import (
    BfsWitness,
    bfs_distances,
    is_bfs_graph,
    is_special_extremal_bfs,
    witness_violation,
)
from .construct import (
    ConstructionResult,
    Objective,
    bfs_bicyclic,
    bfs_unicyclic,
    extremal_graph,
    greedy_tree,
    split_almost_equal,
)
from .graphs import (
    CanonicalCode,
    DegreeSequence,
    Graph,
    canonical_code,
    canonical_form,
    degree_sequence_of,
    format_degree_sequence,
    format_edge_list,
    format_graph6,
    is_connected,
    parse_degree_sequence,
    parse_edge_list,
    parse_graph6,
    reduced_graph,
    to_dot,
    validate_connected_c_cyclic,
)
from .indices import (
    AlphaRegime,
    BivariateFunction,
    GridSpec,
    check_escalating,
    check_good_escalating,
    classify_alpha,
    connectivity_function,
    sombor_general,
)
from .oracle import (
    Caps,
    Deadline,
    ExtremaReport,
    MajorizationVerdict,
    enumerate_gamma,
    generate_c_cyclic_sequences,
    is_majorized,
    load_caps,
    objective_for_alpha,
    oracle_extrema,
    verify_enumeration_cross_check,
    verify_special_bfs_existence,
    verify_theorem2,
    verify_theorem3,
)

__version__ = "1.0.0"

__all__ = [
    "AlphaRegime",
    "BfsWitness",
    "BivariateFunction",
    "CanonicalCode",
    "Caps",
    "ConstructionResult",
    "Deadline",
    "DegreeSequence",
    "ExtremaReport",
    "Graph",
    "GridSpec",
    "KERNEL_BACKEND",
    "MajorizationVerdict",
    "Objective",
    "bfs_bicyclic",
    "bfs_distances",
    "bfs_unicyclic",
    "canonical_code",
    "canonical_form",
    "check_escalating",
    "check_good_escalating",
    "classify_alpha",
    "connectivity_function",
    "degree_sequence_of",
    "enumerate_gamma",
    "extremal_graph",
    "format_degree_sequence",
    "format_edge_list",
    "format_graph6",
    "generate_c_cyclic_sequences",
    "greedy_tree",
    "is_bfs_graph",
    "is_connected",
    "is_majorized",
    "is_special_extremal_bfs",
    "load_caps",
    "objective_for_alpha",
    "oracle_extrema",
    "parse_degree_sequence",
    "parse_edge_list",
    "parse_graph6",
    "reduced_graph",
    "sombor_general",
    "split_almost_equal",
    "to_dot",
    "validate_connected_c_cyclic",
    "verify_enumeration_cross_check",
    "verify_special_bfs_existence",
    "verify_theorem2",
    "verify_theorem3",
    "witness_violation",
]
