"""vcrit: a workbench for exact coloring, vertex-criticality and the
5-cycle neighborhood structure of small hereditary graph classes."""

from .canon import are_isomorphic, canonical_form, canonical_labeling
from .certificates import DominatedPair, find_comparable_pair, find_dominated_pair
from .coloring import (
    CriticalityReport,
    chromatic_number,
    clique_number,
    is_k_edge_critical,
    is_k_vertex_critical,
    is_q_colorable,
)
from .decomposition import (
    AnchorReport,
    ClaimReport,
    Decomposition,
    SClass,
    all_hold,
    check_claim,
    decompose,
    verify_all,
)
from .formats import (
    GraphFormatError,
    emit_adjacency_list,
    emit_graph6,
    parse_adjacency_list,
    parse_graph6,
    read_graphs,
)
from .generate import GenerationSpec, SearchResult, generate_class, search_critical
from .graphs import (
    Graph,
    SetRelation,
    complete_graph,
    connected_components,
    cycle_graph,
    empty_graph,
    induced_subgraph,
    is_connected,
    is_homogeneous,
    open_set_neighborhood,
    path_graph,
    relation_of,
)
from .patterns import (
    CRITICAL_FAMILY,
    Pattern,
    all_induced_c5,
    classify_family,
    find_induced,
    is_free,
    pattern_by_name,
)

__all__ = [
    "AnchorReport",
    "ClaimReport",
    "CRITICAL_FAMILY",
    "CriticalityReport",
    "Decomposition",
    "DominatedPair",
    "GenerationSpec",
    "Graph",
    "GraphFormatError",
    "Pattern",
    "SClass",
    "SearchResult",
    "SetRelation",
    "all_hold",
    "all_induced_c5",
    "are_isomorphic",
    "canonical_form",
    "canonical_labeling",
    "check_claim",
    "chromatic_number",
    "classify_family",
    "clique_number",
    "complete_graph",
    "connected_components",
    "cycle_graph",
    "decompose",
    "emit_adjacency_list",
    "emit_graph6",
    "empty_graph",
    "find_comparable_pair",
    "find_dominated_pair",
    "find_induced",
    "generate_class",
    "induced_subgraph",
    "is_connected",
    "is_free",
    "is_homogeneous",
    "is_k_edge_critical",
    "is_k_vertex_critical",
    "is_q_colorable",
    "open_set_neighborhood",
    "parse_adjacency_list",
    "parse_graph6",
    "path_graph",
    "pattern_by_name",
    "read_graphs",
    "relation_of",
    "search_critical",
    "verify_all",
]
