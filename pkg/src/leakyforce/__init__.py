"""Zero forcing and l-leaky forcing on small graphs and their direct products."""

from .graph import (
    Graph,
    GraphError,
    GraphFamilySpec,
    GridLabeling,
    build_base_graph,
    cartesian_product,
    complete_graph,
    cycle_graph,
    direct_product,
    hypercube_graph,
    load_graph,
    path_graph,
    save_graph,
)
from .forcing import ForcingChronicle, closure, closure_mask, is_zero_forcing_set, replay
from .verify import VerificationReport, containment_check, count_failing_placements, is_leaky_forcing_set
from .search import SearchResult, heuristic_leaky_set_search, min_leaky_forcing_number
from .constructions import (
    ConstructedSet,
    construct,
    construct_b1_kn_ct,
    construct_b1_kn_kn,
    construct_b1_kn_pt,
    load_q5_candidate,
)

__all__ = [
    "ConstructedSet",
    "ForcingChronicle",
    "Graph",
    "GraphError",
    "GraphFamilySpec",
    "GridLabeling",
    "SearchResult",
    "VerificationReport",
    "build_base_graph",
    "cartesian_product",
    "closure",
    "closure_mask",
    "complete_graph",
    "construct",
    "construct_b1_kn_ct",
    "construct_b1_kn_kn",
    "construct_b1_kn_pt",
    "containment_check",
    "count_failing_placements",
    "cycle_graph",
    "direct_product",
    "heuristic_leaky_set_search",
    "hypercube_graph",
    "is_leaky_forcing_set",
    "is_zero_forcing_set",
    "load_graph",
    "load_q5_candidate",
    "min_leaky_forcing_number",
    "path_graph",
    "replay",
    "save_graph",
]
