"""Graphs with a prescribed radius, diameter and center."""

from .constructions import (
    ConstructionRecipe,
    Kind,
    LabeledGraph,
    Prescription,
    attach_paths_uniform,
    fig2_gadget,
    fig3_gadget,
    hedetniemi,
    join_solution,
    single_center_template,
    substitute_center,
    theorem4_build,
)
from .formats import emit_graph_output, from_graph6, parse_graph_input, to_graph6
from .graph import (
    UNREACHABLE,
    DistanceMatrix,
    EccentricityProfile,
    Graph,
    all_pairs_distances,
    attach_path,
    complete_graph,
    cycle_graph,
    disjoint_union,
    empty_graph,
    from_edge_list,
    induced_subgraph,
    join,
    metric_profile,
    path_graph,
    petersen_graph,
)
from .isomorphism import are_isomorphic, brute_force_isomorphic, center_matches
from .search import (
    Mode,
    SearchQuery,
    SearchResult,
    classify_d_equals_2r,
    enumerate_connected_graphs,
    find_single_center_graphs,
)
from .verification import (
    VerificationReport,
    check_join_characterization,
    is_self_centered,
    oracle_crosscheck,
    verify_prescription,
    verify_single_center,
)

__version__ = "0.1.0"
