"""blockspectra: clique-chain graph families and their Fiedler vectors.

Construct block-path and block-starlike graphs, compute algebraic
connectivity and Fiedler eigenspaces with a self-contained symmetric
eigensolver, classify graphs into the two Fiedler sign-pattern cases by two
independent methods, and verify the structural identities relating them over
parameter sweeps.
"""

__version__ = "0.1.0"

from .blocks import (
    BlockDecomposition,
    StarlikeProfile,
    block_decomposition,
    block_graph_vertex_connectivity,
    block_path_shape,
    is_block_graph,
    starlike_profile,
)
from .fileio import (
    format_dot,
    format_edge_list,
    load_graph,
    parse_edge_list,
    save_graph,
)
from .generators import (
    block_path,
    block_path_articulation_labels,
    block_starlike,
    broom_tree,
    center_label,
    complete_graph,
    path_graph,
    star_graph,
)
from .graph import (
    Graph,
    TwinPartition,
    build_graph,
    center,
    coalesce,
    connected_components,
    delete_vertex_components,
    distance,
    eccentricities,
    induced_subgraph,
    is_connected,
    true_twin_partition,
)
from .linalg import (
    ConvergenceError,
    EigenDecomposition,
    NotPositiveDefiniteError,
    PerronData,
    eig_sym,
    laplacian,
    perron_of_inverse,
    principal_submatrix,
    spd_solve,
)
from .spectral import (
    CaseClassification,
    ClassificationError,
    PerronReport,
    SpectralSummary,
    TreeType,
    VertexPerronData,
    classify_perron,
    classify_structural,
    perron_fiedler_basis,
    spectral_summary,
    tree_type,
    vertex_perron_data,
)
from .verify import (
    TheoremReport,
    broom_type_survey,
    check_coalescence,
    check_kirkland_identities,
    check_path_parity,
    check_starlike_case_a,
    check_starlike_equal_arms,
    check_twins_lemma,
    parse_grid,
    reports_to_csv,
    reports_to_json,
    run_theorem,
    sweep,
)

__all__ = [
    "__version__",
    "BlockDecomposition",
    "CaseClassification",
    "ClassificationError",
    "ConvergenceError",
    "EigenDecomposition",
    "Graph",
    "NotPositiveDefiniteError",
    "PerronData",
    "PerronReport",
    "SpectralSummary",
    "StarlikeProfile",
    "TheoremReport",
    "TreeType",
    "TwinPartition",
    "VertexPerronData",
    "block_decomposition",
    "block_graph_vertex_connectivity",
    "block_path",
    "block_path_articulation_labels",
    "block_path_shape",
    "block_starlike",
    "broom_tree",
    "broom_type_survey",
    "build_graph",
    "center",
    "center_label",
    "check_coalescence",
    "check_kirkland_identities",
    "check_path_parity",
    "check_starlike_case_a",
    "check_starlike_equal_arms",
    "check_twins_lemma",
    "classify_perron",
    "classify_structural",
    "coalesce",
    "complete_graph",
    "connected_components",
    "delete_vertex_components",
    "distance",
    "eccentricities",
    "eig_sym",
    "format_dot",
    "format_edge_list",
    "induced_subgraph",
    "is_block_graph",
    "is_connected",
    "laplacian",
    "load_graph",
    "parse_edge_list",
    "parse_grid",
    "path_graph",
    "perron_fiedler_basis",
    "perron_of_inverse",
    "principal_submatrix",
    "reports_to_csv",
    "reports_to_json",
    "run_theorem",
    "save_graph",
    "spd_solve",
    "spectral_summary",
    "star_graph",
    "starlike_profile",
    "sweep",
    "tree_type",
    "true_twin_partition",
    "vertex_perron_data",
]
