"""pathforge: pathwidth, minor models, and certificate-checked extraction of
unavoidable induced structures in graphs of large pathwidth."""

from .budget import Budget, BudgetExhausted
from .graph import (
    Graph,
    Layering,
    RootedTree,
    bfs_layering,
    complete_bipartite_graph,
    complete_graph,
    contract_sets,
    cycle_graph,
    girth,
    induced_subgraph,
    line_graph,
    path_graph,
    star_graph,
)
from .generators import (
    SubdivisionCert,
    WattleCertificate,
    binary_tree_plus,
    complete_binary_tree,
    hat_tree,
    k_ary_tree,
    net_graph_replacement,
    subdivide,
    validate_subdivision,
    validate_wattle,
    wattle,
)
from .width import (
    PathDecomposition,
    find_deg3_subgraph,
    pathwidth_exact,
    pathwidth_lower_bound_by_minor,
    tree_pathwidth,
    validate_path_decomposition,
)
from .patterns import (
    Embedding,
    LineGraphEmbedding,
    SubdivisionEmbedding,
    find_induced_subdivision,
    find_induced_subgraph,
    is_cbt_subdivision,
    is_cbt_subdivision_line_graph,
    ramsey_detect,
    recognize,
    validate_embedding,
    validate_line_graph_embedding,
    validate_subdivision_embedding,
)
from .minors import (
    Distance5Partition,
    MinorModel,
    ball_contract,
    distance5_partition,
    find_minor_model,
    identity_model,
    is_sparsifiable,
    model_contract,
    repair_to_induced_model,
    sparsifiable_restriction,
    validate_distance5,
    validate_model,
)
from .extract import (
    DecisionResult,
    PipelineReport,
    VerticalEmbedding,
    bounded_degree_pipeline,
    cbt_minor_height_for,
    clean_fork,
    decide_bounded_pathwidth,
    induced_minor_to_induced_subgraph,
    minor_free_pipeline,
    minor_to_wattle,
    mono_height_for,
    monochromatic_cbt,
    validate_vertical_embedding,
    wattle_to_subgraph,
)

__version__ = "0.1.0"
