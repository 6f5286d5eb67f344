"""Decide nonsingularity of vertex-weighted block graphs by pendant-block reduction."""
from .blocks import (
    Block,
    BlockCutForest,
    decompose,
    is_block_graph,
    non_cut_vertices,
    pendant_blocks,
)
from .determinant import (
    bridge_det,
    coalescence_det,
    det_exact,
    double_pendant_edge_is_singular,
    path_parity_check,
    pendant_edge_negation_holds,
    pendant_tree_replacement_check,
)
from .exceptions import (
    BlockGraphError,
    GraphFormatError,
    NotBlockGraphError,
    OracleSizeError,
    PreconditionError,
)
from .families import (
    CoalescedCliqueSpec,
    NmkSpec,
    TreeOfBlockGraphsSpec,
    check_mnktree_condition,
    check_tree_b31_conditions,
    enumerate_block_graphs,
    forest_has_perfect_matching,
    is_b31,
    make_coalesced_cliques,
    make_mnktree,
    make_nmk,
    make_pendant_edges_at_cuts,
    make_tree_of_block_graphs,
    predict_coalesced_singular,
    predict_nmk_singular,
    random_block_graph,
)
from .graph import (
    WeightedGraph,
    build_graph,
    coalesce,
    complete_graph,
    components,
    connect_by_edge,
    connect_by_path,
    induced_subgraph,
    path_graph,
)
from .reduction import (
    BlockClass,
    BlockTag,
    ReductionStep,
    Verdict,
    Witness,
    check_sufficient_tau,
    check_sufficient_zero_vertex,
    classify_pendant_block,
    decide,
    gamma_of,
    pb_contract,
    pb_delete,
    t_of,
    tau_of_block,
)
from .textio import format_graph, parse_graph, read_graph

__version__ = "0.1.0"

__all__ = [
    "Block",
    "BlockClass",
    "BlockCutForest",
    "BlockGraphError",
    "BlockTag",
    "bridge_det",
    "build_graph",
    "check_mnktree_condition",
    "check_sufficient_tau",
    "check_sufficient_zero_vertex",
    "check_tree_b31_conditions",
    "classify_pendant_block",
    "coalesce",
    "CoalescedCliqueSpec",
    "coalescence_det",
    "complete_graph",
    "components",
    "connect_by_edge",
    "connect_by_path",
    "decide",
    "decompose",
    "det_exact",
    "double_pendant_edge_is_singular",
    "enumerate_block_graphs",
    "forest_has_perfect_matching",
    "format_graph",
    "gamma_of",
    "GraphFormatError",
    "induced_subgraph",
    "is_b31",
    "is_block_graph",
    "make_coalesced_cliques",
    "make_mnktree",
    "make_nmk",
    "make_pendant_edges_at_cuts",
    "make_tree_of_block_graphs",
    "NmkSpec",
    "non_cut_vertices",
    "NotBlockGraphError",
    "OracleSizeError",
    "parse_graph",
    "path_graph",
    "path_parity_check",
    "pb_contract",
    "pb_delete",
    "pendant_blocks",
    "pendant_edge_negation_holds",
    "pendant_tree_replacement_check",
    "PreconditionError",
    "predict_coalesced_singular",
    "predict_nmk_singular",
    "random_block_graph",
    "read_graph",
    "ReductionStep",
    "t_of",
    "tau_of_block",
    "TreeOfBlockGraphsSpec",
    "Verdict",
    "WeightedGraph",
    "Witness",
]
