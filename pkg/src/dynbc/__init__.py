"""Dynamic betweenness centrality over exact shortest-path DAG state."""

from .graph import (
    DIST_LIMIT,
    Graph,
    GraphFormatError,
    WEIGHT_SCALE,
    format_weight,
    parse_graph,
    parse_weight,
    reverse,
    serialize_graph,
)
from .apsp import (
    INF,
    SIGMA_EXACT_LIMIT,
    ApspState,
    SsspResult,
    StarStats,
    UpdateReport,
    WorkCounters,
    accumulate_dependency,
    brandes_bc,
    counting_dijkstra,
    derive_rdags,
    star_stats,
    static_bc,
    topo_order,
    transpose,
)
from .edge_update import (
    EdgeUpdate,
    FlagMatrix,
    PairFlag,
    UpdateError,
    classify_pair,
    classify_pairs,
    incremental_bc_edge,
    incremental_bc_edge_undirected,
    update_dag,
)
from .vertex_update import (
    DistToV,
    VertexUpdate,
    build_r_sets,
    classify_pair_vertex,
    compute_dist_to_v,
    incremental_bc_vertex,
    update_dag_vertex,
    update_reverse_dag,
)
from .oracle import OracleReport, compare_states, enumerate_paths_bc
from .generate import SplitMix64, gen_graph, gen_parsed

__all__ = [
    "DIST_LIMIT", "Graph", "GraphFormatError", "WEIGHT_SCALE",
    "format_weight", "parse_graph", "parse_weight", "reverse",
    "serialize_graph",
    "INF", "SIGMA_EXACT_LIMIT", "ApspState", "SsspResult", "StarStats",
    "UpdateReport", "WorkCounters", "accumulate_dependency", "brandes_bc",
    "counting_dijkstra", "derive_rdags", "star_stats", "static_bc",
    "topo_order", "transpose",
    "EdgeUpdate", "FlagMatrix", "PairFlag", "UpdateError", "classify_pair",
    "classify_pairs", "incremental_bc_edge", "incremental_bc_edge_undirected",
    "update_dag",
    "DistToV", "VertexUpdate", "build_r_sets", "classify_pair_vertex",
    "compute_dist_to_v", "incremental_bc_vertex", "update_dag_vertex",
    "update_reverse_dag",
    "OracleReport", "compare_states", "enumerate_paths_bc",
    "SplitMix64", "gen_graph", "gen_parsed",
]
