"""Enumerate minimal separators, minimal triangulations, and proper
tree decompositions of undirected graphs."""

from .graph import (
    CliqueTree,
    DisconnectedGraphError,
    Graph,
    GraphError,
    NotChordalError,
    VertexSet,
    clique_tree,
    connected_components,
    induced_subgraph,
    is_chordal,
    is_connected,
    max_cliques_chordal,
    neighborhood,
    saturate,
)
from .io import ParseError, parse_graph
from .maxind import (
    EnumStats,
    ImplicitGraph,
    ImplicitGraphError,
    enum_max_independent,
    explicit_graph_instance,
)
from .separators import (
    Separator,
    canon,
    clq_min_seps,
    crosses,
    enum_min_seps,
    extract_min_seps_chordal,
    find_min_sep,
    is_minimal_separator,
    is_separator,
)
from .treedecomp import (
    TreeDecomposition,
    WeightedCliqueGraph,
    clique_graph,
    enum_max_spanning_trees,
    enum_proper_tds,
    is_proper,
    is_tree_decomposition,
    saturate_td,
    subsumes,
)
from .triangulate import (
    ParallelFamily,
    Triangulation,
    decompose,
    enum_min_triangulations,
    extend_family_blackbox,
    extend_family_separator,
    get_components,
    is_minimal_triangulation,
    min_tri_sandwich,
    saturate_family,
    separator_graph_instance,
    triangulate_heuristic,
)

__version__ = "0.1.0"

__all__ = [
    "CliqueTree",
    "DisconnectedGraphError",
    "EnumStats",
    "Graph",
    "GraphError",
    "ImplicitGraph",
    "ImplicitGraphError",
    "NotChordalError",
    "ParallelFamily",
    "ParseError",
    "Separator",
    "TreeDecomposition",
    "Triangulation",
    "VertexSet",
    "WeightedCliqueGraph",
    "canon",
    "clique_graph",
    "clique_tree",
    "clq_min_seps",
    "connected_components",
    "crosses",
    "decompose",
    "enum_max_independent",
    "enum_max_spanning_trees",
    "enum_min_seps",
    "enum_min_triangulations",
    "enum_proper_tds",
    "explicit_graph_instance",
    "extend_family_blackbox",
    "extend_family_separator",
    "extract_min_seps_chordal",
    "find_min_sep",
    "get_components",
    "induced_subgraph",
    "is_chordal",
    "is_connected",
    "is_minimal_separator",
    "is_minimal_triangulation",
    "is_proper",
    "is_separator",
    "is_tree_decomposition",
    "max_cliques_chordal",
    "min_tri_sandwich",
    "neighborhood",
    "parse_graph",
    "saturate",
    "saturate_family",
    "saturate_td",
    "separator_graph_instance",
    "subsumes",
    "triangulate_heuristic",
]
