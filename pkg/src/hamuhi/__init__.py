"""Multi-scale hierarchical community detection by similarity-driven merging."""

from .core import (
    Definition,
    check_definition,
    community_detection,
    hamuhi,
    hamuhi_run,
    hierarchical_level,
    hierarchy,
    run_hierarchy,
)
from .disjoint_set import DisjointSet
from .graph import Graph, load_edge_list, parse_edge_list, write_edge_list
from .metrics import modularity, nmi, size_distribution
from .partition import Partition
from .similarity import Variant, compute_all

__all__ = [
    "Definition",
    "DisjointSet",
    "Graph",
    "Partition",
    "Variant",
    "check_definition",
    "community_detection",
    "compute_all",
    "hamuhi",
    "hamuhi_run",
    "hierarchical_level",
    "hierarchy",
    "load_edge_list",
    "modularity",
    "nmi",
    "parse_edge_list",
    "run_hierarchy",
    "size_distribution",
    "write_edge_list",
]
