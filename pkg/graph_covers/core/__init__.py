"""
Core data model: multigraphs with loops and semi-edges, the graph catalog,
the .mg text format and isomorphism helpers.
"""

from .multigraph import (
    Edge, EdgeKind, Multigraph, degree, is_simple, is_bipartite, bipartite_coloring,
    connected_components, is_connected, bridges, split_edge, disjoint_union, relabel,
)
from .catalog import NamedGraph, catalog, catalog_graph, catalog_names, small_cubic_graphs
from .mg_format import parse_mg, serialize_mg, read_mg, write_mg, to_dot
from .isomorphism import are_isomorphic, deduplicate

__all__ = [
    'Edge', 'EdgeKind', 'Multigraph', 'degree', 'is_simple', 'is_bipartite', 'bipartite_coloring',
    'connected_components', 'is_connected', 'bridges', 'split_edge', 'disjoint_union', 'relabel',
    'NamedGraph', 'catalog', 'catalog_graph', 'catalog_names', 'small_cubic_graphs',
    'parse_mg', 'serialize_mg', 'read_mg', 'write_mg', 'to_dot',
    'are_isomorphic', 'deduplicate',
]
