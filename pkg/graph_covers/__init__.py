"""
Graph Covers - covering projections of multigraphs with loops, parallel edges
and semi-edges, and evidence for the "stronger than" relation.
"""

__version__ = "1.0.0"

from .core.multigraph import Edge, EdgeKind, Multigraph
from .core.catalog import catalog, catalog_graph
from .core.mg_format import parse_mg, read_mg, serialize_mg, write_mg
from .tools.covers import (
    CoverProjection,
    ProjectionKind,
    find_cover,
    verify_cover,
    verify_semicover,
)
from .tools.stronger import StrongerEvidence, Verdict, decide_stronger, cover_poset

__all__ = [
    # Data model
    'Edge',
    'EdgeKind',
    'Multigraph',
    'catalog',
    'catalog_graph',
    'parse_mg',
    'read_mg',
    'serialize_mg',
    'write_mg',

    # Covers
    'CoverProjection',
    'ProjectionKind',
    'find_cover',
    'verify_cover',
    'verify_semicover',

    # Stronger relation
    'StrongerEvidence',
    'Verdict',
    'decide_stronger',
    'cover_poset',

    # Version
    '__version__',
]
