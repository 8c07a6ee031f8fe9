"""
Command line interface for graph_covers.
"""

from .commands import build_parser, load_graph, run

__all__ = [
    'build_parser',
    'load_graph',
    'run',
]
