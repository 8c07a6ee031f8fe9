"""
Colorings Tool

Chromatic index, matchings and semi-perfect matchings, Tutte good sets and
1-perfect codes.
"""

from .chromatic import EdgeColoring, ChromaticIndex, chromatic_index, find_edge_coloring, format_coloring
from .matchings import (
    SemiPerfectMatching, has_perfect_matching, has_semi_perfect_matching,
    semi_perfect_matching_bruteforce, perfect_matching_bruteforce, covers_F11, format_matching,
)
from .tutte import GoodSet, minimal_good_sets, count_odd_components, odd_components, is_very_good
from .codes import has_perfect_code, format_code

__all__ = [
    'EdgeColoring',
    'ChromaticIndex',
    'chromatic_index',
    'find_edge_coloring',
    'format_coloring',
    'SemiPerfectMatching',
    'has_perfect_matching',
    'has_semi_perfect_matching',
    'semi_perfect_matching_bruteforce',
    'perfect_matching_bruteforce',
    'covers_F11',
    'format_matching',
    'GoodSet',
    'minimal_good_sets',
    'count_odd_components',
    'odd_components',
    'is_very_good',
    'has_perfect_code',
    'format_code',
]
