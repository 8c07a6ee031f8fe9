# graph_covers/tools/colorings/tutte.py

"""
Tutte barriers: good and very good vertex sets.

X is good when G - X has more odd components than |X|. By Tutte's theorem
a graph has a perfect matching iff it has no good set.
"""

from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from ...constants import GOOD_SET_VERTEX_CAP
from ...core.multigraph import Multigraph, underlying_simple_graph
from ...exceptions import CapExceededError, UnsupportedInputError
from ...logging_config import coloring_logger as logger
from .matchings import has_perfect_matching


@dataclass(frozen=True)
class GoodSet:
    vertices: frozenset
    odd_component_count: int
    very_good: bool

    def sorted_vertices(self) -> list:
        return sorted(self.vertices)


def odd_components(g: Multigraph, removed) -> list:
    """Odd components of G - removed, each a sorted vertex list, ordered by smallest vertex."""
    graph = underlying_simple_graph(g)
    graph.remove_nodes_from(removed)
    comps = [sorted(c) for c in nx.connected_components(graph) if len(c) % 2 == 1]
    return sorted(comps, key=lambda c: c[0])


def count_odd_components(g: Multigraph, removed) -> int:
    return len(odd_components(g, removed))


def is_good(g: Multigraph, removed) -> bool:
    return count_odd_components(g, removed) > len(set(removed))


def is_very_good(g: Multigraph, removed) -> bool:
    """
    Good, and every loop and every parallel edge avoids ``removed``
    (which also makes G[X] simple).
    """
    x = set(removed)
    if not is_good(g, x):
        return False
    for edge in g.edges:
        if edge.is_loop and edge.u in x:
            return False
        if edge.is_normal and g.multiplicity[edge.key()] > 1 and (edge.u in x or edge.v in x):
            return False
    return True


def minimal_good_sets(g: Multigraph, cap: int = GOOD_SET_VERTEX_CAP) -> list:
    """
    All inclusion-minimal good sets, in order of size and then lexicographically.

    Returns an empty list when ``g`` has a perfect matching.

    Raises:
        UnsupportedInputError: if ``g`` has semi-edges
        CapExceededError: if ``g`` has more than ``cap`` vertices
    """
    if g.has_semis:
        raise UnsupportedInputError("good sets are defined here for graphs without semi-edges")
    if g.vertex_count > cap:
        logger.error(f"minimal_good_sets: {g.vertex_count} vertices exceeds cap {cap}")
        raise CapExceededError(f"good-set enumeration is capped at {cap} vertices", cap=cap)
    if has_perfect_matching(g) is not None:
        return []

    found = []
    for size in range(g.vertex_count + 1):
        for subset in combinations(g.vertices, size):
            x = frozenset(subset)
            if any(seen.vertices <= x for seen in found):
                continue
            odd = count_odd_components(g, x)
            if odd > size:
                found.append(GoodSet(x, odd, is_very_good(g, x)))
    logger.debug(f"minimal_good_sets: {len(found)} sets")
    return found
