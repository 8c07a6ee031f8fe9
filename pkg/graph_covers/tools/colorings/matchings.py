# graph_covers/tools/colorings/matchings.py

"""
Perfect matchings, semi-perfect matchings and the F(1,1) cover test.

A semi-perfect matching is a set of normal edges and semi-edges meeting
every vertex exactly once. Loops never take part.
"""

from dataclasses import dataclass
from typing import Optional

import networkx as nx

from ...core.multigraph import Multigraph, underlying_simple_graph
from ...exceptions import UnsupportedInputError
from ...logging_config import coloring_logger as logger


@dataclass(frozen=True)
class SemiPerfectMatching:
    edges: frozenset

    def verify(self, g: Multigraph) -> bool:
        """Every vertex is met exactly once; loops are never allowed."""
        met = [0] * g.vertex_count
        for e in self.edges:
            edge = g.edges[e]
            if edge.is_loop:
                return False
            met[edge.u] += 1
            if edge.is_normal:
                met[edge.v] += 1
        return all(m == 1 for m in met)


def _lowest_edge_ids(g: Multigraph) -> dict:
    ids = {}
    for e, edge in enumerate(g.edges):
        if edge.is_normal:
            ids.setdefault(edge.key(), e)
    return ids


def _max_matching(graph: nx.Graph) -> set:
    return nx.max_weight_matching(graph, maxcardinality=True)


def has_perfect_matching(g: Multigraph) -> Optional[frozenset]:
    """
    A perfect matching as a set of normal edge ids, or None.

    Parallel edges collapse to their lowest id; loops and semi-edges are ignored.
    """
    if g.vertex_count % 2:
        return None
    pairs = _max_matching(underlying_simple_graph(g))
    if 2 * len(pairs) != g.vertex_count:
        return None
    ids = _lowest_edge_ids(g)
    return frozenset(ids[(min(u, v), max(u, v))] for u, v in pairs)


def has_semi_perfect_matching(g: Multigraph) -> Optional[SemiPerfectMatching]:
    """
    A semi-perfect matching, found as a perfect matching of odot(g) pulled
    back to g: copy-0 edges give their normal edge, rungs give their semi-edge.
    """
    from ..products.products import odot

    projection = odot(g)
    doubled = projection.source
    matching = has_perfect_matching(doubled)
    if matching is None:
        return None
    chosen = set()
    for x in matching:
        edge = doubled.edges[x]
        rung = edge.u % 2 != edge.v % 2
        if rung or edge.u % 2 == 0:
            chosen.add(projection.edge_map[x])
    result = SemiPerfectMatching(frozenset(chosen))
    if not result.verify(g):
        logger.error("semi-perfect matching pulled back from odot does not verify")
        return None
    return result


def semi_perfect_matching_bruteforce(g: Multigraph) -> Optional[SemiPerfectMatching]:
    """
    Exhaustive search used as an independent check: the lowest unmatched
    vertex takes one of its semi-edges or a normal edge to another unmatched
    vertex.
    """
    matched = [False] * g.vertex_count
    chosen = []

    def search():
        try:
            v = matched.index(False)
        except ValueError:
            return True
        matched[v] = True
        for e in g.incidence[v]:
            edge = g.edges[e]
            if edge.is_loop:
                continue
            w = edge.other(v)
            if edge.is_normal and matched[w]:
                continue
            matched[w] = True
            chosen.append(e)
            if search():
                return True
            chosen.pop()
            if edge.is_normal:
                matched[w] = False
        matched[v] = False
        return False

    return SemiPerfectMatching(frozenset(chosen)) if search() else None


def perfect_matching_bruteforce(g: Multigraph) -> Optional[frozenset]:
    """Exhaustive perfect matching search over normal edges."""
    without_semis = Multigraph(g.vertex_count, tuple(e for e in g.edges if e.is_normal))
    result = semi_perfect_matching_bruteforce(without_semis)
    if result is None:
        return None
    ids = _lowest_edge_ids(g)
    return frozenset(ids[without_semis.edges[e].key()] for e in result.edges)


def covers_F11(g: Multigraph):
    """
    Decide whether the cubic graph ``g`` covers F(1,1).

    A cover exists iff some semi-perfect matching contains every semi-edge.
    The matching goes to the semi-edge of F(1,1) and its complement, which
    is then 2-regular, goes to the loop.

    Returns:
        CoverProjection onto F(1,1) (edge 0 the semi-edge, edge 1 the loop), or None

    Raises:
        UnsupportedInputError: if ``g`` is not cubic
    """
    from ...core.catalog import make_flower
    from ..covers.projection import CoverProjection, verify_cover

    if not g.is_cubic():
        logger.error("covers_F11 called on a non-cubic graph")
        raise UnsupportedInputError("covers_F11 needs a cubic graph")

    semi_at = [g.semis_at(v) for v in g.vertices]
    if any(len(s) > 1 for s in semi_at):
        return None
    free = [v for v in g.vertices if not semi_at[v]]
    free_set = set(free)
    graph = nx.Graph()
    graph.add_nodes_from(free)
    graph.add_edges_from(
        e.key() for e in g.edges if e.is_normal and e.u in free_set and e.v in free_set
    )
    pairs = _max_matching(graph)
    if 2 * len(pairs) != len(free):
        return None

    ids = _lowest_edge_ids(g)
    in_matching = {ids[(min(u, v), max(u, v))] for u, v in pairs}
    in_matching |= {s[0] for s in semi_at if s}
    target = make_flower(1, 1)
    edge_map = tuple(0 if e in in_matching else 1 for e in range(g.edge_count))
    projection = CoverProjection(g, target, (0,) * g.vertex_count, edge_map)
    if not verify_cover(projection).ok:
        logger.error("covers_F11 certificate failed verification")
        return None
    return projection


def format_matching(edges) -> str:
    """Witness lines ``m <edge>``."""
    return "".join(f"m {e}\n" for e in sorted(edges))
