# graph_covers/tools/factory/snark.py

"""
Simple covers that are not 3-edge-colorable.

Given a connected cubic A with chromatic index above 3:

- semi-edges: work on odot(A), which has the same chromatic index, and
  compose back down;
- a bridge: the bridged simple cover keeps a bridge, and a cubic graph
  with a bridge is never 3-edge-colorable;
- simple: A itself;
- otherwise the double edges are removed one at a time by splicing A with a
  simple double cover G2 of A (see ``_remove_double_edge``).
"""

from functools import lru_cache

from ...core.multigraph import Edge, Multigraph, bridges, is_connected, is_simple
from ...exceptions import ConstructionAnomalyError, PreconditionError
from ...logging_config import factory_logger as logger
from ..colorings.chromatic import chromatic_index, find_edge_coloring
from ..covers.projection import CoverProjection, compose, identity_projection
from ..products.products import odot
from .bridged import bridged_simple_cover
from .simple_cover import assert_simple_cover, simple_pfold_cover


def _lowest_double_edge(g: Multigraph):
    """(first, second) ids of the lowest parallel pair, or None."""
    first = {}
    for e, edge in enumerate(g.edges):
        if edge.is_normal:
            key = edge.key()
            if key in first:
                return first[key], e
            first[key] = e
    return None


def _remove_double_edge(g: Multigraph) -> CoverProjection:
    """
    One surgery step on a loopless, semi-edge-free cubic graph.

    Let e1, e2 be parallel edges xy and e' the lowest-id lift of e2 in the
    simple double cover G2, running x' -> y' over x -> y. Take G followed by
    G2, delete e2 and e', and add x'y and xy'. The result covers G, has one
    double edge fewer, and is 3-edge-colorable only if G is.
    """
    _, e2 = _lowest_double_edge(g)
    x, y = g.edges[e2].u, g.edges[e2].v
    double = simple_pfold_cover(g, 2)
    g2 = double.source
    lift = min(e for e, f in enumerate(double.edge_map) if f == e2)
    a, b = g2.edges[lift].u, g2.edges[lift].v
    x2, y2 = (a, b) if double.vertex_map[a] == x else (b, a)

    n = g.vertex_count
    edges, edge_map = [], []
    for e, edge in enumerate(g.edges):
        if e != e2:
            edges.append(edge)
            edge_map.append(e)
    for e, edge in enumerate(g2.edges):
        if e != lift:
            edges.append(Edge.normal(edge.u + n, edge.v + n))
            edge_map.append(double.edge_map[e])
    edges += [Edge.normal(x2 + n, y), Edge.normal(x, y2 + n)]
    edge_map += [e2, e2]

    spliced = Multigraph(n + g2.vertex_count, tuple(edges))
    vertex_map = tuple(g.vertices) + tuple(double.vertex_map)
    return CoverProjection(spliced, g, vertex_map, tuple(edge_map))


def _semi_free_witness(g: Multigraph) -> CoverProjection:
    if bridges(g):
        return bridged_simple_cover(g)
    if g.has_loops:
        logger.error("snark_cover: cubic graph with a loop but no bridge")
        raise ConstructionAnomalyError("a connected cubic graph with a loop must have a bridge")
    projection = identity_projection(g)
    steps = 0
    while not is_simple(projection.source):
        step = _remove_double_edge(projection.source)
        projection = compose(step, projection)
        steps += 1
    logger.debug(f"snark_cover: {steps} double-edge removals")
    return projection


@lru_cache(maxsize=None)
def snark_cover(a: Multigraph, check_index: bool = True) -> CoverProjection:
    """
    A simple cover of ``a`` with chromatic index above 3.

    Args:
        a: connected cubic graph with chromatic index above 3
        check_index: re-verify the output's chromatic index exhaustively

    Returns:
        CoverProjection from the witness onto ``a``

    Raises:
        PreconditionError: rule "cubic", "connected" or "chromatic-index-3"
        ConstructionAnomalyError: if the output fails re-verification
    """
    if not a.is_cubic():
        logger.error("snark_cover: graph is not cubic")
        raise PreconditionError("graph must be cubic", rule="cubic")
    if not is_connected(a):
        logger.error("snark_cover: graph is disconnected")
        raise PreconditionError("graph must be connected", rule="connected")
    if not chromatic_index(a).exceeds(3):
        logger.error("snark_cover: graph is 3-edge-colorable")
        raise PreconditionError("graph is 3-edge-colorable, so every cover is too",
                                rule="chromatic-index-3")

    if a.has_semis:
        doubled = odot(a)
        projection = compose(_semi_free_witness(doubled.source), doubled)
    else:
        projection = _semi_free_witness(a)

    assert_simple_cover(projection, "snark_cover")
    if check_index and find_edge_coloring(projection.source, 3) is not None:
        logger.error("snark_cover: witness is 3-edge-colorable")
        raise ConstructionAnomalyError("snark_cover produced a 3-edge-colorable graph")
    logger.info(f"snark_cover: witness with {projection.source.vertex_count} vertices")
    return projection
