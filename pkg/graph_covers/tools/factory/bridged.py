# graph_covers/tools/factory/bridged.py

"""
Simple covers that keep a bridge.

For a bridge uv with sides G_u and G_v, the cover has fibers of size 2p+1.
On the u side, indices 0..p carry a simple (p+1)-fold cover of G_u and
indices p+1..2p a simple p-fold cover. On the v side, indices 1..p carry a
p-fold cover of G_v and indices {0, p+1..2p} a (p+1)-fold cover. The lifted
bridge is the matching u_i v_i, and u_0 v_0 is the only edge between the
two halves {u side 0..p, v side 1..p} and {u side p+1..2p, v side 0, p+1..2p}.
"""

from ...core.multigraph import (
    Edge, Multigraph, bridges, connected_components, is_connected, max_multiplicity,
)
from ...exceptions import ConstructionAnomalyError, PreconditionError
from ...logging_config import factory_logger as logger
from ..covers.projection import CoverProjection
from .simple_cover import assert_simple_cover, simple_pfold_cover


def _side(g: Multigraph, bridge: int, root: int) -> tuple:
    """
    The component of G - bridge containing ``root``.

    Returns:
        tuple: (subgraph, original vertex ids, original edge ids)
    """
    rest = Multigraph(g.vertex_count, g.edges[:bridge] + g.edges[bridge + 1:])
    component = next(c for c in connected_components(rest) if root in c)
    index = {v: i for i, v in enumerate(component)}
    sub_edges, original = [], []
    for e, edge in enumerate(g.edges):
        if e != bridge and edge.u in index:
            sub_edges.append(Edge(edge.kind, index[edge.u], index[edge.v]))
            original.append(e)
    return Multigraph(len(component), tuple(sub_edges)), component, original


def bridge_fold_parameter(g: Multigraph) -> int:
    """p = max multiplicity + 2 * (most loops at one vertex) + 1."""
    most_loops = max((len(g.loops_at(v)) for v in g.vertices), default=0)
    return max_multiplicity(g) + 2 * most_loops + 1


def bridged_simple_cover(g: Multigraph) -> CoverProjection:
    """
    Simple (2p+1)-fold cover of ``g`` that contains a bridge, built around
    the lowest-id bridge of ``g``.

    Raises:
        PreconditionError: rule "connected", "no-semi-edges" or "has-bridge"
        ConstructionAnomalyError: if the output fails re-verification
    """
    if not is_connected(g):
        logger.error("bridged_simple_cover: graph is disconnected")
        raise PreconditionError("graph must be connected", rule="connected")
    if g.has_semis:
        logger.error("bridged_simple_cover: graph has semi-edges")
        raise PreconditionError("graph must not have semi-edges", rule="no-semi-edges")
    cut = bridges(g)
    if not cut:
        logger.error("bridged_simple_cover: graph has no bridge")
        raise PreconditionError("graph has no bridge", rule="has-bridge")

    bridge = cut[0]
    u, v = g.edges[bridge].u, g.edges[bridge].v
    p = bridge_fold_parameter(g)
    n = 2 * p + 1

    edges, edge_map = [], []

    def place(side: tuple, fold: int, slots: list):
        sub, vertices, originals = side
        projection = simple_pfold_cover(sub, fold)
        for e, edge in enumerate(projection.source.edges):
            a, i = divmod(edge.u, fold)
            b, j = divmod(edge.v, fold)
            edges.append(Edge.normal(vertices[a] * n + slots[i], vertices[b] * n + slots[j]))
            edge_map.append(originals[projection.edge_map[e]])

    side_u = _side(g, bridge, u)
    side_v = _side(g, bridge, v)
    place(side_u, p + 1, list(range(0, p + 1)))
    place(side_u, p, list(range(p + 1, 2 * p + 1)))
    place(side_v, p, list(range(1, p + 1)))
    place(side_v, p + 1, [0] + list(range(p + 1, 2 * p + 1)))
    for i in range(n):
        edges.append(Edge.normal(u * n + i, v * n + i))
        edge_map.append(bridge)

    cover = Multigraph(g.vertex_count * n, tuple(edges))
    projection = CoverProjection(cover, g, tuple(x // n for x in cover.vertices), tuple(edge_map))
    assert_simple_cover(projection, "bridged_simple_cover")
    kept = len(edges) - n
    if kept not in bridges(cover):
        logger.error("bridged_simple_cover: lifted edge u_0 v_0 is not a bridge")
        raise ConstructionAnomalyError("bridged cover lost its bridge")
    logger.info(f"bridged_simple_cover: {n}-fold cover with {cover.vertex_count} vertices, bridge edge {kept}")
    return projection
