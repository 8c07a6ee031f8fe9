# graph_covers/tools/products/products.py

"""
The two canonical double covers of a graph.

Vertex ``v`` of G becomes ``2*v`` (side 0) and ``2*v + 1`` (side 1).
Edges are produced in source edge order, two per normal edge or loop and one
per semi-edge; when no semi-edge comes earlier, normal edge ``e`` becomes
edges ``2e`` and ``2e + 1``.
"""

from ...core.multigraph import Edge, Multigraph
from ...logging_config import product_logger as logger
from ..covers.projection import CoverProjection


def lift_vertex(base: int, side: int) -> int:
    return 2 * base + side


def base_of(vertex: int) -> tuple:
    """(base, side) for a doubled vertex id."""
    return divmod(vertex, 2)


def _build(g: Multigraph, crossing: bool) -> CoverProjection:
    edges, edge_map = [], []
    for e, edge in enumerate(g.edges):
        u0, u1 = lift_vertex(edge.u, 0), lift_vertex(edge.u, 1)
        if edge.is_normal:
            v0, v1 = lift_vertex(edge.v, 0), lift_vertex(edge.v, 1)
            if crossing:
                lifted = [Edge.normal(u0, v1), Edge.normal(u1, v0)]
            else:
                lifted = [Edge.normal(u0, v0), Edge.normal(u1, v1)]
        elif edge.is_loop:
            lifted = [Edge.normal(u0, u1)] * 2 if crossing else [Edge.loop(u0), Edge.loop(u1)]
        else:
            lifted = [Edge.normal(u0, u1)]
        edges += lifted
        edge_map += [e] * len(lifted)
    doubled = Multigraph(2 * g.vertex_count, tuple(edges))
    vertex_map = tuple(v // 2 for v in doubled.vertices)
    return CoverProjection(doubled, g, vertex_map, tuple(edge_map))


def times_k2(g: Multigraph) -> CoverProjection:
    """
    The bipartite double cover G^x.

    A normal edge uv becomes u0-v1 and u1-v0, a loop at v becomes a double
    edge v0-v1 and a semi-edge at v becomes a single edge v0-v1.

    Returns:
        CoverProjection whose ``source`` is G^x and whose ``target`` is ``g``
    """
    projection = _build(g, crossing=True)
    logger.debug(f"times_k2: {g.vertex_count} -> {projection.source.vertex_count} vertices")
    return projection


def odot(g: Multigraph) -> CoverProjection:
    """
    The parallel double cover G^odot: two copies of G, every loop copied
    to both sides, every semi-edge turned into a rung v0-v1.

    Returns:
        CoverProjection whose ``source`` is G^odot and whose ``target`` is ``g``
    """
    projection = _build(g, crossing=False)
    logger.debug(f"odot: {g.vertex_count} -> {projection.source.vertex_count} vertices")
    return projection
