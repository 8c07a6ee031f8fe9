# graph_covers/tools/factory/nopm.py

"""
Simple covers with no perfect matching.

Take an inclusion-minimal good set X of G (the first one by default) and the components
C_1..C_k of G - X. The cover is (3k+1)-fold, vertex ``u`` becoming
``u*(3k+1) + i``:

- over C_j, indices {0, 3j-2, 3j-1, 3j} carry a 4-fold simple cover of G[C_j]
  and, for every i != j, indices {3i-2, 3i-1, 3i} carry a 3-fold one;
- every edge with an end in X lifts to the matching u_i v_i.

X_0 = {x_0 : x in X} is then a good set of the cover: each odd C_j leaves
exactly one odd component behind.
"""

from typing import Optional

from ...core.multigraph import Edge, Multigraph, connected_components, is_connected, is_simple
from ...exceptions import ConstructionAnomalyError, PreconditionError
from ...logging_config import factory_logger as logger
from ..colorings.matchings import has_perfect_matching, has_semi_perfect_matching
from ..colorings.tutte import GoodSet, count_odd_components, minimal_good_sets
from ..covers.projection import CoverProjection, compose, identity_projection
from ..products.products import odot
from .simple_cover import assert_simple_cover, simple_pfold_cover


def _component_graph(g: Multigraph, component: list) -> tuple:
    index = {v: i for i, v in enumerate(component)}
    sub_edges, original = [], []
    for e, edge in enumerate(g.edges):
        if edge.u in index and edge.v in index:
            sub_edges.append(Edge(edge.kind, index[edge.u], index[edge.v]))
            original.append(e)
    return Multigraph(len(component), tuple(sub_edges)), original


def no_pm_cover(g: Multigraph, good: Optional[GoodSet] = None) -> CoverProjection:
    """
    A simple cover of ``g`` without a perfect matching.

    Args:
        g: connected cubic graph without semi-edges and without a perfect matching
        good: minimal good set to build around; the first one when omitted

    Returns:
        CoverProjection from the witness onto ``g``

    Raises:
        PreconditionError: rule "cubic", "connected", "no-semi-edges" or "no-perfect-matching"
        ConstructionAnomalyError: if the output fails re-verification or is disconnected
    """
    if not g.is_cubic():
        logger.error("no_pm_cover: graph is not cubic")
        raise PreconditionError("graph must be cubic", rule="cubic")
    if not is_connected(g):
        logger.error("no_pm_cover: graph is disconnected")
        raise PreconditionError("graph must be connected", rule="connected")
    if g.has_semis:
        logger.error("no_pm_cover: graph has semi-edges")
        raise PreconditionError("graph must not have semi-edges", rule="no-semi-edges")
    if has_perfect_matching(g) is not None:
        logger.error("no_pm_cover: graph has a perfect matching")
        raise PreconditionError("graph has a perfect matching, so every cover has one",
                                rule="no-perfect-matching")
    if is_simple(g):
        return identity_projection(g)

    if good is None:
        good = minimal_good_sets(g)[0]
    x_set = good.vertices
    rest = Multigraph(g.vertex_count, tuple(
        e for e in g.edges if e.u not in x_set and e.v not in x_set
    ))
    components = [c for c in connected_components(rest) if c[0] not in x_set]
    k = len(components)
    n = 3 * k + 1
    logger.debug(f"no_pm_cover: good set {good.sorted_vertices()}, {k} components, {n}-fold")

    edges, edge_map = [], []

    def place(component: list, fold: int, slots: list):
        sub, originals = _component_graph(g, component)
        projection = simple_pfold_cover(sub, fold)
        for e, edge in enumerate(projection.source.edges):
            a, i = divmod(edge.u, fold)
            b, j = divmod(edge.v, fold)
            edges.append(Edge.normal(component[a] * n + slots[i], component[b] * n + slots[j]))
            edge_map.append(originals[projection.edge_map[e]])

    for j, component in enumerate(components, start=1):
        for i in range(1, k + 1):
            block = [3 * i - 2, 3 * i - 1, 3 * i]
            if i == j:
                place(component, 4, [0] + block)
            else:
                place(component, 3, block)
    for e, edge in enumerate(g.edges):
        if edge.is_normal and (edge.u in x_set or edge.v in x_set):
            for i in range(n):
                edges.append(Edge.normal(edge.u * n + i, edge.v * n + i))
                edge_map.append(e)

    cover = Multigraph(g.vertex_count * n, tuple(edges))
    projection = CoverProjection(cover, g, tuple(v // n for v in cover.vertices), tuple(edge_map))
    assert_simple_cover(projection, "no_pm_cover")
    if not is_connected(cover):
        logger.error("no_pm_cover: witness is disconnected")
        raise ConstructionAnomalyError("no_pm_cover produced a disconnected graph")

    x0 = [x * n for x in x_set]
    if count_odd_components(cover, x0) <= len(x0):
        logger.error("no_pm_cover: lifted good set is not good in the cover")
        raise ConstructionAnomalyError("no_pm_cover lost its Tutte barrier")
    if has_perfect_matching(cover) is not None:
        logger.error("no_pm_cover: witness has a perfect matching")
        raise ConstructionAnomalyError("no_pm_cover produced a graph with a perfect matching")
    logger.info(f"no_pm_cover: {n}-fold witness with {cover.vertex_count} vertices")
    return projection


def witness_not_F11(a: Multigraph) -> CoverProjection:
    """
    A simple graph covering ``a`` with no perfect matching, hence not covering F(1,1).

    Graphs with semi-edges go through odot(a), which has no perfect matching
    exactly when ``a`` has no semi-perfect matching.

    Raises:
        PreconditionError: rule "semi-perfect-matching" if ``a`` has one
    """
    if not a.is_cubic():
        logger.error("witness_not_F11: graph is not cubic")
        raise PreconditionError("graph must be cubic", rule="cubic")
    if has_semi_perfect_matching(a) is not None:
        logger.error("witness_not_F11: graph has a semi-perfect matching")
        raise PreconditionError("graph has a semi-perfect matching", rule="semi-perfect-matching")
    if not a.has_semis:
        return no_pm_cover(a)
    doubled = odot(a)
    return compose(no_pm_cover(doubled.source), doubled)
