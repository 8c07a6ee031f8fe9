# graph_covers/tools/colorings/chromatic.py

"""
Exact edge coloring and chromatic index for multigraphs with semi-edges.

A color class must have maximum degree 1: a semi-edge occupies one slot at
its vertex and a loop can never be colored, so the chromatic index of a
graph with a loop is infinite.

The solver splits the graph at its bridges (recoloring one side always
aligns the two halves of a bridge), applies a parity bound to regular
components and backtracks on what is left.
"""

from collections import deque
from dataclasses import dataclass
from typing import Optional

from ...core.multigraph import Edge, EdgeKind, Multigraph, bridges, connected_components, induced_subgraph
from ...exceptions import ConstructionAnomalyError
from ...logging_config import coloring_logger as logger


@dataclass(frozen=True)
class EdgeColoring:
    """``colors[e]`` is the color of edge e, in ``range(palette_size)``."""
    colors: tuple
    palette_size: int

    def verify(self, g: Multigraph) -> bool:
        if len(self.colors) != g.edge_count:
            return False
        for v in g.vertices:
            seen = set()
            for e in g.incidence[v]:
                edge, c = g.edges[e], self.colors[e]
                if edge.is_loop or not 0 <= c < self.palette_size or c in seen:
                    return False
                seen.add(c)
        return True


@dataclass(frozen=True)
class ChromaticIndex:
    """Chromatic index; ``value`` is None when infinite (the graph has a loop)."""
    value: Optional[int]
    coloring: Optional[EdgeColoring] = None

    @property
    def is_infinite(self) -> bool:
        return self.value is None

    def exceeds(self, k: int) -> bool:
        return self.value is None or self.value > k

    def __str__(self):
        return "inf" if self.value is None else str(self.value)


def _backtrack(g: Multigraph, k: int) -> Optional[list]:
    """Color one bridgeless component; MRV edge order, new colors opened in order."""
    colors = [-1] * g.edge_count
    used = [set() for _ in g.vertices]
    open_edges = list(range(g.edge_count))
    top = [-1]  # highest color in use

    def free(e):
        edge = g.edges[e]
        taken = used[edge.u] | used[edge.v]
        return [c for c in range(min(k, top[0] + 2)) if c not in taken]

    def search():
        if not open_edges:
            return True
        best, best_vals = None, None
        for e in open_edges:
            vals = free(e)
            if not vals:
                return False
            if best is None or len(vals) < len(best_vals):
                best, best_vals = e, vals
                if len(vals) == 1:
                    break
        open_edges.remove(best)
        edge = g.edges[best]
        for c in best_vals:
            previous_top = top[0]
            top[0] = max(top[0], c)
            colors[best] = c
            used[edge.u].add(c)
            used[edge.v].add(c)
            if search():
                return True
            used[edge.u].discard(c)
            used[edge.v].discard(c)
            colors[best] = -1
            top[0] = previous_top
        open_edges.append(best)
        open_edges.sort()
        return False

    return colors if search() else None


def _parity_blocks(g: Multigraph, k: int) -> bool:
    """
    In a k-regular component every color class meets each vertex once, so on
    an odd number of vertices each of the k classes needs its own semi-edge.
    """
    if not g.is_regular(k) or g.vertex_count % 2 == 0:
        return False
    return g.count_kind(EdgeKind.SEMI) < k


def find_edge_coloring(g: Multigraph, k: int) -> Optional[EdgeColoring]:
    """
    A proper edge coloring with at most ``k`` colors, or None (exhaustive).
    """
    if g.has_loops or g.max_degree > k:
        return None
    if g.edge_count == 0:
        return EdgeColoring((), k)

    cut = bridges(g)
    # Split every bridge into a semi-edge on each side
    kept = [e for e in range(g.edge_count) if e not in set(cut)]
    split_edges = [g.edges[e] for e in kept]
    halves = {}
    for e in cut:
        edge = g.edges[e]
        halves[e] = (len(split_edges), len(split_edges) + 1)
        split_edges += [Edge.semi(edge.u), Edge.semi(edge.v)]
    split = Multigraph(g.vertex_count, tuple(split_edges))

    # Color each component independently
    split_colors = [None] * split.edge_count
    comp_of = {}
    components = connected_components(split)
    for idx, comp in enumerate(components):
        for v in comp:
            comp_of[v] = idx
        sub, _ = induced_subgraph(split, comp)
        if _parity_blocks(sub, k):
            logger.debug(f"parity rules out a {k}-coloring of a component with {len(comp)} vertices")
            return None
        sub_colors = _backtrack(sub, k)
        if sub_colors is None:
            return None
        comp_set = set(comp)
        sub_eids = [i for i, edge in enumerate(split.edges) if edge.u in comp_set]
        for i, c in zip(sub_eids, sub_colors):
            split_colors[i] = c

    # Walk the bridge tree and permute colors so both halves of a bridge agree
    perm = [None] * len(components)
    links = [[] for _ in components]
    for e in cut:
        s_u, s_v = halves[e]
        cu, cv = comp_of[g.edges[e].u], comp_of[g.edges[e].v]
        links[cu].append((s_u, cv, s_v))
        links[cv].append((s_v, cu, s_u))
    for root in range(len(components)):
        if perm[root] is not None:
            continue
        perm[root] = list(range(k))
        queue = deque([root])
        while queue:
            c = queue.popleft()
            for mine, other, theirs in links[c]:
                if perm[other] is not None:
                    continue
                want = perm[c][split_colors[mine]]
                have = split_colors[theirs]
                p = list(range(k))
                p[have], p[want] = want, have
                perm[other] = p
                queue.append(other)

    colors = [0] * g.edge_count
    for new, e in enumerate(kept):
        colors[e] = perm[comp_of[g.edges[e].u]][split_colors[new]]
    for e in cut:
        s_u, _ = halves[e]
        colors[e] = perm[comp_of[g.edges[e].u]][split_colors[s_u]]

    coloring = EdgeColoring(tuple(colors), k)
    if not coloring.verify(g):
        raise ConstructionAnomalyError("edge coloring assembly produced an improper coloring")
    return coloring


def is_k_edge_colorable(g: Multigraph, k: int) -> bool:
    return find_edge_coloring(g, k) is not None


def chromatic_index(g: Multigraph) -> ChromaticIndex:
    """
    Exact chromatic index with a witness coloring.

    Tries k = max degree upwards; Shannon's bound (3/2 of the max degree)
    guarantees termination well before the edge count.
    """
    if g.has_loops:
        return ChromaticIndex(None)
    k = g.max_degree
    while True:
        coloring = find_edge_coloring(g, k)
        if coloring is not None:
            logger.debug(f"chromatic index {k} for graph with {g.vertex_count} vertices")
            return ChromaticIndex(k, coloring)
        k += 1


def format_coloring(coloring: EdgeColoring) -> str:
    """Witness lines ``c <edge> <color>``."""
    return "".join(f"c {e} {c}\n" for e, c in enumerate(coloring.colors))
