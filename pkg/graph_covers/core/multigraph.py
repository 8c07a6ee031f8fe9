# graph_covers/core/multigraph.py

"""
Multigraphs with loops, parallel edges and semi-edges.

A graph is a vertex count plus an ordered tuple of edges. Vertex ids are
dense (0..n-1) and edge ids are positions in the edge tuple, so every
downstream search is deterministic given the edge order.

Degree convention: a normal edge adds 1 to each endpoint, a loop adds 2 to
its vertex, a semi-edge adds 1.
"""

from collections import Counter
from dataclasses import dataclass, field
from enum import Enum
from functools import cached_property
from typing import Iterable, Optional

import networkx as nx

from ..exceptions import ValidationError
from ..logging_config import core_logger as logger


class EdgeKind(Enum):
    NORMAL = "e"
    LOOP = "l"
    SEMI = "s"


@dataclass(frozen=True)
class Edge:
    """One edge. For loops and semi-edges ``u == v``."""
    kind: EdgeKind
    u: int
    v: int

    @classmethod
    def normal(cls, u: int, v: int) -> "Edge":
        return cls(EdgeKind.NORMAL, u, v)

    @classmethod
    def loop(cls, v: int) -> "Edge":
        return cls(EdgeKind.LOOP, v, v)

    @classmethod
    def semi(cls, v: int) -> "Edge":
        return cls(EdgeKind.SEMI, v, v)

    @property
    def is_normal(self) -> bool:
        return self.kind is EdgeKind.NORMAL

    @property
    def is_loop(self) -> bool:
        return self.kind is EdgeKind.LOOP

    @property
    def is_semi(self) -> bool:
        return self.kind is EdgeKind.SEMI

    def other(self, w: int) -> int:
        """The endpoint opposite to ``w`` (``w`` itself for loops and semi-edges)."""
        return self.v if w == self.u else self.u

    def key(self) -> tuple:
        """Unordered endpoint key, used to detect parallel normal edges."""
        return (min(self.u, self.v), max(self.u, self.v))


@dataclass(frozen=True)
class Multigraph:
    """
    Immutable multigraph with loops and semi-edges.

    Args:
        vertex_count: number of vertices
        edges: edges in id order

    Raises:
        ValidationError: on negative counts, out-of-range endpoints or a
            normal edge whose endpoints coincide
    """
    vertex_count: int
    edges: tuple = field(default=())

    def __post_init__(self):
        if not isinstance(self.vertex_count, int) or self.vertex_count < 0:
            raise ValidationError(f"vertex_count must be a nonnegative integer, got {self.vertex_count!r}")
        edges = tuple(self.edges)
        for eid, edge in enumerate(edges):
            if not isinstance(edge, Edge):
                raise ValidationError(f"edge {eid} is not an Edge: {edge!r}")
            for w in (edge.u, edge.v):
                if not 0 <= w < self.vertex_count:
                    raise ValidationError(
                        f"edge {eid} references vertex {w} outside 0..{self.vertex_count - 1}"
                    )
            if edge.is_normal and edge.u == edge.v:
                raise ValidationError(f"normal edge {eid} has equal endpoints {edge.u}; declare it as a loop")
            if not edge.is_normal and edge.u != edge.v:
                raise ValidationError(f"{edge.kind.name.lower()} edge {eid} must have a single endpoint")
        object.__setattr__(self, "edges", edges)

    @classmethod
    def from_lists(cls, vertex_count: int, normal: Iterable = (), loops: Iterable = (),
                   semis: Iterable = ()) -> "Multigraph":
        """Build a graph from endpoint lists: normal edges, then loops, then semi-edges."""
        edges = [Edge.normal(u, v) for u, v in normal]
        edges += [Edge.loop(v) for v in loops]
        edges += [Edge.semi(v) for v in semis]
        return cls(vertex_count, tuple(edges))

    @property
    def vertices(self) -> range:
        return range(self.vertex_count)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @cached_property
    def incidence(self) -> tuple:
        """Per vertex, the ids of incident edges in id order (a loop appears once)."""
        table = [[] for _ in range(self.vertex_count)]
        for eid, edge in enumerate(self.edges):
            table[edge.u].append(eid)
            if edge.is_normal:
                table[edge.v].append(eid)
        return tuple(tuple(row) for row in table)

    @cached_property
    def degrees(self) -> tuple:
        deg = [0] * self.vertex_count
        for edge in self.edges:
            if edge.is_loop:
                deg[edge.u] += 2
            elif edge.is_semi:
                deg[edge.u] += 1
            else:
                deg[edge.u] += 1
                deg[edge.v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        return self.degrees[v]

    def count_kind(self, kind: EdgeKind) -> int:
        return sum(1 for edge in self.edges if edge.kind is kind)

    def loops_at(self, v: int) -> list:
        return [eid for eid in self.incidence[v] if self.edges[eid].is_loop]

    def semis_at(self, v: int) -> list:
        return [eid for eid in self.incidence[v] if self.edges[eid].is_semi]

    def normals_at(self, v: int) -> list:
        return [eid for eid in self.incidence[v] if self.edges[eid].is_normal]

    @cached_property
    def multiplicity(self) -> Counter:
        """Normal-edge multiplicity per unordered endpoint pair."""
        return Counter(edge.key() for edge in self.edges if edge.is_normal)

    @property
    def has_loops(self) -> bool:
        return any(edge.is_loop for edge in self.edges)

    @property
    def has_semis(self) -> bool:
        return any(edge.is_semi for edge in self.edges)

    @property
    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def is_regular(self, d: Optional[int] = None) -> bool:
        if self.vertex_count == 0:
            return True
        target = self.degrees[0] if d is None else d
        return all(x == target for x in self.degrees)

    def is_cubic(self) -> bool:
        return self.vertex_count > 0 and self.is_regular(3)


def degree(g: Multigraph, v: int) -> int:
    """
    Degree of ``v``: normal edges count 1, loops 2, semi-edges 1.

    Raises:
        ValidationError: if ``v`` is not a vertex of ``g``
    """
    if not 0 <= v < g.vertex_count:
        raise ValidationError(f"vertex {v} not in graph with {g.vertex_count} vertices")
    return g.degree(v)


def is_simple(g: Multigraph) -> bool:
    """True iff ``g`` has no loop, no semi-edge and no repeated endpoint pair."""
    if g.has_loops or g.has_semis:
        return False
    return all(count == 1 for count in g.multiplicity.values())


def underlying_simple_graph(g: Multigraph) -> nx.Graph:
    """networkx Graph on all vertices with one edge per adjacent pair; loops and semi-edges dropped."""
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices)
    graph.add_edges_from(edge.key() for edge in g.edges if edge.is_normal)
    return graph


def to_networkx(g: Multigraph) -> nx.MultiGraph:
    """
    networkx MultiGraph view: normal edges keyed by edge id, loop and semi-edge
    counts stored as the ``loops`` and ``semis`` node attributes.
    """
    graph = nx.MultiGraph()
    for v in g.vertices:
        graph.add_node(v, loops=len(g.loops_at(v)), semis=len(g.semis_at(v)))
    for eid, edge in enumerate(g.edges):
        if edge.is_normal:
            graph.add_edge(edge.u, edge.v, key=eid)
    return graph


def bipartite_coloring(g: Multigraph) -> Optional[dict]:
    """
    A proper 2-coloring {vertex: 0|1} when ``g`` is bipartite, else None.
    Any loop or semi-edge makes the graph non-bipartite.
    """
    if g.has_loops or g.has_semis:
        return None
    graph = underlying_simple_graph(g)
    # Parallel edges form even cycles, so the collapsed graph decides
    if not nx.is_bipartite(graph):
        return None
    return dict(sorted(nx.bipartite.color(graph).items()))


def is_bipartite(g: Multigraph) -> bool:
    return bipartite_coloring(g) is not None


def connected_components(g: Multigraph) -> list:
    """
    Partition of the vertices into components, each a sorted list, ordered by
    smallest vertex. Loops and semi-edges never join distinct vertices.
    """
    graph = underlying_simple_graph(g)
    return sorted((sorted(c) for c in nx.connected_components(graph)), key=lambda c: c[0])


def is_connected(g: Multigraph) -> bool:
    return g.vertex_count > 0 and len(connected_components(g)) == 1


def bridges(g: Multigraph) -> list:
    """
    Ids of normal edges whose removal increases the number of components,
    in id order. Parallel edges are never bridges.
    """
    graph = underlying_simple_graph(g)
    cut_pairs = {tuple(sorted(pair)) for pair in nx.bridges(graph)}
    result = [
        eid for eid, edge in enumerate(g.edges)
        if edge.is_normal and edge.key() in cut_pairs and g.multiplicity[edge.key()] == 1
    ]
    logger.debug(f"bridges: {result}")
    return result


def handshake_holds(g: Multigraph) -> bool:
    """Sum of degrees equals #semi + 2*#normal + 2*#loops."""
    expected = (g.count_kind(EdgeKind.SEMI) + 2 * g.count_kind(EdgeKind.NORMAL)
                + 2 * g.count_kind(EdgeKind.LOOP))
    return sum(g.degrees) == expected


def max_multiplicity(g: Multigraph) -> int:
    """Largest number of parallel normal edges between two vertices (0 if none)."""
    return max(g.multiplicity.values(), default=0)


def max_semi_loop_load(g: Multigraph) -> int:
    """Max over vertices of #semi-edges + 2 * #loops."""
    return max((len(g.semis_at(v)) + 2 * len(g.loops_at(v)) for v in g.vertices), default=0)


def split_edge(g: Multigraph, eid: int) -> Multigraph:
    """
    Replace normal edge ``eid`` by two semi-edges, one at each endpoint.
    The remaining edges keep their relative order; the semi-edges are appended.

    Raises:
        ValidationError: if ``eid`` is not a normal edge of ``g``
    """
    if not 0 <= eid < g.edge_count or not g.edges[eid].is_normal:
        logger.error(f"split_edge: edge {eid} is not a normal edge")
        raise ValidationError(f"edge {eid} is not a normal edge")
    edge = g.edges[eid]
    rest = g.edges[:eid] + g.edges[eid + 1:]
    return Multigraph(g.vertex_count, rest + (Edge.semi(edge.u), Edge.semi(edge.v)))


def disjoint_union(g: Multigraph, h: Multigraph) -> Multigraph:
    """``g`` followed by ``h`` with vertex ids shifted by ``g.vertex_count``."""
    shift = g.vertex_count
    moved = tuple(Edge(e.kind, e.u + shift, e.v + shift) for e in h.edges)
    return Multigraph(g.vertex_count + h.vertex_count, g.edges + moved)


def relabel(g: Multigraph, perm: list) -> Multigraph:
    """
    Rename vertex ``v`` to ``perm[v]``; edge order is kept.

    Raises:
        ValidationError: if ``perm`` is not a permutation of the vertices
    """
    if sorted(perm) != list(g.vertices):
        raise ValidationError(f"not a permutation of 0..{g.vertex_count - 1}: {perm}")
    return Multigraph(g.vertex_count, tuple(Edge(e.kind, perm[e.u], perm[e.v]) for e in g.edges))


def induced_subgraph(g: Multigraph, keep: Iterable) -> tuple:
    """
    Subgraph induced on ``keep`` (loops and semi-edges at kept vertices stay).

    Returns:
        tuple: (subgraph, old-to-new vertex map)
    """
    order = sorted(set(keep))
    index = {v: i for i, v in enumerate(order)}
    edges = tuple(
        Edge(e.kind, index[e.u], index[e.v])
        for e in g.edges if e.u in index and e.v in index
    )
    return Multigraph(len(order), edges), index
