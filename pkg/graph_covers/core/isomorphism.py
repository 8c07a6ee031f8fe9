# graph_covers/core/isomorphism.py

"""
Isomorphism testing and deduplication for small multigraphs.

Graphs are bucketed by a Weisfeiler-Lehman hash; exact checks inside a bucket
use networkx's multigraph matcher with loop and semi-edge counts as vertex
labels.
"""

import networkx as nx
from networkx.algorithms.isomorphism import MultiGraphMatcher, categorical_node_match

from .multigraph import Multigraph, to_networkx

_NODE_MATCH = categorical_node_match(["loops", "semis"], [0, 0])


def _labelled(g: Multigraph) -> nx.Graph:
    graph = nx.Graph()
    for v in g.vertices:
        graph.add_node(v, label=f"{len(g.loops_at(v))}/{len(g.semis_at(v))}")
    for (u, v), count in g.multiplicity.items():
        graph.add_edge(u, v, mult=str(count))
    return graph


def wl_signature(g: Multigraph, iterations: int = 3) -> str:
    """Isomorphism-invariant hash; equal graphs always hash equal."""
    graph = _labelled(g)
    digest = nx.weisfeiler_lehman_graph_hash(graph, node_attr="label", edge_attr="mult",
                                             iterations=iterations)
    return f"{g.vertex_count}:{g.edge_count}:{digest}"


def are_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    """Exact isomorphism test respecting edge kinds and multiplicities."""
    if g.vertex_count != h.vertex_count or g.edge_count != h.edge_count:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return nx.is_isomorphic(to_networkx(g), to_networkx(h), node_match=_NODE_MATCH)


def automorphisms(g: Multigraph):
    """Iterate over automorphisms as dicts {v: image}."""
    graph = to_networkx(g)
    matcher = MultiGraphMatcher(graph, graph, node_match=_NODE_MATCH)
    yield from matcher.isomorphisms_iter()


def vertex_orbits(g: Multigraph) -> list:
    """Orbits of the automorphism group on vertices, each sorted, ordered by smallest member."""
    parent = list(g.vertices)

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for mapping in automorphisms(g):
        for v, w in mapping.items():
            a, b = find(v), find(w)
            if a != b:
                parent[max(a, b)] = min(a, b)
    orbits = {}
    for v in g.vertices:
        orbits.setdefault(find(v), []).append(v)
    return sorted(orbits.values(), key=lambda orbit: orbit[0])


class IsomorphismDeduplicator:
    """
    Keeps one representative per isomorphism class, in insertion order.

    Example:
        dedup = IsomorphismDeduplicator()
        if dedup.add(graph):
            ...  # first time this class is seen
    """

    def __init__(self):
        self._buckets: dict = {}
        self.representatives: list = []

    def add(self, g: Multigraph) -> bool:
        """Return True if ``g`` is new (and store it), False if an isomorphic graph was seen."""
        signature = wl_signature(g)
        bucket = self._buckets.setdefault(signature, [])
        for seen in bucket:
            if are_isomorphic(seen, g):
                return False
        bucket.append(g)
        self.representatives.append(g)
        return True

    def __len__(self):
        return len(self.representatives)


def deduplicate(graphs) -> list:
    """Representatives of the isomorphism classes in ``graphs``, first occurrence wins."""
    dedup = IsomorphismDeduplicator()
    for g in graphs:
        dedup.add(g)
    return dedup.representatives
