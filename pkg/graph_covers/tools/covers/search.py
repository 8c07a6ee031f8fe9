# graph_covers/tools/covers/search.py

"""
Exhaustive search for covering and semi-covering projections.

The search runs in two phases:

1. Vertex phase. Source vertices are assigned in BFS order. Each vertex
   goes to a target vertex of equal degree, adjacent to (or equal to) its
   BFS parent's image. After every assignment the local edge counts are
   checked against the target's multiplicities. As soon as a fiber is full,
   its internal subproblem (edges that stay inside the fiber) is solved, and
   failures are cached per fiber.
2. Edge phase. Edges between two fibers form an m-regular bipartite
   multigraph (m = number of parallel target edges), which always splits
   into m perfect matchings. Each internal subproblem is an assignment of
   fiber edges to the loops and semi-edges of the target vertex. When the
   target vertex has no loops this is exactly an edge coloring.

Candidate orders follow vertex and edge ids, so results are deterministic.
"""

from collections import Counter
from typing import Optional

import networkx as nx

from ...constants import ISOMORPHISM_ORBIT_CAP
from ...core.isomorphism import vertex_orbits
from ...core.multigraph import Multigraph, induced_subgraph, is_connected
from ...exceptions import ConstructionAnomalyError, UnsupportedInputError
from ...logging_config import cover_logger as logger
from ..colorings.chromatic import find_edge_coloring
from ..colorings.matchings import has_semi_perfect_matching
from .projection import CoverProjection, ProjectionKind, verify


class _InternalSolver:
    """Assign the edges inside one fiber to the loops and semi-edges of its target vertex."""

    def __init__(self, G: Multigraph, H: Multigraph, kind: ProjectionKind):
        self.G = G
        self.H = H
        self.kind = kind
        self.cache = {}

    def solve(self, a: int, fiber: frozenset) -> Optional[dict]:
        key = (a, fiber)
        if key not in self.cache:
            self.cache[key] = self._solve(a, fiber)
        return self.cache[key]

    def _internal_edges(self, fiber) -> list:
        eids = set()
        for x in fiber:
            for e in self.G.incidence[x]:
                edge = self.G.edges[e]
                if not edge.is_normal or (edge.u in fiber and edge.v in fiber):
                    eids.add(e)
        return sorted(eids)

    def _solve(self, a, fiber):
        G, H = self.G, self.H
        eids = self._internal_edges(fiber)
        loops = H.loops_at(a)
        semis = H.semis_at(a)
        if not eids:
            return {} if not loops and not semis else None
        if not loops and not semis:
            return None

        sub, _ = induced_subgraph(G, fiber)
        # induced_subgraph keeps edge order, so sub edge i is eids[i]
        if semis and has_semi_perfect_matching(sub) is None:
            return None
        if not loops:
            coloring = find_edge_coloring(sub, len(semis))
            if coloring is None:
                return None
            return {eids[i]: semis[c] for i, c in enumerate(coloring.colors)}
        return self._backtrack(fiber, eids, loops, semis)

    def _backtrack(self, fiber, eids, loops, semis):
        G = self.G
        cover_mode = self.kind is ProjectionKind.COVER
        classes = [loops, semis]  # interchangeable target edges
        class_of = {t: 0 for t in loops}
        class_of.update({t: 1 for t in semis})
        slots = {t: 2 for t in loops}
        slots.update({t: 1 for t in semis})

        cap = {(x, t): slots[t] for x in fiber for t in slots}
        used = [set(), set()]

        def domain(e):
            edge = G.edges[e]
            if edge.is_loop:
                return loops
            if edge.is_semi:
                return semis if cover_mode else semis + loops
            return loops + semis

        def usage(e):
            edge = G.edges[e]
            if edge.is_loop:
                return ((edge.u, 2),)
            if edge.is_semi:
                return ((edge.u, 1),)
            return ((edge.u, 1), (edge.v, 1))

        def fits(e, t):
            return all(cap[(x, t)] >= need for x, need in usage(e))

        def allowed(e):
            result = []
            for t in domain(e):
                cls = classes[class_of[t]]
                idx = cls.index(t)
                # Only the first unused member of a class may be opened
                if t not in used[class_of[t]] and idx > 0 and cls[idx - 1] not in used[class_of[t]]:
                    continue
                if fits(e, t):
                    result.append(t)
            return result

        assignment = {}
        remaining = list(eids)
        open_edges = set(eids)

        def supply_ok(x):
            for t in slots:
                need = cap[(x, t)]
                if need <= 0:
                    continue
                supply = 0
                for e in G.incidence[x]:
                    if e in open_edges and t in domain(e):
                        supply += dict(usage(e)).get(x, 0)
                if supply < need:
                    return False
            return True

        def search():
            if not remaining:
                return all(v == 0 for v in cap.values())
            best, best_vals = None, None
            for e in remaining:
                vals = allowed(e)
                if not vals:
                    return False
                if best is None or len(vals) < len(best_vals):
                    best, best_vals = e, vals
                    if len(vals) == 1:
                        break
            remaining.remove(best)
            open_edges.discard(best)
            touched = {x for x, _ in usage(best)}
            for t in best_vals:
                fresh = t not in used[class_of[t]]
                for x, need in usage(best):
                    cap[(x, t)] -= need
                if fresh:
                    used[class_of[t]].add(t)
                assignment[best] = t
                if all(supply_ok(x) for x in touched) and search():
                    return True
                del assignment[best]
                if fresh:
                    used[class_of[t]].discard(t)
                for x, need in usage(best):
                    cap[(x, t)] += need
            remaining.append(best)
            remaining.sort()
            open_edges.add(best)
            return False

        return dict(assignment) if search() else None


class _CoverSearch:
    def __init__(self, G: Multigraph, H: Multigraph, kind: ProjectionKind):
        self.G, self.H, self.kind = G, H, kind
        self.k = G.vertex_count // H.vertex_count
        self.internal = _InternalSolver(G, H, kind)
        self.nodes = 0

        self.mult = [[0] * H.vertex_count for _ in H.vertices]
        for (a, b), m in H.multiplicity.items():
            self.mult[a][b] = self.mult[b][a] = m
        self.L = [len(H.loops_at(a)) for a in H.vertices]
        self.S = [len(H.semis_at(a)) for a in H.vertices]
        self.h_adj = [[b for b in H.vertices if self.mult[a][b]] for a in H.vertices]

        self.g_loops = [len(G.loops_at(v)) for v in G.vertices]
        self.g_semis = [len(G.semis_at(v)) for v in G.vertices]
        self.g_nbrs = [[G.edges[e].other(v) for e in G.normals_at(v)] for v in G.vertices]

        self.order, self.parent = self._bfs_order()
        self.f = [-1] * G.vertex_count
        self.fibers = [[] for _ in H.vertices]
        self.orbit_reps = None
        if H.vertex_count <= ISOMORPHISM_ORBIT_CAP:
            self.orbit_reps = [orbit[0] for orbit in vertex_orbits(H)]

    def _bfs_order(self):
        order, parent, seen = [], {}, set()
        for root in self.G.vertices:
            if root in seen:
                continue
            seen.add(root)
            parent[root] = None
            queue = [root]
            while queue:
                v = queue.pop(0)
                order.append(v)
                for w in self.g_nbrs[v]:
                    if w not in seen:
                        seen.add(w)
                        parent[w] = v
                        queue.append(w)
        return order, parent

    def _candidates(self, position, v):
        H = self.H
        deg = self.G.degree(v)
        p = self.parent[v]
        if p is None:
            pool = self.orbit_reps if position == 0 and self.orbit_reps is not None else list(H.vertices)
        else:
            a = self.f[p]
            pool = set(self.h_adj[a])
            if self.L[a] or self.S[a]:
                pool.add(a)
            pool = sorted(pool)
        return [b for b in pool if H.degree(b) == deg and len(self.fibers[b]) < self.k]

    def _locally_ok(self, x) -> bool:
        a = self.f[x]
        counts = Counter()
        complete = True
        for w in self.g_nbrs[x]:
            if self.f[w] < 0:
                complete = False
            else:
                counts[self.f[w]] += 1
        for b, c in counts.items():
            if b != a and c > self.mult[a][b]:
                return False
        if self.g_loops[x] > self.L[a]:
            return False
        if self.kind is ProjectionKind.COVER and self.g_semis[x] > self.S[a]:
            return False
        internal = counts[a] + 2 * self.g_loops[x] + self.g_semis[x]
        if internal > 2 * self.L[a] + self.S[a]:
            return False
        if complete:
            for b in self.h_adj[a]:
                if b != a and counts[b] != self.mult[a][b]:
                    return False
        return True

    def _assign(self, position) -> bool:
        if position == len(self.order):
            return True
        v = self.order[position]
        for b in self._candidates(position, v):
            self.nodes += 1
            self.f[v] = b
            self.fibers[b].append(v)
            ok = self._locally_ok(v) and all(
                self._locally_ok(w) for w in self.g_nbrs[v] if self.f[w] >= 0
            )
            if ok and len(self.fibers[b]) == self.k:
                ok = self.internal.solve(b, frozenset(self.fibers[b])) is not None
            if ok and self._assign(position + 1):
                return True
            self.fibers[b].pop()
            self.f[v] = -1
        return False

    def _split_bundles(self, edge_map):
        G, H = self.G, self.H
        bundles = {}
        for t, edge in enumerate(H.edges):
            if edge.is_normal:
                bundles.setdefault(edge.key(), []).append(t)
        between = {}
        for e, edge in enumerate(G.edges):
            if not edge.is_normal:
                continue
            a, b = self.f[edge.u], self.f[edge.v]
            if a == b:
                continue
            x, y = (edge.u, edge.v) if a < b else (edge.v, edge.u)
            between.setdefault((min(a, b), max(a, b)), {}).setdefault((x, y), []).append(e)

        for (a, b), targets in sorted(bundles.items()):
            remaining = between.get((a, b), {})
            top = [("a", x) for x in self.fibers[a]]
            for t in targets:
                graph = nx.Graph()
                graph.add_nodes_from(top)
                graph.add_nodes_from(("b", y) for y in self.fibers[b])
                graph.add_edges_from(
                    (("a", x), ("b", y)) for (x, y), es in sorted(remaining.items()) if es
                )
                matching = nx.bipartite.hopcroft_karp_matching(graph, top_nodes=top)
                for node in top:
                    if node not in matching:
                        raise ConstructionAnomalyError(
                            f"bundle between {a} and {b} has no perfect matching", rule="regular-bundle"
                        )
                    y = matching[node][1]
                    edge_map[remaining[(node[1], y)].pop(0)] = t

    def run(self) -> Optional[CoverProjection]:
        if not self._assign(0):
            logger.debug(f"find_cover: exhausted after {self.nodes} vertex nodes")
            return None
        edge_map = [None] * self.G.edge_count
        for a in self.H.vertices:
            solution = self.internal.solve(a, frozenset(self.fibers[a]))
            for e, t in solution.items():
                edge_map[e] = t
        self._split_bundles(edge_map)
        logger.debug(f"find_cover: found after {self.nodes} vertex nodes")
        return CoverProjection(self.G, self.H, tuple(self.f), tuple(edge_map))


def find_cover(G: Multigraph, H: Multigraph,
               kind: ProjectionKind = ProjectionKind.COVER) -> Optional[CoverProjection]:
    """
    Find a covering (or semi-covering) projection from ``G`` onto ``H``.

    Args:
        G: source graph, possibly disconnected (every component must cover H)
        H: connected target graph
        kind: ProjectionKind.COVER or ProjectionKind.SEMICOVER

    Returns:
        A verified CoverProjection, or None if none exists (exhaustive).

    Raises:
        UnsupportedInputError: if ``H`` is disconnected
    """
    if not is_connected(H):
        logger.error("find_cover: target graph is disconnected")
        raise UnsupportedInputError("target graph must be connected")
    if G.vertex_count == 0 or G.vertex_count % H.vertex_count:
        return None
    k = G.vertex_count // H.vertex_count
    want = Counter({d: k * c for d, c in Counter(H.degrees).items()})
    if Counter(G.degrees) != want:
        return None

    projection = _CoverSearch(G, H, kind).run()
    if projection is None:
        return None
    result = verify(projection, kind)
    if not result.ok:
        logger.error(f"find_cover produced an invalid projection: {result.violations[0]}")
        raise ConstructionAnomalyError("search produced a projection that does not verify")
    logger.info(f"find_cover: found {kind.value} {G.vertex_count} -> {H.vertex_count} vertices ({k}-fold)")
    return projection


def covers(G: Multigraph, H: Multigraph) -> bool:
    return find_cover(G, H, ProjectionKind.COVER) is not None


def semi_covers(G: Multigraph, H: Multigraph) -> bool:
    return find_cover(G, H, ProjectionKind.SEMICOVER) is not None
