# graph_covers/tools/factory/simple_cover.py

"""
Simple p-fold covers built from fixed 1-factorizations.

Vertex ``v`` of G becomes ``v*p + i`` for i in range(p).

- The j-th of several parallel edges uv lifts to the perfect matching
  u_i -- v_{(i+j) mod p}, one factor of K_{p,p}.
- Without semi-edges at v, the t-th loop lifts to u_i -- u_{(i+t) mod p}.
- With semi-edges at v (p even), loops and semi-edges share the round-robin
  1-factorization of K_p: loop t takes two rounds, each semi-edge one.
"""

from dataclasses import dataclass
from collections import Counter

from ...core.catalog import make_dumbbell
from ...core.multigraph import Edge, Multigraph, is_simple, max_multiplicity, max_semi_loop_load
from ...exceptions import ConstructionAnomalyError, PreconditionError
from ...logging_config import factory_logger as logger
from ..covers.projection import CoverProjection, verify_cover


@dataclass(frozen=True)
class FoldSpec:
    """Admissible fold counts for a graph: p >= minimum, and p even when ``needs_even``."""
    minimum: int
    needs_even: bool

    @classmethod
    def of(cls, g: Multigraph) -> "FoldSpec":
        return cls(max(max_multiplicity(g), max_semi_loop_load(g) + 1, 1), g.has_semis)

    def admits(self, p: int) -> bool:
        return p >= self.minimum and not (self.needs_even and p % 2)

    def smallest(self, odd: bool = False) -> int:
        p = self.minimum
        while not self.admits(p) or (odd and p % 2 == 0):
            p += 1
        return p


def round_robin_round(p: int, r: int) -> list:
    """Round ``r`` (0 <= r <= p-2) of the circle-method 1-factorization of K_p, p even."""
    m = p - 1
    pairs = [(m, r)]
    for t in range(1, p // 2):
        pairs.append(((r + t) % m, (r - t) % m))
    return pairs


def check_fold(g: Multigraph, p: int) -> FoldSpec:
    """
    Raises:
        PreconditionError: rule "parity" for odd p with semi-edges present,
            rule "fold-size" when p is below max(d, q+1)
    """
    spec = FoldSpec.of(g)
    if spec.needs_even and p % 2:
        logger.error(f"simple_pfold_cover: p={p} is odd but the graph has semi-edges")
        raise PreconditionError(f"a graph with semi-edges has no simple {p}-fold cover", rule="parity")
    if p < spec.minimum:
        logger.error(f"simple_pfold_cover: p={p} below the minimum {spec.minimum}")
        raise PreconditionError(f"fold count {p} is below the minimum {spec.minimum}", rule="fold-size")
    return spec


def assert_simple_cover(projection: CoverProjection, what: str) -> CoverProjection:
    """Re-verify a construction: the source must be simple and cover the target."""
    if not is_simple(projection.source):
        logger.error(f"{what}: output is not simple")
        raise ConstructionAnomalyError(f"{what} produced a graph that is not simple")
    result = verify_cover(projection)
    if not result.ok:
        logger.error(f"{what}: output does not verify: {result.violations[0]}")
        raise ConstructionAnomalyError(f"{what} produced a projection that does not verify")
    return projection


def simple_pfold_cover(g: Multigraph, p: int) -> CoverProjection:
    """
    Build a simple p-fold cover of ``g``.

    Args:
        g: any graph
        p: fold count, at least max(d, q+1) where d is the largest edge
           multiplicity and q the largest #semi-edges + 2*#loops at a vertex;
           even if ``g`` has semi-edges

    Returns:
        CoverProjection from the cover onto ``g``

    Raises:
        PreconditionError: if ``p`` is not admissible
        ConstructionAnomalyError: if the output fails re-verification
    """
    check_fold(g, p)
    edges, edge_map = [], []
    bundle_seen = Counter()
    loops_seen = Counter()
    semis_seen = Counter()

    for e, edge in enumerate(g.edges):
        if edge.is_normal:
            u, v = edge.key()
            j = bundle_seen[(u, v)]
            bundle_seen[(u, v)] += 1
            lifted = [Edge.normal(u * p + i, v * p + (i + j) % p) for i in range(p)]
        elif edge.is_loop:
            v = edge.u
            loops_seen[v] += 1
            t = loops_seen[v]
            if g.semis_at(v):
                rounds = round_robin_round(p, 2 * t - 2) + round_robin_round(p, 2 * t - 1)
                lifted = [Edge.normal(v * p + a, v * p + b) for a, b in rounds]
            else:
                if 2 * t % p == 0:
                    raise ConstructionAnomalyError(f"loop lift {t} degenerates for p={p}")
                lifted = [Edge.normal(v * p + i, v * p + (i + t) % p) for i in range(p)]
        else:
            v = edge.u
            r = 2 * len(g.loops_at(v)) + semis_seen[v]
            semis_seen[v] += 1
            lifted = [Edge.normal(v * p + a, v * p + b) for a, b in round_robin_round(p, r)]
        edges += lifted
        edge_map += [e] * len(lifted)

    cover = Multigraph(g.vertex_count * p, tuple(edges))
    projection = CoverProjection(cover, g, tuple(x // p for x in cover.vertices), tuple(edge_map))
    assert_simple_cover(projection, "simple_pfold_cover")
    logger.info(f"simple_pfold_cover: {p}-fold cover with {cover.vertex_count} vertices")
    return projection


def dipole_odd_cover(d: int) -> CoverProjection:
    """
    Simple odd-fold cover of the dipole W(0,0,d,0,0) at the smallest odd
    p >= d. It has 2p vertices, so 2p = 2 (mod 4).
    """
    dipole = make_dumbbell(0, 0, d, 0, 0)
    p = FoldSpec.of(dipole).smallest(odd=True)
    return simple_pfold_cover(dipole, p)
