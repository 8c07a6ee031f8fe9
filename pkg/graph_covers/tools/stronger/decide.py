# graph_covers/tools/stronger/decide.py

"""
Deciding A |> B ("every simple graph covering A also covers B").

decide_stronger runs a cascade; the first step that applies wins:

1. A covers B
2. A semi-covers B
3. the divisibility condition on vertex counts fails
4. A is simple, so A itself is the witness
5. both graphs are cycles or open paths
6. A is a dipole: its odd-fold simple cover
7. B is F(3,0) and A is cubic: 3-edge-colorability
8. B is F(1,1) and A is cubic: semi-perfect matchings
9. bounded witness search: catalog witnesses, then voltage enumeration

Every NotStronger verdict carries a simple witness W, a verified W -> A
projection, and a record of why W does not cover B.
"""

from functools import lru_cache
from typing import Optional

from ...constants import DEFAULT_BUDGET, ENUMERATION_VERTEX_CAP, REFUTATION_INTERMEDIATES, WITNESS_CANDIDATES
from ...core.catalog import catalog_graph, make_cycle, make_flower
from ...core.isomorphism import are_isomorphic
from ...core.multigraph import Multigraph, is_connected, is_simple
from ...exceptions import CapExceededError, PreconditionError, UnsupportedInputError
from ...logging_config import stronger_logger as logger
from ..colorings.chromatic import chromatic_index, find_edge_coloring
from ..colorings.matchings import covers_F11, has_semi_perfect_matching
from ..covers.projection import CoverProjection, ProjectionKind, identity_projection
from ..covers.search import find_cover
from ..factory.nopm import witness_not_F11
from ..factory.simple_cover import dipole_odd_cover
from ..factory.snark import snark_cover
from .enumerate import enumerate_simple_covers
from .evidence import RefutationRecord, StrongerEvidence, Verdict


@lru_cache(maxsize=None)
def cached_find_cover(g: Multigraph, h: Multigraph, kind: ProjectionKind = ProjectionKind.COVER):
    return find_cover(g, h, kind)


def _require_connected(a: Multigraph, b: Multigraph, what: str) -> None:
    if not is_connected(a) or not is_connected(b):
        logger.error(f"{what}: disconnected input")
        raise UnsupportedInputError(f"{what} needs connected graphs")


def divisibility_ok(a: Multigraph, b: Multigraph) -> bool:
    """
    Necessary condition for A |> B: |V(B)| divides 2|V(A)|, and divides
    |V(A)| when A has no semi-edges.

    Raises:
        UnsupportedInputError: if either graph is disconnected
    """
    _require_connected(a, b, "divisibility_ok")
    total = 2 * a.vertex_count if a.has_semis else a.vertex_count
    return total % b.vertex_count == 0


def two_regular_shape(g: Multigraph) -> Optional[tuple]:
    """("C", n) for a cycle, ("P", n) for an open path on n vertices, else None."""
    if not is_connected(g) or not g.is_regular(2):
        return None
    return ("P" if g.has_semis else "C", g.vertex_count)


def classify_2regular(a: Multigraph, b: Multigraph) -> Optional[bool]:
    """
    Exact verdict for cycles and open paths, None otherwise.

    C_n |> C_m iff m | n;   C_n |> P_m iff 2m | n;
    P_n |> C_m iff m | 2n;  P_n |> P_m iff m | n.
    """
    shape_a, shape_b = two_regular_shape(a), two_regular_shape(b)
    if shape_a is None or shape_b is None:
        return None
    (kind_a, n), (kind_b, m) = shape_a, shape_b
    if kind_a == "C":
        return n % (m if kind_b == "C" else 2 * m) == 0
    return (2 * n if kind_b == "C" else n) % m == 0


def _is_dipole(g: Multigraph) -> bool:
    return g.vertex_count == 2 and g.edge_count > 0 and all(e.is_normal for e in g.edges)


def _fast_refutation(w: Multigraph, name: str) -> Optional[str]:
    """Method name if ``w`` provably does not cover the flower ``name``, else None."""
    if name == "F(1,1)":
        return "perfect-matching" if covers_F11(w) is None else None
    if name == "F(3,0)":
        return "edge-coloring" if find_edge_coloring(w, 3) is None else None
    return None


def refute(w: Multigraph, b: Multigraph) -> Optional[RefutationRecord]:
    """
    Show that ``w`` does not cover ``b``.

    Cubic witnesses are first checked against the flowers F(1,1) and F(3,0):
    if B covers the flower and W does not, W cannot cover B. Otherwise the
    exhaustive search decides.
    """
    if w.is_cubic():
        for name in REFUTATION_INTERMEDIATES:
            flower = catalog_graph(name)
            if are_isomorphic(b, flower):
                method = _fast_refutation(w, name)
                if method:
                    return RefutationRecord(method)
                continue
            through = cached_find_cover(b, flower)
            if through is None:
                continue
            method = _fast_refutation(w, name)
            if method:
                return RefutationRecord(method, intermediate=name, intermediate_projection=through)
    if cached_find_cover(w, b) is None:
        return RefutationRecord("exhaustive")
    return None


def _witness(projection: CoverProjection, b: Multigraph, source: str) -> Optional[StrongerEvidence]:
    refutation = refute(projection.source, b)
    if refutation is None:
        logger.debug(f"candidate witness {source} covers B")
        return None
    logger.info(f"witness {source} with {projection.source.vertex_count} vertices: {refutation.method}")
    return StrongerEvidence(
        Verdict.NOT_STRONGER_BY_WITNESS,
        witness=projection.source,
        witness_projection=projection,
        refutation=refutation,
        witness_source=source,
    )


def _probe_catalog(a: Multigraph, b: Multigraph, candidates) -> Optional[StrongerEvidence]:
    for name in candidates:
        w = catalog_graph(name)
        if w.vertex_count % a.vertex_count:
            continue
        projection = cached_find_cover(w, a)
        if projection is None:
            continue
        evidence = _witness(projection, b, name)
        if evidence:
            return evidence
    return None


def _cycle_witness(a: Multigraph, b: Multigraph) -> Optional[StrongerEvidence]:
    kind, n = two_regular_shape(a)
    step = n if kind == "C" else 2 * n
    for t in range(1, 2 * b.vertex_count + 4):
        length = step * t
        if length < 3:
            continue
        w = make_cycle(length)
        projection = cached_find_cover(w, a)
        if projection is not None:
            evidence = _witness(projection, b, f"C_{length}")
            if evidence:
                return evidence
    return None


def _search(a: Multigraph, b: Multigraph, budget: int, candidates) -> Optional[StrongerEvidence]:
    evidence = _probe_catalog(a, b, candidates)
    if evidence:
        return evidence
    top = min(budget, ENUMERATION_VERTEX_CAP) // a.vertex_count
    for k in range(1, top + 1):
        try:
            for projection in enumerate_simple_covers(a, k):
                evidence = _witness(projection, b, f"enumerated {k}-fold cover")
                if evidence:
                    return evidence
        except CapExceededError as e:
            logger.debug(f"_search: enumeration stops at k={k}: {e}")
            break
    return None


def decide_stronger(a: Multigraph, b: Multigraph, budget: int = DEFAULT_BUDGET,
                    candidates=WITNESS_CANDIDATES) -> StrongerEvidence:
    """
    Collect evidence for or against A |> B.

    Args:
        a, b: connected graphs
        budget: largest witness size, in vertices, for the bounded search
        candidates: catalog names tried as witnesses before enumeration

    Returns:
        StrongerEvidence; UNKNOWN when the bounded search finds no witness

    Raises:
        UnsupportedInputError: if either graph is disconnected
    """
    _require_connected(a, b, "decide_stronger")

    projection = cached_find_cover(a, b, ProjectionKind.COVER)
    if projection is not None:
        return StrongerEvidence(Verdict.STRONGER_BY_COVER, projection=projection)
    projection = cached_find_cover(a, b, ProjectionKind.SEMICOVER)
    if projection is not None:
        return StrongerEvidence(Verdict.STRONGER_BY_SEMICOVER, projection=projection)

    if not divisibility_ok(a, b):
        return StrongerEvidence(Verdict.NOT_STRONGER_BY_DIVISIBILITY,
                                sizes=(a.vertex_count, b.vertex_count))

    if is_simple(a):
        return StrongerEvidence(
            Verdict.NOT_STRONGER_BY_WITNESS,
            witness=a,
            witness_projection=identity_projection(a),
            refutation=RefutationRecord("exhaustive"),
            witness_source="A itself",
        )

    regular = classify_2regular(a, b)
    if regular is True:
        return StrongerEvidence(Verdict.STRONGER_BY_THEOREM, theorem="2-regular divisibility")
    if regular is False:
        evidence = _cycle_witness(a, b)
        if evidence:
            return evidence

    if _is_dipole(a):
        evidence = _witness(dipole_odd_cover(a.edge_count), b, "dipole odd-fold cover")
        if evidence:
            return evidence

    if a.is_cubic() and are_isomorphic(b, make_flower(3, 0)):
        if not chromatic_index(a).exceeds(3):
            return StrongerEvidence(Verdict.STRONGER_BY_THEOREM, theorem="3-edge-coloring")
        evidence = _probe_catalog(a, b, candidates)
        if evidence:
            return evidence
        try:
            evidence = _witness(snark_cover(a), b, "snark cover")
        except PreconditionError as e:
            logger.warning(f"snark cover unavailable: {e}")
        if evidence:
            return evidence

    if a.is_cubic() and are_isomorphic(b, make_flower(1, 1)):
        if has_semi_perfect_matching(a) is not None:
            return StrongerEvidence(Verdict.STRONGER_BY_THEOREM, theorem="semi-perfect matching")
        evidence = _probe_catalog(a, b, candidates)
        if evidence:
            return evidence
        try:
            evidence = _witness(witness_not_F11(a), b, "cover without a perfect matching")
        except PreconditionError as e:
            logger.warning(f"matching-free cover unavailable: {e}")
        if evidence:
            return evidence

    evidence = _search(a, b, budget, candidates)
    if evidence:
        return evidence
    logger.info(f"decide_stronger: no witness within {budget} vertices")
    return StrongerEvidence(Verdict.UNKNOWN, budget=budget)
