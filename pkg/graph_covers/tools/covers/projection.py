# graph_covers/tools/covers/projection.py

"""
Covering and semi-covering projections: data type, verification,
composition, fold counts and the text certificate format.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ...core.multigraph import Multigraph, is_connected
from ...exceptions import (
    MalformedProjectionError, ParseError, PreconditionError, UnsupportedInputError, ValidationError
)
from ...logging_config import cover_logger as logger


class ProjectionKind(Enum):
    COVER = "cover"
    SEMICOVER = "semicover"


@dataclass(frozen=True)
class CoverProjection:
    """
    A vertex map and an edge map from ``source`` to ``target``.

    ``vertex_map[v]`` is the image of source vertex v and ``edge_map[e]``
    the image of source edge e.
    """
    source: Multigraph
    target: Multigraph
    vertex_map: tuple
    edge_map: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertex_map", tuple(self.vertex_map))
        object.__setattr__(self, "edge_map", tuple(self.edge_map))

    def fiber(self, target_vertex: int) -> list:
        return [v for v, w in enumerate(self.vertex_map) if w == target_vertex]


@dataclass(frozen=True)
class VerifyResult:
    ok: bool
    violations: tuple = ()

    def __bool__(self):
        return self.ok


# Allowed (source kind -> target kinds)
_COVER_KINDS = {"NORMAL": {"NORMAL", "LOOP", "SEMI"}, "LOOP": {"LOOP"}, "SEMI": {"SEMI"}}
_SEMICOVER_KINDS = {"NORMAL": {"NORMAL", "LOOP", "SEMI"}, "LOOP": {"LOOP"}, "SEMI": {"SEMI", "LOOP"}}


def _check_structure(p: CoverProjection) -> None:
    src, dst = p.source, p.target
    if len(p.vertex_map) != src.vertex_count or len(p.edge_map) != src.edge_count:
        raise MalformedProjectionError(
            f"maps not total: {len(p.vertex_map)}/{src.vertex_count} vertices, "
            f"{len(p.edge_map)}/{src.edge_count} edges"
        )
    for v, w in enumerate(p.vertex_map):
        if not isinstance(w, int) or not 0 <= w < dst.vertex_count:
            raise MalformedProjectionError(f"vertex {v} maps to {w!r}, outside the target")
    for e, f in enumerate(p.edge_map):
        if not isinstance(f, int) or not 0 <= f < dst.edge_count:
            raise MalformedProjectionError(f"edge {e} maps to {f!r}, outside the target")


def _slots(edge) -> int:
    """Degree slots a target edge occupies at one of its endpoints."""
    return 2 if edge.is_loop else 1


def _verify(p: CoverProjection, kind: ProjectionKind) -> VerifyResult:
    _check_structure(p)
    src, dst = p.source, p.target
    fv, fe = p.vertex_map, p.edge_map
    allowed = _COVER_KINDS if kind is ProjectionKind.COVER else _SEMICOVER_KINDS
    violations = []

    missing_v = sorted(set(dst.vertices) - set(fv))
    if missing_v:
        violations.append(f"surjectivity: target vertices {missing_v} have empty fibers")
    missing_e = sorted(set(range(dst.edge_count)) - set(fe))
    if missing_e:
        violations.append(f"surjectivity: target edges {missing_e} have no preimage")

    for v in src.vertices:
        if src.degree(v) != dst.degree(fv[v]):
            violations.append(
                f"degree: vertex {v} has degree {src.degree(v)} but its image {fv[v]} "
                f"has degree {dst.degree(fv[v])}"
            )

    for e, edge in enumerate(src.edges):
        image = dst.edges[fe[e]]
        if image.kind.name not in allowed[edge.kind.name]:
            violations.append(
                f"kind: {edge.kind.name.lower()} edge {e} maps to "
                f"{image.kind.name.lower()} edge {fe[e]}"
            )
            continue
        ends = sorted((fv[edge.u], fv[edge.v]))
        if image.is_normal:
            ok = ends == sorted((image.u, image.v))
        else:
            ok = ends == [image.u, image.u]
        if not ok:
            violations.append(
                f"incidence: edge {e} with endpoint images {ends} maps to edge {fe[e]} "
                f"at {sorted({image.u, image.v})}"
            )

    # Local bijectivity, stated through fibers: each source vertex meets every
    # target edge at its image exactly as often as that edge meets the image.
    for v in src.vertices:
        meets = Counter()
        for e in src.incidence[v]:
            edge = src.edges[e]
            meets[fe[e]] += 2 if edge.is_loop else 1
        for t in dst.incidence[fv[v]]:
            expected = _slots(dst.edges[t])
            if meets[t] != expected:
                violations.append(
                    f"fiber: vertex {v} meets target edge {t} "
                    f"({dst.edges[t].kind.name.lower()} at {fv[v]}) {meets[t]} times, expected {expected}"
                )

    if violations:
        logger.debug(f"{kind.value} verification failed with {len(violations)} violations")
    return VerifyResult(not violations, tuple(violations))


def verify_cover(p: CoverProjection) -> VerifyResult:
    """
    Check ``p`` against the covering rules: surjective, degree preserving,
    semi -> semi, loop -> loop, incidence preserving, and every target edge's
    preimage has the right fiber structure (a perfect matching between fibers
    for a normal edge, a spanning union of cycles for a loop, a spanning
    1-regular subgraph of semi-edges and normal edges for a semi-edge).

    Raises:
        MalformedProjectionError: if the maps are not total or out of range
    """
    return _verify(p, ProjectionKind.COVER)


def verify_semicover(p: CoverProjection) -> VerifyResult:
    """
    Like verify_cover, but semi-edges may also map onto loops, so the preimage
    of a loop may contain open paths (paths with a semi-edge at each end).
    """
    return _verify(p, ProjectionKind.SEMICOVER)


def verify(p: CoverProjection, kind: ProjectionKind = ProjectionKind.COVER) -> VerifyResult:
    return _verify(p, kind)


def identity_projection(g: Multigraph) -> CoverProjection:
    return CoverProjection(g, g, tuple(g.vertices), tuple(range(g.edge_count)))


def compose(p: CoverProjection, q: CoverProjection) -> CoverProjection:
    """
    The projection ``q . p`` from ``p.source`` to ``q.target``.

    Raises:
        ValidationError: if ``p.target`` is not structurally ``q.source``
    """
    if p.target != q.source:
        logger.error("compose: middle graphs differ")
        raise ValidationError("cannot compose: target of the first projection is not the source of the second")
    _check_structure(p)
    _check_structure(q)
    return CoverProjection(
        p.source,
        q.target,
        tuple(q.vertex_map[w] for w in p.vertex_map),
        tuple(q.edge_map[f] for f in p.edge_map),
    )


def fold_count(p: CoverProjection) -> int:
    """
    Number of sheets k = |V(source)| / |V(target)|.

    Raises:
        UnsupportedInputError: if the target is disconnected
        PreconditionError: if ``p`` does not verify as a (semi-)cover
    """
    if not is_connected(p.target):
        raise UnsupportedInputError("fold count needs a connected target")
    result = verify_semicover(p)
    if not result.ok:
        logger.error(f"fold_count on a non-verifying projection: {result.violations[0]}")
        raise PreconditionError("projection does not verify", rule="verifies")
    sizes = Counter(p.vertex_map)
    k = p.source.vertex_count // p.target.vertex_count
    if set(sizes.values()) != {k}:
        raise PreconditionError(f"fibers are not uniform: {dict(sizes)}", rule="uniform-fibers")
    return k


def projection_certificate(p: CoverProjection) -> str:
    """Certificate text: ``v <src> <dst>`` lines, then ``e <src> <dst>`` lines."""
    lines = [f"v {v} {w}" for v, w in enumerate(p.vertex_map)]
    lines += [f"e {e} {f}" for e, f in enumerate(p.edge_map)]
    return "\n".join(lines) + "\n"


def parse_certificate(text: str, source: Multigraph, target: Multigraph,
                      filename: Optional[str] = None) -> CoverProjection:
    """
    Parse certificate text against known source and target graphs.

    Raises:
        ParseError: on malformed or duplicate lines
        MalformedProjectionError: if some source vertex or edge has no image
    """
    vmap, emap = {}, {}
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(tokens) != 3 or tokens[0] not in ("v", "e"):
            raise ParseError(f"expected 'v <src> <dst>' or 'e <src> <dst>', got {line!r}", filename, line_no)
        try:
            src, dst = int(tokens[1]), int(tokens[2])
        except ValueError:
            raise ParseError(f"non-integer entry in {line!r}", filename, line_no)
        table = vmap if tokens[0] == "v" else emap
        if src in table:
            raise ParseError(f"duplicate entry for {tokens[0]} {src}", filename, line_no)
        table[src] = dst
    if set(vmap) != set(source.vertices) or set(emap) != set(range(source.edge_count)):
        raise MalformedProjectionError("certificate does not map every source vertex and edge exactly once")
    return CoverProjection(
        source, target,
        tuple(vmap[v] for v in source.vertices),
        tuple(emap[e] for e in range(source.edge_count)),
    )
