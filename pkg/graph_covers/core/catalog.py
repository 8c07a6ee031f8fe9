# graph_covers/core/catalog.py

"""
Catalog of named graphs: flowers F(a,b), dumbbells W(k,m,l,p,q), cycles,
open paths, circulants C(n; d1,...) and a fixed set of small cubic graphs.

Every construction is deterministic: the same name always yields the same
edge list.
"""

import re
from dataclasses import dataclass
from functools import lru_cache

from ..constants import SMALL_CUBIC_NAMES
from ..exceptions import UnknownGraphError, ValidationError
from ..logging_config import core_logger as logger
from .multigraph import Edge, Multigraph


@dataclass(frozen=True)
class NamedGraph:
    name: str
    graph: Multigraph
    provenance: str  # "[STANDARD] ..." or "[DERIVED] ..."


def _check_counts(*counts):
    for c in counts:
        if not isinstance(c, int) or c < 0:
            raise ValidationError(f"counts must be nonnegative integers, got {counts}")


def make_flower(a: int, b: int) -> Multigraph:
    """F(a,b): one vertex with ``a`` semi-edges followed by ``b`` loops."""
    _check_counts(a, b)
    return Multigraph(1, tuple([Edge.semi(0)] * a + [Edge.loop(0)] * b))


def make_dumbbell(k: int, m: int, l: int, p: int, q: int) -> Multigraph:
    """
    W(k,m,l,p,q): vertex 0 with ``k`` semi-edges and ``m`` loops, vertex 1 with
    ``p`` loops and ``q`` semi-edges, joined by ``l`` parallel edges.

    Edge order: semi-edges at 0, loops at 0, the joining edges, loops at 1,
    semi-edges at 1.
    """
    _check_counts(k, m, l, p, q)
    edges = ([Edge.semi(0)] * k + [Edge.loop(0)] * m + [Edge.normal(0, 1)] * l
             + [Edge.loop(1)] * p + [Edge.semi(1)] * q)
    return Multigraph(2, tuple(edges))


def make_cycle(n: int) -> Multigraph:
    """C_n. C_1 is a single loop and C_2 a double edge."""
    if n < 1:
        raise ValidationError(f"cycle length must be at least 1, got {n}")
    if n == 1:
        return Multigraph(1, (Edge.loop(0),))
    return Multigraph(n, tuple(Edge.normal(i, (i + 1) % n) for i in range(n)))


def make_open_path(n: int) -> Multigraph:
    """
    Path on ``n`` vertices with a semi-edge at each terminal vertex.
    For n = 1 both semi-edges sit on the single vertex.
    """
    if n < 1:
        raise ValidationError(f"open path needs at least 1 vertex, got {n}")
    edges = [Edge.semi(0)] + [Edge.normal(i, i + 1) for i in range(n - 1)] + [Edge.semi(n - 1)]
    return Multigraph(n, tuple(edges))


def make_cycle_with_chords(n: int, spans) -> Multigraph:
    """
    C(n; d1,...,dk): the n-cycle plus every chord joining vertices ``d`` apart,
    for each listed span. Chords that coincide are added once.
    """
    if n < 3:
        raise ValidationError(f"C(n; ...) needs n >= 3, got {n}")
    edges = [Edge.normal(i, (i + 1) % n) for i in range(n)]
    seen = {e.key() for e in edges}
    for d in spans:
        if not 1 < d <= n // 2:
            raise ValidationError(f"chord span {d} must lie in 2..{n // 2}")
        for i in range(n):
            chord = Edge.normal(i, (i + d) % n)
            if chord.key() not in seen:
                seen.add(chord.key())
                edges.append(chord)
    return Multigraph(n, tuple(edges))


def make_complete(n: int) -> Multigraph:
    return Multigraph(n, tuple(Edge.normal(i, j) for i in range(n) for j in range(i + 1, n)))


def make_k33() -> Multigraph:
    """K_{3,3} with sides {0,1,2} and {3,4,5}."""
    return Multigraph(6, tuple(Edge.normal(i, j) for i in range(3) for j in range(3, 6)))


def make_cube() -> Multigraph:
    """Q3 on 3-bit vertex labels."""
    return Multigraph(8, tuple(
        Edge.normal(v, v ^ bit) for v in range(8) for bit in (1, 2, 4) if v < v ^ bit
    ))


def make_petersen() -> Multigraph:
    outer = [Edge.normal(i, (i + 1) % 5) for i in range(5)]
    spokes = [Edge.normal(i, i + 5) for i in range(5)]
    inner = [Edge.normal(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Multigraph(10, tuple(outer + spokes + inner))


def make_k3prime() -> Multigraph:
    """Triangle with one semi-edge at every vertex."""
    return Multigraph.from_lists(3, normal=[(0, 1), (1, 2), (0, 2)], semis=[0, 1, 2])


def make_c6prime() -> Multigraph:
    """Hexagon with one semi-edge at every vertex."""
    return Multigraph.from_lists(6, normal=[(i, (i + 1) % 6) for i in range(6)], semis=range(6))


def make_h1() -> Multigraph:
    """
    Hexagon 0..5 and triangles {6,7,8}, {9,10,11} joined by a perfect matching.
    Even hexagon vertices go to the first triangle, odd ones to the second.
    """
    hexagon = [(i, (i + 1) % 6) for i in range(6)]
    triangles = [(6, 7), (7, 8), (6, 8), (9, 10), (10, 11), (9, 11)]
    spokes = [(0, 6), (2, 7), (4, 8), (1, 9), (3, 10), (5, 11)]
    return Multigraph.from_lists(12, normal=hexagon + triangles + spokes)


def make_drum() -> Multigraph:
    """DG: double edges ab and cd, single edges ac and bd."""
    return Multigraph.from_lists(4, normal=[(0, 1), (0, 1), (2, 3), (2, 3), (0, 2), (1, 3)])


def make_wine_glass() -> Multigraph:
    """WG: triangle abc with bc doubled, pendant edge ad and a loop at d."""
    return Multigraph.from_lists(4, normal=[(0, 1), (0, 2), (1, 2), (1, 2), (0, 3)], loops=[3])


def make_loopy_claw() -> Multigraph:
    """LC: center 0 joined to leaves 1..3, each leaf carrying a loop."""
    return Multigraph.from_lists(4, normal=[(0, 1), (0, 2), (0, 3)], loops=[1, 2, 3])


def _odot(g: Multigraph) -> Multigraph:
    from ..tools.products.products import odot
    return odot(g).source


def make_sausage() -> Multigraph:
    """SG = odot(W(0,1,1,0,2)): loop, edge, double edge, edge, loop."""
    return _odot(make_dumbbell(0, 1, 1, 0, 2))


# name -> (builder, provenance)
_FIXED = {
    "K4": (lambda: make_complete(4), "[STANDARD] complete graph K4"),
    "K33": (make_k33, "[STANDARD] complete bipartite graph K3,3"),
    "Q3": (make_cube, "[STANDARD] 3-dimensional cube"),
    "Petersen": (make_petersen, "[STANDARD] Petersen graph, the smallest snark"),
    "K3prime": (make_k3prime, "[STANDARD] triangle with a semi-edge at each vertex"),
    "C6prime": (make_c6prime, "[STANDARD] 6-cycle with a semi-edge at each vertex"),
    "K3prime_odot": (lambda: _odot(make_k3prime()), "[STANDARD] triangular prism, odot of K3prime"),
    "C6prime_odot": (lambda: _odot(make_c6prime()), "[STANDARD] prism over C6, odot of C6prime"),
    "H1": (make_h1, "[STANDARD] 6-cycle and two triangles joined by a perfect matching"),
    "SG": (make_sausage, "[STANDARD] sausage graph, odot of W(0,1,1,0,2)"),
    "DG": (make_drum, "[DERIVED] drum graph reconstruction"),
    "WG": (make_wine_glass, "[DERIVED] wine glass graph reconstruction"),
    "LC": (make_loopy_claw, "[DERIVED] loopy claw reconstruction"),
}
_ALIASES = {"K3,3": "K33", "PRISM": "K3prime_odot", "CUBE": "Q3"}
_FIXED_BY_UPPER = {name.upper(): name for name in _FIXED}

_INT_LIST = r"\s*(\d+(?:\s*,\s*\d+)*)\s*"
_FLOWER_RE = re.compile(rf"^F\({_INT_LIST}\)$", re.IGNORECASE)
_DUMBBELL_RE = re.compile(rf"^W\({_INT_LIST}\)$", re.IGNORECASE)
_CYCLE_RE = re.compile(r"^C_?(\d+)$", re.IGNORECASE)
_PATH_RE = re.compile(r"^(?:P~|Pt|Ptilde)_?(\d+)$", re.IGNORECASE)
_CHORDS_RE = re.compile(rf"^C\(\s*(\d+)\s*;{_INT_LIST}\)$", re.IGNORECASE)


def _ints(text: str) -> list:
    return [int(x) for x in text.split(",")]


@lru_cache(maxsize=None)
def catalog(name: str) -> NamedGraph:
    """
    Resolve a catalog name.

    Accepted forms: ``F(a,b)``, ``W(k,m,l,p,q)``, ``C_n``/``Cn``, ``P~_n``
    (open path), ``C(n;d1,...)`` and the fixed names K4, K33, Q3, Petersen,
    K3prime, C6prime, K3prime_odot, C6prime_odot, H1, SG, DG, WG, LC
    (case-insensitive).

    Raises:
        UnknownGraphError: if the name matches no construction
    """
    key = name.strip()
    fixed = _FIXED_BY_UPPER.get(_ALIASES.get(key.upper(), key).upper())
    if fixed:
        builder, provenance = _FIXED[fixed]
        return NamedGraph(fixed, builder(), provenance)

    try:
        match = _FLOWER_RE.match(key)
        if match:
            args = _ints(match.group(1))
            if len(args) == 2:
                return NamedGraph(f"F({args[0]},{args[1]})", make_flower(*args),
                                  "[STANDARD] flower with a semi-edges and b loops")
        match = _DUMBBELL_RE.match(key)
        if match:
            args = _ints(match.group(1))
            if len(args) == 5:
                return NamedGraph("W({},{},{},{},{})".format(*args), make_dumbbell(*args),
                                  "[STANDARD] two-vertex dumbbell")
        match = _CHORDS_RE.match(key)
        if match:
            n, spans = int(match.group(1)), _ints(match.group(2))
            label = f"C({n};{','.join(map(str, spans))})"
            return NamedGraph(label, make_cycle_with_chords(n, spans),
                              "[STANDARD] cycle with diagonals")
        match = _CYCLE_RE.match(key)
        if match:
            n = int(match.group(1))
            return NamedGraph(f"C_{n}", make_cycle(n), "[STANDARD] cycle")
        match = _PATH_RE.match(key)
        if match:
            n = int(match.group(1))
            return NamedGraph(f"P~_{n}", make_open_path(n),
                              "[STANDARD] path with semi-edges at both ends")
    except ValidationError as e:
        logger.error(f"Invalid catalog parameters in {name!r}: {e}")
        raise UnknownGraphError(f"invalid catalog parameters in {name!r}: {e}") from e

    logger.error(f"Unknown catalog name: {name!r}")
    raise UnknownGraphError(f"unknown graph name: {name!r}")


def catalog_graph(name: str) -> Multigraph:
    """Shorthand for ``catalog(name).graph``."""
    return catalog(name).graph


def catalog_names() -> list:
    """The fixed (non-parametric) catalog names."""
    return list(_FIXED)


def small_cubic_graphs() -> list:
    """The twelve small cubic graphs of the poset report, as NamedGraphs."""
    return [catalog(name) for name in SMALL_CUBIC_NAMES]
