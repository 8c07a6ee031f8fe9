# graph_covers/tools/stronger/enumerate.py

"""
Enumeration of simple connected k-fold covers by permutation voltages.

Vertex ``v`` lifts to ``v*k + i``. Edges of a BFS spanning tree carry the
identity. Every other normal edge uv carries a permutation pi and lifts to
u_i v_{pi(i)}; a loop carries a permutation without fixed points or
2-cycles and lifts to the cycles {i, pi(i)}; a semi-edge carries a
fixed-point-free involution and lifts to its pairs. Conjugating every
voltage by the same permutation relabels the fibers, so the item with the
most voltages only runs over one permutation per cycle type.

Voltages are generated lazily, cycle by cycle. The product of the option
counts bounds the search and is capped separately from the vertex count.
"""

from collections import deque
from itertools import permutations
from math import comb, factorial, prod
from typing import Iterator, Optional

from ...constants import ENUMERATION_SPACE_CAP, ENUMERATION_VERTEX_CAP
from ...core.isomorphism import IsomorphismDeduplicator
from ...core.multigraph import Edge, EdgeKind, Multigraph, is_connected
from ...exceptions import CapExceededError, UnsupportedInputError
from ...logging_config import stronger_logger as logger
from ..covers.projection import CoverProjection

# Smallest cycle length a voltage of each edge kind may use
_MIN_CYCLE = {EdgeKind.NORMAL: 1, EdgeKind.LOOP: 3}


def cycle_type(perm: tuple) -> tuple:
    seen, lengths = set(), []
    for start in range(len(perm)):
        if start in seen:
            continue
        length, x = 0, start
        while x not in seen:
            seen.add(x)
            x = perm[x]
            length += 1
        lengths.append(length)
    return tuple(sorted(lengths))


def _inverse(perm: tuple) -> tuple:
    inverse = [0] * len(perm)
    for i, p in enumerate(perm):
        inverse[p] = i
    return tuple(inverse)


def _loop_voltages(k: int) -> Iterator[tuple]:
    """Permutations whose cycles all have length >= 3, one of each inverse pair."""
    perm = [0] * k

    def extend(free: list):
        if not free:
            result = tuple(perm)
            if result <= _inverse(result):
                yield result
            return
        start, rest = free[0], free[1:]
        for length in range(3, len(free) + 1):
            if len(free) - length in (1, 2):
                continue
            for tail in permutations(rest, length - 1):
                cycle = (start,) + tail
                for x, y in zip(cycle, cycle[1:] + cycle[:1]):
                    perm[x] = y
                used = set(tail)
                yield from extend([x for x in rest if x not in used])

    yield from extend(list(range(k)))


def _semi_voltages(k: int) -> Iterator[tuple]:
    """Fixed-point-free involutions, pairing the smallest free point first."""
    perm = [0] * k

    def extend(free: list):
        if not free:
            yield tuple(perm)
            return
        first = free[0]
        for idx in range(1, len(free)):
            partner = free[idx]
            perm[first], perm[partner] = partner, first
            yield from extend(free[1:idx] + free[idx + 1:])

    yield from extend(list(range(k)))


def _normal_voltages(k: int) -> Iterator[tuple]:
    return permutations(range(k))


def _partitions(n: int, low: int, high: int) -> Iterator[tuple]:
    """Partitions of ``n`` into parts in [low, high], largest part first."""
    if n == 0:
        yield ()
        return
    for part in range(min(n, high), low - 1, -1):
        for rest in _partitions(n - part, low, part):
            yield (part,) + rest


def _representatives(kind: EdgeKind, k: int) -> list:
    """One voltage per cycle type, each cycle on consecutive points."""
    if kind is EdgeKind.SEMI:
        shapes = [(2,) * (k // 2)] if k % 2 == 0 else []
    else:
        shapes = list(_partitions(k, _MIN_CYCLE[kind], k))
    reps = []
    for shape in shapes:
        perm, start = [0] * k, 0
        for length in shape:
            for i in range(length):
                perm[start + i] = start + (i + 1) % length
            start += length
        reps.append(tuple(perm))
    return reps


def _long_cycle_permutations(n: int) -> int:
    """Permutations of n points with every cycle of length >= 3."""
    counts = [1] + [0] * n
    for m in range(1, n + 1):
        counts[m] = sum(comb(m - 1, j - 1) * factorial(j - 1) * counts[m - j] for j in range(3, m + 1))
    return counts[n]


def voltage_count(kind: EdgeKind, k: int) -> int:
    """How many voltages an edge of this kind can carry in a k-fold cover."""
    if kind is EdgeKind.NORMAL:
        return factorial(k)
    if kind is EdgeKind.SEMI:
        return prod(range(k - 1, 0, -2)) if k % 2 == 0 else 0
    return _long_cycle_permutations(k) // 2 if k else 1


_GENERATORS = {
    EdgeKind.NORMAL: _normal_voltages,
    EdgeKind.LOOP: _loop_voltages,
    EdgeKind.SEMI: _semi_voltages,
}


def _spanning_tree(a: Multigraph) -> set:
    tree, seen = set(), {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for e in a.incidence[v]:
            edge = a.edges[e]
            if edge.is_normal:
                w = edge.other(v)
                if w not in seen:
                    seen.add(w)
                    tree.add(e)
                    queue.append(w)
    return tree


def _lift(edge: Edge, perm: tuple, k: int) -> list:
    u, v = edge.u * k, edge.v * k
    if edge.is_normal:
        return [Edge.normal(u + i, v + perm[i]) for i in range(k)]
    if edge.is_loop:
        return [Edge.normal(u + i, u + perm[i]) for i in range(k)]
    return [Edge.normal(u + i, u + perm[i]) for i in range(k) if i < perm[i]]


def _search_items(a: Multigraph, tree: set, k: int) -> tuple:
    """
    Non-tree edges, the item with the most voltages first, each paired with
    a factory for its voltages, and the size of the resulting search space.
    """
    items = sorted((e for e in range(a.edge_count) if e not in tree),
                   key=lambda e: -voltage_count(a.edges[e].kind, k))
    if not items:
        return [], 1
    first_reps = _representatives(a.edges[items[0]].kind, k)
    factories = [lambda reps=first_reps: iter(reps)]
    factories += [lambda kind=a.edges[e].kind: _GENERATORS[kind](k) for e in items[1:]]
    space = len(first_reps) * prod(voltage_count(a.edges[e].kind, k) for e in items[1:])
    return list(zip(items, factories)), space


def enumerate_simple_covers(a: Multigraph, k: int, limit: Optional[int] = None,
                            cap: int = ENUMERATION_VERTEX_CAP,
                            space_cap: int = ENUMERATION_SPACE_CAP) -> Iterator[CoverProjection]:
    """
    Yield simple connected k-fold covers of ``a``, one per isomorphism class.

    Voltages are tried in a fixed order, so the output is reproducible.

    Args:
        a: connected graph
        k: fold count
        limit: stop after this many covers
        cap: largest allowed k * |V(a)|
        space_cap: largest allowed number of voltage assignments

    Raises:
        UnsupportedInputError: if ``a`` is disconnected
        CapExceededError: if k * |V(a)| exceeds ``cap`` or the voltage
            assignments outnumber ``space_cap``
    """
    if not is_connected(a):
        logger.error("enumerate_simple_covers: graph is disconnected")
        raise UnsupportedInputError("enumeration needs a connected graph")
    if k * a.vertex_count > cap:
        logger.error(f"enumerate_simple_covers: {k} * {a.vertex_count} exceeds cap {cap}")
        raise CapExceededError(f"k * |V(A)| = {k * a.vertex_count} exceeds the cap of {cap}", cap=cap)
    if k < 1:
        return

    tree = _spanning_tree(a)
    items, space = _search_items(a, tree, k)
    if space > space_cap:
        logger.info(f"enumerate_simple_covers: k={k} needs {space} voltage assignments, cap {space_cap}")
        raise CapExceededError(f"{space} voltage assignments exceed the cap of {space_cap}", cap=space_cap)
    if space == 0:
        logger.debug(f"enumerate_simple_covers: no voltages exist for k={k}")
        return

    identity = tuple(range(k))
    present = {lifted.key() for e in tree for lifted in _lift(a.edges[e], identity, k)}
    voltages = {e: identity for e in tree}
    dedup = IsomorphismDeduplicator()
    emitted = 0
    nodes = 0

    def build() -> CoverProjection:
        edges, edge_map = [], []
        for e, edge in enumerate(a.edges):
            lifted = _lift(edge, voltages[e], k)
            edges += lifted
            edge_map += [e] * len(lifted)
        cover = Multigraph(a.vertex_count * k, tuple(edges))
        return CoverProjection(cover, a, tuple(v // k for v in cover.vertices), tuple(edge_map))

    def search(depth: int):
        nonlocal nodes
        nodes += 1
        if depth == len(items):
            projection = build()
            if is_connected(projection.source) and dedup.add(projection.source):
                yield projection
            return
        e, voltages_of = items[depth]
        for perm in voltages_of():
            keys = [lifted.key() for lifted in _lift(a.edges[e], perm, k)]
            if len(set(keys)) != len(keys) or present.intersection(keys):
                continue
            present.update(keys)
            voltages[e] = perm
            yield from search(depth + 1)
            present.difference_update(keys)
            del voltages[e]

    for projection in search(0):
        emitted += 1
        yield projection
        if limit is not None and emitted >= limit:
            break
    logger.debug(f"enumerate_simple_covers: k={k}, {emitted} covers, {nodes} nodes, space {space}")
