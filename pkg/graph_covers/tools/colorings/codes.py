# graph_covers/tools/colorings/codes.py

"""1-perfect codes on the underlying simple adjacency."""

from typing import Optional

from ...core.multigraph import Multigraph, underlying_simple_graph


def has_perfect_code(g: Multigraph) -> Optional[frozenset]:
    """
    An independent set C such that every vertex outside C has exactly one
    neighbor in C, or None.

    Equivalently the closed neighborhoods of C partition the vertex set,
    which is solved as an exact cover. Parallel edges collapse; loops and
    semi-edges play no part.
    """
    graph = underlying_simple_graph(g)
    closed = {v: frozenset(graph[v]) | {v} for v in g.vertices}
    covered = [False] * g.vertex_count
    code = []

    def search():
        try:
            u = covered.index(False)
        except ValueError:
            return True
        for c in sorted(closed[u]):
            ball = closed[c]
            if any(covered[w] for w in ball):
                continue
            for w in ball:
                covered[w] = True
            code.append(c)
            if search():
                return True
            code.pop()
            for w in ball:
                covered[w] = False
        return False

    return frozenset(code) if search() else None


def format_code(code) -> str:
    """Witness lines ``p <vertex>``."""
    return "".join(f"p {v}\n" for v in sorted(code))
