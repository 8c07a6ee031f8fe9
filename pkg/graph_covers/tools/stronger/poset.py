# graph_covers/tools/stronger/poset.py

"""
Pairwise cover and stronger relations over a list of graphs.
"""

from ...constants import DEFAULT_BUDGET, POSET_VERTEX_CAP
from ...core.catalog import NamedGraph, catalog_graph, small_cubic_graphs
from ...core.multigraph import is_connected
from ...exceptions import CapExceededError, UnsupportedInputError
from ...logging_config import stronger_logger as logger
from .decide import cached_find_cover, decide_stronger
from .evidence import PosetReport


def _prism_note(graphs: list) -> list:
    """
    The prism over C6 is the textbook perfect-code-free witness against DG's
    4-vertex targets, which needs it to cover DG. Record whether it does.
    """
    names = [g.name for g in graphs]
    if "DG" not in names:
        return []
    drum = graphs[names.index("DG")].graph
    prism = catalog_graph("C6prime_odot")
    if cached_find_cover(prism, drum) is not None:
        return ["C6prime_odot covers DG, so it is a valid witness for DG"]
    return ["C6prime_odot does not cover DG; it cannot serve as a witness for DG"]


def cover_poset(graphs: list, budget: int = DEFAULT_BUDGET) -> PosetReport:
    """
    Build the cover matrix with find_cover and the stronger matrix with
    decide_stronger for every ordered pair of distinct graphs.

    Args:
        graphs: NamedGraph items, each connected with at most POSET_VERTEX_CAP vertices
        budget: witness budget handed to decide_stronger

    Raises:
        UnsupportedInputError: if a graph is disconnected
        CapExceededError: if a graph is larger than the cap
    """
    for item in graphs:
        if not is_connected(item.graph):
            logger.error(f"cover_poset: {item.name} is disconnected")
            raise UnsupportedInputError(f"{item.name} is disconnected")
        if item.graph.vertex_count > POSET_VERTEX_CAP:
            logger.error(f"cover_poset: {item.name} exceeds {POSET_VERTEX_CAP} vertices")
            raise CapExceededError(f"{item.name} has more than {POSET_VERTEX_CAP} vertices", cap=POSET_VERTEX_CAP)

    n = len(graphs)
    names = [item.name for item in graphs]
    covers = [[False] * n for _ in range(n)]
    stronger = [[False] * n for _ in range(n)]
    evidence = {}
    for i, a in enumerate(graphs):
        for j, b in enumerate(graphs):
            if i == j:
                continue
            covers[i][j] = cached_find_cover(a.graph, b.graph) is not None
            result = decide_stronger(a.graph, b.graph, budget)
            evidence[(i, j)] = result
            stronger[i][j] = True if result.is_stronger else (False if result.is_not_stronger else None)
            logger.debug(f"cover_poset: {a.name} |> {b.name}: {result.verdict.value}")

    report = PosetReport(names, covers, stronger, evidence, budget, _prism_note(graphs))
    implied = set(report.implied_pairs())
    for i, j in report.unknown_pairs():
        if (i, j) in implied:
            report.notes.append(f"{names[i]} |> {names[j]} is unknown within {budget} vertices "
                                f"but follows by transitivity")
        else:
            report.notes.append(f"{names[i]} |> {names[j]} is unknown within {budget} vertices")
    for i, j in report.contradictions():
        logger.error(f"cover_poset: {names[i]} |> {names[j]} is refuted but forced by transitivity")
        report.notes.append(f"{names[i]} |> {names[j]} contradicts transitivity")
    logger.info(f"cover_poset: {n} graphs, {len(report.green_edges())} green and "
                f"{len(report.purple_edges())} purple edges")
    return report


def small_cubic_report(budget: int = DEFAULT_BUDGET) -> PosetReport:
    """The poset of the twelve small cubic graphs."""
    return cover_poset(small_cubic_graphs(), budget)


def named(name: str, graph) -> NamedGraph:
    return NamedGraph(name, graph, "[INPUT]")
