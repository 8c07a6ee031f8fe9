# graph_covers/core/mg_format.py

"""
The ``.mg`` text format and DOT export.

    n <vertex_count>
    e <u> <v>      # normal edge, u != v
    l <v>          # loop
    s <v>          # semi-edge

``#`` starts a comment, blank lines are ignored, edge ids follow file order.
"""

from pathlib import Path
from typing import Optional, Union

from ..constants import SEMI_STUB_PREFIX
from ..exceptions import ParseError, ValidationError
from ..logging_config import core_logger as logger
from .multigraph import Edge, EdgeKind, Multigraph

_ARITY = {"e": 2, "l": 1, "s": 1}


def _parse_int(token: str, filename, line_no) -> int:
    try:
        value = int(token)
    except ValueError:
        raise ParseError(f"expected an integer, got {token!r}", filename, line_no)
    if value < 0:
        raise ParseError(f"negative value {value}", filename, line_no)
    return value


def parse_mg(text: str, filename: Optional[str] = None) -> Multigraph:
    """
    Parse ``.mg`` text.

    Args:
        text: file contents
        filename: used only in error messages

    Returns:
        Multigraph: the parsed graph

    Raises:
        ParseError: on any malformed line, with filename and line number
    """
    vertex_count = None
    edges = []
    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        tag, args = tokens[0], tokens[1:]

        if tag == "n":
            if vertex_count is not None:
                raise ParseError("duplicate 'n' line", filename, line_no)
            if len(args) != 1:
                raise ParseError("'n' takes exactly one argument", filename, line_no)
            vertex_count = _parse_int(args[0], filename, line_no)
            continue

        if tag not in _ARITY:
            raise ParseError(f"unknown line tag {tag!r}", filename, line_no)
        if vertex_count is None:
            raise ParseError("'n' must precede all edges", filename, line_no)
        if len(args) != _ARITY[tag]:
            raise ParseError(f"'{tag}' takes {_ARITY[tag]} argument(s)", filename, line_no)

        ends = [_parse_int(a, filename, line_no) for a in args]
        for w in ends:
            if w >= vertex_count:
                raise ParseError(f"vertex {w} out of range 0..{vertex_count - 1}", filename, line_no)
        if tag == "e":
            if ends[0] == ends[1]:
                # Loops must be declared explicitly
                raise ParseError(f"normal edge with equal endpoints {ends[0]}; use 'l'", filename, line_no)
            edges.append(Edge.normal(ends[0], ends[1]))
        elif tag == "l":
            edges.append(Edge.loop(ends[0]))
        else:
            edges.append(Edge.semi(ends[0]))

    if vertex_count is None:
        raise ParseError("missing 'n' line", filename, None)
    try:
        return Multigraph(vertex_count, tuple(edges))
    except ValidationError as e:
        raise ParseError(str(e), filename, None) from e


def serialize_mg(g: Multigraph) -> str:
    """Canonical ``.mg`` text: ``n`` first, then edges in id order."""
    lines = [f"n {g.vertex_count}"]
    for edge in g.edges:
        if edge.kind is EdgeKind.NORMAL:
            lines.append(f"e {edge.u} {edge.v}")
        else:
            lines.append(f"{edge.kind.value} {edge.u}")
    return "\n".join(lines) + "\n"


def read_mg(path: Union[str, Path]) -> Multigraph:
    """Read a ``.mg`` file."""
    path = Path(path)
    logger.debug(f"Reading graph from {path}")
    with open(path, "r", encoding="utf-8") as f:
        return parse_mg(f.read(), filename=str(path))


def write_mg(path: Union[str, Path], g: Multigraph) -> None:
    """Write ``g`` as a ``.mg`` file."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    with open(path, "w", encoding="utf-8") as f:
        f.write(serialize_mg(g))
    logger.info(f"Wrote graph with {g.vertex_count} vertices to {path}")


def to_dot(g: Multigraph, name: str = "G") -> str:
    """
    DOT export. Loops are self-arcs; each semi-edge ends at its own invisible
    stub node ``__s<k>`` (k counts semi-edges in edge order).
    """
    lines = [f"graph {name} {{"]
    for v in g.vertices:
        lines.append(f"  {v};")
    stub = 0
    for edge in g.edges:
        if edge.is_semi:
            node = f"{SEMI_STUB_PREFIX}{stub}"
            stub += 1
            lines.append(f"  {node} [shape=point, style=invis];")
            lines.append(f"  {edge.u} -- {node};")
        else:
            lines.append(f"  {edge.u} -- {edge.v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
