# graph_covers/cli/commands.py

"""
Command line front end.

Every subcommand maps to one library operation. Exit codes: 0 for success or
an affirmative answer, 1 for a negative answer, 2 for usage and input errors.
Graph arguments are a ``.mg`` path, ``-`` for stdin, or a catalog name.
"""

import argparse
import json
import logging
import sys
from pathlib import Path

from ..build_info import format_build_string
from ..constants import EXIT_NEGATIVE, EXIT_OK, EXIT_USAGE, GOOD_SET_VERTEX_CAP, MG_EXTENSION
from ..core.catalog import catalog, small_cubic_graphs
from ..core.mg_format import parse_mg, read_mg, serialize_mg, to_dot
from ..exceptions import GraphCoverError
from ..logging_config import cli_logger as logger
from ..tools.colorings import (
    chromatic_index, covers_F11, format_code, format_coloring, format_matching,
    has_perfect_code, has_perfect_matching, has_semi_perfect_matching, minimal_good_sets,
)
from ..tools.covers import (
    ProjectionKind, find_cover, fold_count, parse_certificate, projection_certificate, verify,
)
from ..tools.factory import bridged_simple_cover, no_pm_cover, simple_pfold_cover, snark_cover
from ..tools.products import odot, times_k2
from ..tools.stronger import cover_poset, decide_stronger
from ..tools.stronger.poset import named


class GraphArg:
    """A resolved graph argument: display name plus graph."""

    def __init__(self, name, graph):
        self.name = name
        self.graph = graph


def load_graph(arg: str, stdin) -> GraphArg:
    """
    Resolve ``-``, a file path, or a catalog name.

    Raises:
        ParseError: malformed ``.mg`` text
        UnknownGraphError: neither an existing file nor a catalog name
        FileNotFoundError: a missing .mg path
    """
    if arg == "-":
        return GraphArg("stdin", parse_mg(stdin.read(), filename="<stdin>"))
    path = Path(arg)
    if path.is_file():
        return GraphArg(path.stem, read_mg(path))
    if path.suffix == MG_EXTENSION:
        raise FileNotFoundError(f"no such file: {arg}")
    entry = catalog(arg)
    return GraphArg(entry.name, entry.graph)


def _emit(out, args, text: str, data: dict) -> None:
    if args.json:
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        out.write(text)


def _projection_payload(projection) -> dict:
    return {
        "fold": fold_count(projection),
        "certificate": projection_certificate(projection),
    }


def cmd_check(args, out, stdin) -> int:
    kind = ProjectionKind.SEMICOVER if args.command == "semicheck" else ProjectionKind.COVER
    what = "semi-covering" if kind is ProjectionKind.SEMICOVER else "covering"
    g = load_graph(args.source, stdin)
    h = load_graph(args.target, stdin)
    projection = find_cover(g.graph, h.graph, kind)
    if projection is None:
        _emit(out, args, f"no {what} projection (exhaustive)\n",
              {"found": False, "kind": kind.value, "method": "exhaustive"})
        return EXIT_NEGATIVE
    payload = _projection_payload(projection)
    _emit(out, args,
          f"{payload['fold']}-fold {what} projection {g.name} -> {h.name}\n{payload['certificate']}",
          {"found": True, "kind": kind.value, **payload})
    return EXIT_OK


def cmd_verify(args, out, stdin) -> int:
    g = load_graph(args.source, stdin)
    h = load_graph(args.target, stdin)
    with open(args.certificate, "r", encoding="utf-8") as f:
        projection = parse_certificate(f.read(), g.graph, h.graph, filename=args.certificate)
    kind = ProjectionKind.SEMICOVER if args.semi else ProjectionKind.COVER
    result = verify(projection, kind)
    text = "ok\n" if result.ok else "".join(f"violation: {v}\n" for v in result.violations)
    _emit(out, args, text, {"ok": result.ok, "kind": kind.value, "violations": list(result.violations)})
    return EXIT_OK if result.ok else EXIT_NEGATIVE


def _emit_projection_graph(out, args, projection) -> int:
    if args.certificate:
        text = projection_certificate(projection)
    else:
        text = serialize_mg(projection.source)
    _emit(out, args, text, {"graph": serialize_mg(projection.source),
                            "vertices": projection.source.vertex_count,
                            **_projection_payload(projection)})
    return EXIT_OK


def cmd_product(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    projection = odot(g.graph) if args.odot else times_k2(g.graph)
    return _emit_projection_graph(out, args, projection)


def cmd_pfold(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    return _emit_projection_graph(out, args, simple_pfold_cover(g.graph, args.p))


def cmd_factory(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    if args.bridged:
        projection = bridged_simple_cover(g.graph)
    elif args.snark:
        projection = snark_cover(g.graph)
    else:
        projection = no_pm_cover(g.graph)
    return _emit_projection_graph(out, args, projection)


def cmd_chi(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    index = chromatic_index(g.graph)
    text = f"chromatic index {index}\n"
    if index.coloring is not None:
        text += format_coloring(index.coloring)
    _emit(out, args, text, {
        "chromatic_index": index.value,
        "coloring": list(index.coloring.colors) if index.coloring else None,
    })
    return EXIT_OK


def cmd_matching(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    if args.f11:
        projection = covers_F11(g.graph)
        if projection is None:
            _emit(out, args, "does not cover F(1,1)\n", {"found": False})
            return EXIT_NEGATIVE
        payload = _projection_payload(projection)
        _emit(out, args, f"{payload['fold']}-fold cover of F(1,1)\n{payload['certificate']}",
              {"found": True, **payload})
        return EXIT_OK
    if args.semi:
        found = has_semi_perfect_matching(g.graph)
        edges = found.edges if found is not None else None
        label = "semi-perfect matching"
    else:
        edges = has_perfect_matching(g.graph)
        label = "perfect matching"
    if edges is None:
        _emit(out, args, f"no {label}\n", {"found": False})
        return EXIT_NEGATIVE
    _emit(out, args, format_matching(edges), {"found": True, "edges": sorted(edges)})
    return EXIT_OK


def cmd_code(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    code = has_perfect_code(g.graph)
    if code is None:
        _emit(out, args, "no perfect code\n", {"found": False})
        return EXIT_NEGATIVE
    _emit(out, args, format_code(code), {"found": True, "vertices": sorted(code)})
    return EXIT_OK


def cmd_goodsets(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    sets = minimal_good_sets(g.graph, cap=args.cap)
    lines = []
    for good in sets:
        flag = " very-good" if good.very_good else ""
        members = " ".join(map(str, good.sorted_vertices()))
        lines.append(f"x {members} odd={good.odd_component_count}{flag}\n")
    _emit(out, args, "".join(lines) or "no good sets\n", {"good_sets": [
        {"vertices": s.sorted_vertices(), "odd_components": s.odd_component_count,
         "very_good": s.very_good} for s in sets
    ]})
    return EXIT_OK if sets else EXIT_NEGATIVE


def cmd_stronger(args, out, stdin) -> int:
    a = load_graph(args.a, stdin)
    b = load_graph(args.b, stdin)
    evidence = decide_stronger(a.graph, b.graph, args.budget)
    text = f"{evidence.verdict.value}: {evidence.summary()}\n"
    if args.certificate:
        if evidence.projection is not None:
            text += projection_certificate(evidence.projection)
        if evidence.witness is not None:
            text += serialize_mg(evidence.witness) + projection_certificate(evidence.witness_projection)
    _emit(out, args, text, evidence.to_dict())
    return EXIT_OK if evidence.is_stronger else EXIT_NEGATIVE


def _directory_graphs(directory: str) -> list:
    paths = sorted(Path(directory).glob(f"*{MG_EXTENSION}"))
    if not paths:
        raise FileNotFoundError(f"no {MG_EXTENSION} files in {directory}")
    return [named(p.stem, read_mg(p)) for p in paths]


def cmd_poset(args, out, stdin) -> int:
    if args.figure5 == bool(args.directory):
        raise argparse.ArgumentTypeError("poset needs exactly one of --figure5 or DIR")
    graphs = small_cubic_graphs() if args.figure5 else _directory_graphs(args.directory)
    report = cover_poset(graphs, args.budget)
    out.write(report.to_json() if args.json else report.to_dot())
    return EXIT_OK


def cmd_cat(args, out, stdin) -> int:
    entry = catalog(args.name)
    _emit(out, args, serialize_mg(entry.graph),
          {"name": entry.name, "provenance": entry.provenance, "graph": serialize_mg(entry.graph)})
    return EXIT_OK


def cmd_export(args, out, stdin) -> int:
    g = load_graph(args.graph, stdin)
    out.write(to_dot(g.graph))
    return EXIT_OK


def build_parser(default_budget: int, good_set_cap: int = GOOD_SET_VERTEX_CAP) -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cover",
        description="Graph covers of multigraphs with loops and semi-edges.",
    )
    parser.add_argument("--version", action="store_true", help="print version and build information")
    parser.add_argument("-v", "--verbose", action="store_true", help="log at DEBUG level")
    parser.add_argument("--json", action="store_true", help="structured output")
    sub = parser.add_subparsers(dest="command")

    for name, help_text in (("check", "find a covering projection G -> H"),
                            ("semicheck", "find a semi-covering projection G -> H")):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("source")
        p.add_argument("target")
        p.set_defaults(handler=cmd_check)

    p = sub.add_parser("verify", help="replay a projection certificate")
    p.add_argument("source")
    p.add_argument("target")
    p.add_argument("certificate", help="certificate file")
    p.add_argument("--semi", action="store_true", help="check as a semi-cover")
    p.set_defaults(handler=cmd_verify)

    p = sub.add_parser("product", help="canonical double cover")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--times", action="store_true", help="G x K2")
    group.add_argument("--odot", action="store_true", help="the semi-edge preserving double cover")
    p.add_argument("--certificate", action="store_true", help="print the projection instead of the graph")
    p.set_defaults(handler=cmd_product)

    p = sub.add_parser("pfold", help="simple p-fold cover")
    p.add_argument("graph")
    p.add_argument("-p", type=int, required=True, help="fold count")
    p.add_argument("--certificate", action="store_true", help="print the projection instead of the graph")
    p.set_defaults(handler=cmd_pfold)

    p = sub.add_parser("chi", help="chromatic index with a coloring")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_chi)

    p = sub.add_parser("matching", help="perfect matching")
    p.add_argument("graph")
    p.add_argument("--semi", action="store_true", help="semi-perfect matching")
    p.add_argument("--f11", action="store_true", help="cover of F(1,1)")
    p.set_defaults(handler=cmd_matching)

    p = sub.add_parser("code", help="1-perfect code")
    p.add_argument("graph")
    p.set_defaults(handler=cmd_code)

    p = sub.add_parser("goodsets", help="inclusion-minimal Tutte good sets")
    p.add_argument("graph")
    p.add_argument("--cap", type=int, default=good_set_cap, help="largest vertex count to enumerate")
    p.set_defaults(handler=cmd_goodsets)

    p = sub.add_parser("factory", help="witness constructions")
    p.add_argument("graph")
    group = p.add_mutually_exclusive_group(required=True)
    group.add_argument("--bridged", action="store_true", help="simple cover keeping a bridge")
    group.add_argument("--snark", action="store_true", help="simple cover that is not 3-edge-colorable")
    group.add_argument("--nopm", action="store_true", help="simple cover without a perfect matching")
    p.add_argument("--certificate", action="store_true", help="print the projection instead of the graph")
    p.set_defaults(handler=cmd_factory)

    p = sub.add_parser("stronger", help="decide A |> B")
    p.add_argument("a")
    p.add_argument("b")
    p.add_argument("--budget", type=int, default=default_budget, help="witness vertex budget")
    p.add_argument("--certificate", action="store_true", help="also print certificates")
    p.set_defaults(handler=cmd_stronger)

    p = sub.add_parser("poset", help="cover and stronger poset as DOT")
    p.add_argument("directory", nargs="?", help=f"directory of {MG_EXTENSION} files")
    p.add_argument("--figure5", action="store_true", help="the twelve small cubic graphs")
    p.add_argument("--budget", type=int, default=default_budget, help="witness vertex budget")
    p.set_defaults(handler=cmd_poset)

    p = sub.add_parser("cat", help="print a catalog graph as .mg")
    p.add_argument("name")
    p.set_defaults(handler=cmd_cat)

    p = sub.add_parser("export", help="export a graph")
    p.add_argument("graph")
    p.add_argument("--dot", action="store_true", required=True, help="DOT output")
    p.set_defaults(handler=cmd_export)

    return parser


def run(argv=None, stdin=None, stdout=None, stderr=None, default_budget: int = None,
        good_set_cap: int = None) -> int:
    """
    Run one command and return its exit code.

    Args:
        argv: arguments without the program name
        stdin, stdout, stderr: streams, defaulting to the process streams
        default_budget: ``--budget`` default; read from the user config when None
        good_set_cap: ``goodsets --cap`` default; read from the user config when None
    """
    stdin = stdin or sys.stdin
    out = stdout or sys.stdout
    err = stderr or sys.stderr
    if default_budget is None:
        from ..utils import get_default_budget_from_config
        default_budget = get_default_budget_from_config()
    if good_set_cap is None:
        from ..utils import get_good_set_cap_from_config
        good_set_cap = get_good_set_cap_from_config()

    parser = build_parser(default_budget, good_set_cap)
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_OK if e.code == 0 else EXIT_USAGE

    if args.version:
        out.write(format_build_string() + "\n")
        return EXIT_OK
    if args.verbose:
        logging.getLogger("graph_covers").setLevel(logging.DEBUG)
    if not getattr(args, "handler", None):
        parser.print_usage(err)
        return EXIT_USAGE

    logger.info(f"Running command: {args.command}")
    try:
        code = args.handler(args, out, stdin)
    except (GraphCoverError, OSError, argparse.ArgumentTypeError) as e:
        logger.error(f"{args.command} failed: {e}")
        err.write(f"error: {e}\n")
        return EXIT_USAGE
    logger.info(f"Command {args.command} finished with exit code {code}")
    return code
