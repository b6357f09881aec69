"""Command-line front end: ``fraclocdim <subcommand> ...``."""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import __version__
from .corpus import builtin_corpus, parse_corpus
from .families import cartesian_product, make_family, parse_family_string, strong_product
from .graph import Graph, GraphError, load_graph, to_edge_list, to_json
from .harness import CLAIMS, FAIL, exhaustive_odd_cycle_check, run_suite
from .lp import dim_f, format_rational, ldim_f
from .report import emit_report, summary_line, table_row
from .resolve import local_metric_basis, resolve_report
from .symmetry import orbits

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def read_graph(arg: str) -> Graph:
    """A graph from '-' (stdin), an existing file, or a family string."""
    if arg == "-":
        return load_graph(sys.stdin.read())
    if os.path.isfile(arg):
        with open(arg) as fh:
            g = load_graph(fh.read())
        return g if g.name else g.renamed(os.path.basename(arg))
    return make_family(parse_family_string(arg))


def read_corpus(arg: str):
    if arg == "builtin":
        return builtin_corpus()
    if arg == "-":
        return parse_corpus(sys.stdin.read())
    with open(arg) as fh:
        return parse_corpus(fh.read())


def write_graph(g: Graph, fmt: str) -> str:
    return to_json(g) + "\n" if fmt == "json" else to_edge_list(g)


def cmd_gen(args) -> int:
    sys.stdout.write(write_graph(make_family(parse_family_string(args.family)), args.format))
    return EXIT_OK


def cmd_product(args) -> int:
    g, h = read_graph(args.g), read_graph(args.h)
    p = strong_product(g, h) if args.kind == "strong" else cartesian_product(g, h)
    sys.stdout.write(write_graph(p, args.format))
    return EXIT_OK


def cmd_resolve(args) -> int:
    rep = resolve_report(read_graph(args.graph), with_pairs=args.pairs)
    print(rep.to_json(include_table=args.sets))
    return EXIT_OK


def _solve(args, fn) -> int:
    g = read_graph(args.graph)
    sol = fn(g)
    if args.weights:
        out = {"graph": g.name, "value": format_rational(sol.value),
               "weights": [format_rational(x) for x in sol.assignment]}
        print(json.dumps(out, indent=2))
    else:
        print(format_rational(sol.value))
    return EXIT_OK


def cmd_ldimf(args) -> int:
    return _solve(args, ldim_f)


def cmd_dimf(args) -> int:
    return _solve(args, dim_f)


def cmd_ldim(args) -> int:
    basis = local_metric_basis(read_graph(args.graph))
    print(len(basis))
    if args.basis:
        print(" ".join(map(str, basis)))
    return EXIT_OK


def cmd_orbits(args) -> int:
    part = orbits(read_graph(args.graph))
    for cls in part.classes():
        print(" ".join(map(str, cls)))
    return EXIT_OK


def cmd_verify(args) -> int:
    claims = list(CLAIMS) if args.claims == "all" else [c.strip() for c in args.claims.split(",") if c.strip()]
    reports = run_suite(read_corpus(args.corpus), claims)
    if args.exhaustive:
        reports.append(exhaustive_odd_cycle_check(args.exhaustive))
    sys.stdout.write(emit_report(reports, args.format))
    print(summary_line(reports), file=sys.stderr)
    return EXIT_FAIL if any(r.status == FAIL for r in reports) else EXIT_OK


def cmd_table(args) -> int:
    if args.graphs:
        graphs = [read_graph(a) for a in args.graphs]
    else:
        graphs = [make_family(s) for s in read_corpus(args.corpus)]
    rows = [table_row(g) for g in graphs]
    sys.stdout.write(emit_report(rows, args.format, decimal=args.decimal))
    return EXIT_OK


def cmd_claims(args) -> int:
    for claim, (what, _) in CLAIMS.items():
        print(f"{claim}\t{what}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="fraclocdim",
                                description="Exact fractional (local) metric dimension of graphs.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)
    graph_help = "family string such as 'cycle(5)', a graph file, or '-' for stdin"

    s = sub.add_parser("gen", help="write a family graph as an edge list or JSON")
    s.add_argument("family")
    s.add_argument("--format", choices=["edges", "json"], default="edges")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("product", help="strong or cartesian product of two graphs")
    s.add_argument("kind", choices=["strong", "cartesian"])
    s.add_argument("g", help=graph_help)
    s.add_argument("h", help=graph_help)
    s.add_argument("--format", choices=["edges", "json"], default="edges")
    s.set_defaults(func=cmd_product)

    s = sub.add_parser("resolve", help="l(G), r(G) and optionally every L(uv) / R(u,v)")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--sets", action="store_true", help="include the sets themselves")
    s.add_argument("--pairs", action="store_true", help="also list R(u,v) for all pairs")
    s.set_defaults(func=cmd_resolve)

    for name, fn, what in (("ldimf", cmd_ldimf, "fractional local metric dimension"),
                           ("dimf", cmd_dimf, "fractional metric dimension")):
        s = sub.add_parser(name, help=what)
        s.add_argument("graph", help=graph_help)
        s.add_argument("--weights", action="store_true", help="print an optimal weighting as JSON")
        s.set_defaults(func=fn)

    s = sub.add_parser("ldim", help="integer local metric dimension (n <= 24)")
    s.add_argument("graph", help=graph_help)
    s.add_argument("--basis", action="store_true", help="also print a minimum local resolving set")
    s.set_defaults(func=cmd_ldim)

    s = sub.add_parser("orbits", help="automorphism orbits, one class per line")
    s.add_argument("graph", help=graph_help)
    s.set_defaults(func=cmd_orbits)

    s = sub.add_parser("verify", help="run claim checks over a corpus")
    s.add_argument("--claims", default="all", help="comma-separated claim ids or 'all'")
    s.add_argument("--corpus", default="builtin", help="'builtin', a corpus file, or '-'")
    s.add_argument("--format", choices=["json", "csv", "table"], default="table")
    s.add_argument("--exhaustive", type=int, metavar="N", default=0,
                   help="also check l(G)=n-1 iff odd cycle over all connected graphs up to N vertices")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("table", help="invariant table: graph,n,m,l,r,ldim,ldim_f,dim_f")
    s.add_argument("graphs", nargs="*", help="graphs to tabulate (default: the corpus)")
    s.add_argument("--corpus", default="builtin")
    s.add_argument("--format", choices=["json", "csv", "table"], default="csv")
    s.add_argument("--decimal", action="store_true", help="add advisory float columns")
    s.set_defaults(func=cmd_table)

    s = sub.add_parser("claims", help="list claim ids")
    s.set_defaults(func=cmd_claims)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (GraphError, OSError, ValueError) as exc:
        print(f"fraclocdim: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
