"""Command-line entry point ``tdec``.

Exit codes: 0 success, 1 usage/IO/parse error, 2 infeasible graph,
3 solver timed out, 4 a check failed (invalid coloring, failing suite record).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time

from . import bounds as B
from .coloring import EdgeColoring, validate
from .errors import TdecError
from .families import gen_family
from .formats import format_edge_list, read_graph
from .graph import contract_edge, delete_edge, delete_vertex, subdivide
from .harness import SUITES, RunConfig, render, run_suite, summarize
from .oracles import solve_oracle_enumeration
from .solver import EXACT, INFEASIBLE, SolverOptions, solve_exact, tde_feasible

EXIT_OK, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_TIMEOUT, EXIT_CHECK_FAILED = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def load_graph_arg(arg: str):
    """A file path, or a ``family:params`` spec when no such file exists."""
    if os.path.exists(arg):
        return read_graph(arg)
    if ":" in arg:
        return gen_family(arg)
    raise FileNotFoundError(arg)


def _write(text: str, out):
    if out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="ascii") as fh:
            fh.write(text)


def cmd_gen(args):
    _write(format_edge_list(gen_family(args.family)), args.output)
    return EXIT_OK


def cmd_solve(args):
    g = load_graph_arg(args.graph)
    if args.method == "oracle":
        value = solve_oracle_enumeration(g) if tde_feasible(g) else None
        status = EXACT if value is not None else INFEASIBLE
        doc = {
            "status": status,
            "value": value,
            "witness": None,
            "proven_lower": value or 0,
            "proven_upper": value or 0,
            "stats": {},
        }
    else:
        res = solve_exact(g, SolverOptions(timeout=args.timeout))
        doc = res.to_dict(include_time=not args.no_meta)
        status = res.status
    print(json.dumps(doc))
    return {EXACT: EXIT_OK, INFEASIBLE: EXIT_INFEASIBLE}.get(status, EXIT_TIMEOUT)


def cmd_bounds(args):
    g = load_graph_arg(args.graph)
    print(B.bounds_report(g).to_json())
    return EXIT_OK


def cmd_validate(args):
    g = load_graph_arg(args.graph)
    with open(args.coloring, encoding="utf-8") as fh:
        coloring = EdgeColoring.from_dict(json.load(fh))
    report = validate(g, coloring)
    print(json.dumps(report.to_dict()))
    return EXIT_OK if report.valid else EXIT_CHECK_FAILED


def apply_op(g, spec: str):
    name, _, arg = spec.partition(":")
    if name == "subdivide":
        return subdivide(g, int(arg)).graph
    if name == "delete-vertex":
        return delete_vertex(g, int(arg))
    if name in ("delete-edge", "contract"):
        u, _, v = arg.partition("-")
        e = g.edge_id(int(u), int(v))
        return delete_edge(g, e) if name == "delete-edge" else contract_edge(g, e)
    raise ValueError(f"unknown op {spec!r}; use subdivide:k, delete-vertex:v, delete-edge:u-v, contract:u-v")


def cmd_transform(args):
    g = load_graph_arg(args.graph)
    _write(format_edge_list(apply_op(g, args.op)), args.output)
    return EXIT_OK


def cmd_verify(args):
    cfg = RunConfig.from_env(
        timeout=args.timeout,
        max_vertices=args.max_vertices,
        max_edges=args.max_edges,
        max_n=args.max_n,
        fmt=args.format,
        include_meta=not args.no_meta,
    )
    suites = sorted(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for suite_id in suites:
        start = time.perf_counter()
        records = run_suite(suite_id, cfg)
        sys.stdout.write(render(suite_id, records, cfg, time.perf_counter() - start))
        failed |= summarize(records)["fail"] > 0
    return EXIT_CHECK_FAILED if failed else EXIT_OK


def build_parser():
    p = _Parser(prog="tdec", description="Total dominator edge chromatic number tools.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("gen", help="write a family graph as an edge list")
    s.add_argument("family", help="e.g. path:7, wheel:5, complete_bipartite:2,3")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_gen)

    s = sub.add_parser("solve", help="exact TDEC of a graph")
    s.add_argument("graph")
    s.add_argument("--timeout", type=float, default=60.0)
    s.add_argument("--method", choices=["exact", "oracle"], default="exact")
    s.add_argument("--no-meta", action="store_true", help="omit timing fields")
    s.set_defaults(func=cmd_solve)

    s = sub.add_parser("bounds", help="closed-form bounds for a graph")
    s.add_argument("graph")
    s.set_defaults(func=cmd_bounds)

    s = sub.add_parser("validate", help="check a coloring file against a graph")
    s.add_argument("graph")
    s.add_argument("coloring")
    s.set_defaults(func=cmd_validate)

    s = sub.add_parser("transform", help="apply a graph operation")
    s.add_argument("graph")
    s.add_argument("--op", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("verify", help="run a theorem-check suite")
    s.add_argument("suite", choices=sorted(SUITES) + ["all"])
    s.add_argument("--max-n", type=int)
    s.add_argument("--max-vertices", type=int, default=5)
    s.add_argument("--max-edges", type=int)
    s.add_argument("--timeout", type=float)
    s.add_argument("--format", choices=["json", "csv", "table"], default="json")
    s.add_argument("--no-meta", action="store_true", help="omit timestamps and runtimes")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (TdecError, OSError, ValueError, KeyError) as exc:
        print(f"tdec: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
