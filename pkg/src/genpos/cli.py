"""Command-line driver.

Exit codes: 0 all checks pass, 1 a violation was found, 2 usage or parse
error.
"""

from __future__ import annotations

import argparse
import sys
import time

from . import __version__
from .codecs import parse_graph6, read_edge_list
from .construct import construct_diam2, construct_diam3, construct_structured
from .corpus import connected_graphs, graph6_source
from .errors import ContractError, GenPosError, ParseError
from .families import make_family, parse_family
from .graph import Graph
from .product import (
    clique_product_witness,
    layer_embed_check,
    multipartite_product_witness,
    orthogonal_layers,
    universal_line_product_criterion,
)
from .report import INVARIANTS, ReportRecord, emit, run_invariants
from .scan import check_pair_order, scan_pairs_conjecture, scan_terminal_existence
from .suites import SUITES, run_suite

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


def parse_graph_arg(text: str) -> tuple[str, Graph]:
    """``g6:<graph6>``, ``edges:<file>`` or a family spec like ``cycle:5``."""
    if text.startswith("g6:"):
        return text, parse_graph6(text[3:])
    if text.startswith("edges:"):
        return text, read_edge_list(text[6:])
    spec = parse_family(text)
    return str(spec), make_family(spec)


def _int_list(text: str) -> list[int]:
    try:
        return [int(x) for x in text.split(",") if x.strip()]
    except ValueError:
        raise ParseError(f"expected comma-separated integers, got {text!r}") from None


def _gather(args, errors: list) -> list[tuple[str, Graph]]:
    graphs = []
    for f in args.family or []:
        graphs.append(parse_graph_arg(f))
    for path in args.edges or []:
        try:
            graphs.append((path, read_edge_list(path)))
        except ParseError as exc:
            errors.append({"graph": path, "error": str(exc)})
    for path in args.graph6 or []:
        for gid, g in graph6_source(path):
            if isinstance(g, ParseError):
                errors.append({"graph": gid, "error": str(g)})
            else:
                graphs.append((gid, g))
    for n in args.enumerate or []:
        from .codecs import encode_graph6

        graphs.extend((encode_graph6(g), g) for g in connected_graphs(n))
    return graphs


def _limits(args) -> dict:
    out = {}
    if getattr(args, "max_subset_size", None) is not None:
        out["max_subset_size"] = args.max_subset_size
    if getattr(args, "time_budget_ms", None) is not None:
        out["time_budget_ms"] = args.time_budget_ms
    return out


def _write(rows, args) -> None:
    sys.stdout.write(emit(rows, args.format, not args.no_timing))


def cmd_invariants(args) -> int:
    errors: list = []
    graphs = _gather(args, errors)
    if not graphs and not errors:
        raise GenPosError("no input graphs; use --family, --edges, --graph6 or --enumerate")
    which = [w for chunk in args.which for w in chunk.split(",") if w]
    records = list(run_invariants(graphs, which, _limits(args), args.jobs))
    _write(records + errors, args)
    return EXIT_USAGE if errors else EXIT_OK


def cmd_construct(args) -> int:
    errors: list = []
    graphs = _gather(args, errors)
    fn = {"diam2": construct_diam2, "diam3": construct_diam3, "structured": construct_structured}[args.method]
    rows = []
    status = EXIT_OK
    for gid, g in graphs:
        t0 = time.perf_counter()
        try:
            s, trace = fn(g)
        except ContractError as exc:
            rows.append({"graph": gid, "construction": args.method, "status": "FAIL", "error": str(exc)})
            status = EXIT_VIOLATION
            continue
        rows.append(ReportRecord(gid, f"construct-{args.method}", len(s), s.to_list(),
                                 elapsed_ms=round((time.perf_counter() - t0) * 1000, 3),
                                 extra={"trace": trace.lines()}))
        if args.trace:
            for line in trace.lines():
                print(f"# {line}", file=sys.stderr)
    _write(rows + errors, args)
    return EXIT_USAGE if errors else status


def cmd_product(args) -> int:
    kind = args.kind
    if kind == "layer-check":
        _, g = parse_graph_arg(args.left)
        _, h = parse_graph_arg(args.right)
        rep = layer_embed_check(g, h, _int_list(args.set), args.anchor)
        row = {"check": "layer-check", "terminal": rep.terminal, "product_maximal": rep.product_maximal,
               "image": rep.image, "extender": rep.extender, "status": "PASS" if rep.agree else "FAIL"}
        ok = rep.agree
    elif kind == "universal-line":
        _, g = parse_graph_arg(args.left)
        _, h = parse_graph_arg(args.right)
        rep = universal_line_product_criterion(g, h)
        row = {"check": "universal-line", "condition_i": rep.condition_i, "condition_ii": rep.condition_ii,
               "geodetic": [rep.geodetic_g, rep.geodetic_h], "predicted": rep.predicted,
               "observed": rep.observed, "pair": rep.observed_pair, "status": "PASS" if rep.agree else "FAIL"}
        ok = rep.agree
    elif kind in ("clique", "multipartite"):
        if kind == "clique":
            rep = clique_product_witness(_int_list(args.orders))
        else:
            rep = multipartite_product_witness(_int_list(args.left_parts), _int_list(args.right_parts))
        row = {"check": kind, "lower": rep.lower, "upper": rep.upper, "exact": rep.exact,
               "method": rep.method, "witnesses": rep.witnesses, "checks": rep.checks,
               "status": "PASS" if rep.consistent else "FAIL"}
        ok = rep.consistent
    else:
        _, g = parse_graph_arg(args.graph)
        sets = [_int_list(chunk) for chunk in args.sets.split(";")]
        rep = orthogonal_layers(g, args.r, sets)
        row = {"check": "orthogonal", "product_gp": rep.product_gp, "factor_orthogonal": rep.factor_orthogonal,
               "product_violation": rep.product_violation,
               "factor_violation": None if rep.factor_violation is None else repr(rep.factor_violation),
               "status": "PASS" if rep.agree else "FAIL"}
        ok = rep.agree
    _write([row], args)
    return EXIT_OK if ok else EXIT_VIOLATION


def cmd_scan(args) -> int:
    if args.graph6:
        source = list(graph6_source(args.graph6))
    elif args.max_order is not None:
        source = args.max_order
    else:
        raise GenPosError("scan needs --max-order or --graph6")
    if args.kind == "conjecture-product":
        if isinstance(source, int):
            check_pair_order(source)
        res = scan_pairs_conjecture(source, _limits(args))
    else:
        res = scan_terminal_existence(source, _limits(args))
    rows = ([{"counterexample": c} for c in res.counterexamples]
            + [{"inconclusive": c} for c in res.inconclusive]
            + [{"parse_error": c} for c in res.parse_errors])
    rows.append({"scan": args.kind, "checked": res.checked, "counterexamples": len(res.counterexamples),
                 "inconclusive": len(res.inconclusive), "status": "PASS" if res.ok else "FAIL"})
    _write(rows, args)
    if not res.ok:
        return EXIT_VIOLATION
    return EXIT_USAGE if res.parse_errors else EXIT_OK


def cmd_suite(args) -> int:
    if args.name != "all" and args.name not in SUITES:
        print(f"unknown suite {args.name!r}; choose from all, {', '.join(SUITES)}", file=sys.stderr)
        return EXIT_USAGE
    checks = run_suite(args.name)
    timing = not args.no_timing
    rows = [c.to_dict(timing) for c in checks]
    failed = sum(not c.ok for c in checks)
    rows.append({"suite": args.name, "passed": len(checks) - failed, "failed": failed,
                 "status": "PASS" if not failed else "FAIL"})
    _write(rows, args)
    return EXIT_VIOLATION if failed else EXIT_OK


def _output_flags(p):
    p.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    p.add_argument("--no-timing", action="store_true", help="omit elapsed times so output is byte-stable")


def _source_flags(p):
    p.add_argument("--family", action="append", help="family spec (cycle:5, kneser2:7, petersen, ...) or g6:<graph6>")
    p.add_argument("--edges", action="append", help="edge-list file: 'n m' then m lines 'u v'")
    p.add_argument("--graph6", action="append", help="graph6 file, one graph per line")
    p.add_argument("--enumerate", action="append", type=int, metavar="N",
                   help="all connected graphs of order N (N <= 7)")


def _cap_flags(p):
    p.add_argument("--max-subset-size", type=int)
    p.add_argument("--time-budget-ms", type=float)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="genpos", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="compute gp, gp-, tp, tp-, geodetic, ...")
    _source_flags(p)
    p.add_argument("--which", action="append", default=None,
                   help=f"comma-separated subset of {','.join(INVARIANTS)} (default gp,gp-,tp,tp-)")
    p.add_argument("--jobs", type=int, default=1)
    _cap_flags(p)
    _output_flags(p)
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("construct", help="run a terminal-set construction and print its trace")
    p.add_argument("method", choices=("diam2", "diam3", "structured"))
    _source_flags(p)
    p.add_argument("--trace", action="store_true", help="also print the trace to stderr")
    _output_flags(p)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("product", help="Cartesian product checks")
    p.add_argument("kind", choices=("layer-check", "universal-line", "clique", "multipartite", "orthogonal"))
    p.add_argument("--left", help="left factor (family spec or g6:...)")
    p.add_argument("--right", help="right factor")
    p.add_argument("--set", help="layer-check: comma-separated maximal gp set of the left factor")
    p.add_argument("--anchor", type=int, default=0)
    p.add_argument("--orders", help="clique: comma-separated clique orders")
    p.add_argument("--left-parts", help="multipartite: part sizes of G")
    p.add_argument("--right-parts", help="multipartite: part sizes of H")
    p.add_argument("--graph", help="orthogonal: the factor G")
    p.add_argument("--r", type=int, default=2, help="orthogonal: number of K_r layers")
    p.add_argument("--sets", help="orthogonal: sets separated by ';', e.g. '0,3;1,5'")
    _output_flags(p)
    p.set_defaults(func=cmd_product)

    p = sub.add_parser("scan", help="conjecture scans")
    p.add_argument("kind", choices=("conjecture-product", "terminal-existence"))
    p.add_argument("--max-order", type=int)
    p.add_argument("--graph6", help="graph6 corpus instead of enumeration")
    _cap_flags(p)
    _output_flags(p)
    p.set_defaults(func=cmd_scan)

    p = sub.add_parser("suite", help="run a named verification suite")
    p.add_argument("name", help=f"one of: all, {', '.join(SUITES)}")
    _output_flags(p)
    p.set_defaults(func=cmd_suite)
    return parser


_REQUIRED = {
    "layer-check": ("left", "right", "set"),
    "universal-line": ("left", "right"),
    "clique": ("orders",),
    "multipartite": ("left_parts", "right_parts"),
    "orthogonal": ("graph", "sets"),
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "invariants" and not args.which:
        args.which = ["gp,gp-,tp,tp-"]
    if args.command == "product":
        missing = [f"--{m.replace('_', '-')}" for m in _REQUIRED[args.kind] if getattr(args, m) is None]
        if missing:
            parser.error(f"product {args.kind} needs {', '.join(missing)}")
    try:
        return args.func(args)
    except ContractError as exc:
        print(f"genpos: contract violation: {exc}", file=sys.stderr)
        return EXIT_VIOLATION
    except (GenPosError, OSError) as exc:
        print(f"genpos: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
