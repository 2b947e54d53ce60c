"""Command-line front end: ``tollkit {compute,interval,product,verify,sweep,gen}``.

Graph arguments use one micro-syntax: ``g6:<line>``, ``file:<path>`` or
``family:<kind>:<n>``.  Exit status is 0 on success, 1 on usage or input
errors and 2 when a verification finds a counterexample.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from collections.abc import Sequence
from pathlib import Path

from .graph import Graph, GraphError, VertexSet, family
from .harness import CHECKS, reports_to_json, reports_to_text, run_check, summarize, sweep
from .io import (
    Corpus,
    emit_dot,
    emit_graph6,
    enumerate_connected,
    parse_edge_list,
    parse_graph6,
    read_corpus,
)
from .products import ProductGraph, product
from .search import geodetic_number, hull_number, t_hull_number, toll_number
from .toll import (
    extreme_vertices,
    geodesic_interval,
    monophonic_interval,
    toll_interval,
    toll_interval_oracle,
)

EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 1, 2


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):  # argparse would exit with status 2
        raise UsageError(message)


# -- graph arguments -------------------------------------------------------------


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def parse_graph_spec(spec: str) -> Graph:
    kind, _, rest = spec.partition(":")
    if kind == "g6":
        return parse_graph6(rest)
    if kind == "family":
        name, _, n = rest.partition(":")
        try:
            return family(name, int(n))
        except ValueError as exc:
            if isinstance(exc, GraphError):
                raise
            raise UsageError(f"bad family size in {spec!r}") from exc
    if kind == "file":
        lines = [
            ln.strip() for ln in _read_text(rest).splitlines()
            if ln.strip() and not ln.lstrip().startswith("#")
        ]
        if not lines:
            raise GraphError(f"{rest} contains no graph")
        if lines[0].split()[0].isdigit():
            return parse_edge_list("\n".join(lines))
        if len(lines) != 1:
            raise GraphError(f"{rest} holds {len(lines)} graph6 lines; expected one")
        return parse_graph6(lines[0])
    raise UsageError(f"graph spec {spec!r} must start with g6:, file: or family:")


def parse_corpus_spec(spec: str) -> Corpus:
    if spec.startswith("file:"):
        path = spec[len("file:"):]
        _read_text(path)
        return read_corpus(path)
    return Corpus((parse_graph_spec(spec),), spec)


def _generated_corpus(min_n: int, max_n: int, skip_complete: bool) -> Corpus:
    graphs: list[Graph] = []
    for n in range(min_n, max_n + 1):
        graphs.extend(enumerate_connected(n, skip_complete))
    tag = f"connected:{min_n}..{max_n}" + (":noncomplete" if skip_complete else "")
    return Corpus(tuple(graphs), tag)


def _parse_pair(text: str) -> tuple[int, int]:
    try:
        a, b = (int(t) for t in text.split(","))
    except ValueError as exc:
        raise UsageError(f"--pair expects 'u,v', got {text!r}") from exc
    return a, b


def _target(args: argparse.Namespace) -> tuple[Graph, ProductGraph | None]:
    if args.graph:
        if args.left or args.right:
            raise UsageError("use either --graph or --left/--right, not both")
        return parse_graph_spec(args.graph), None
    if not (args.left and args.right):
        raise UsageError("need --graph, or both --left and --right")
    p = product(parse_graph_spec(args.left), parse_graph_spec(args.right), args.kind)
    return p.graph, p


def _fmt(s: VertexSet, p: ProductGraph | None) -> str:
    return p.format_set(s) if p else repr(s)


def _names(s: VertexSet, p: ProductGraph | None) -> list:
    return [list(p.decode(v)) for v in s] if p else s.to_list()


def _write_dot(path: str | None, g: Graph, p: ProductGraph | None, highlight, accent=()) -> None:
    if path:
        labels = p.labels() if p else None
        Path(path).write_text(emit_dot(g, highlight, labels, accent=accent))


def _emit(args: argparse.Namespace, text: str, payload: dict) -> None:
    if args.format == "machine":
        print(json.dumps(payload))
    else:
        print(text)


# -- subcommands -------------------------------------------------------------------

_INVARIANTS = {"tn": toll_number, "th": t_hull_number, "g": geodetic_number, "hn": hull_number}


def cmd_compute(args: argparse.Namespace) -> int:
    g, p = _target(args)
    if args.invariant == "ext":
        ext = extreme_vertices(g)
        _write_dot(args.emit_dot, g, p, ext)
        _emit(args, f"ext = {len(ext)}, vertices {_fmt(ext, p)}",
              {"invariant": "ext", "value": len(ext), "witness": _names(ext, p),
               "graph6": emit_graph6(g)})
        return EXIT_OK
    max_size = args.max_size if args.max_size else (4 if p is not None and g.n > 16 else None)
    result = _INVARIANTS[args.invariant](g, max_size=max_size)
    _write_dot(args.emit_dot, g, p, result.witness)
    payload = {
        "invariant": args.invariant,
        "value": result.value,
        "witness": _names(result.witness, p),
        "explored": result.explored,
        "graph6": emit_graph6(g),
    }
    if p:
        payload["product"] = {"kind": p.kind, "left": emit_graph6(p.left),
                              "right": emit_graph6(p.right)}
    _emit(args, f"{args.invariant} = {result.value}, witness {_fmt(result.witness, p)}", payload)
    return EXIT_OK


_INTERVALS = {
    "toll": toll_interval,
    "oracle": toll_interval_oracle,
    "geodesic": geodesic_interval,
    "monophonic": monophonic_interval,
}


def cmd_interval(args: argparse.Namespace) -> int:
    g, p = _target(args)
    u, v = _parse_pair(args.pair)
    s = _INTERVALS[args.via](g, u, v)
    _write_dot(args.emit_dot, g, p, s, accent=(u, v))
    _emit(args, _fmt(s, p), {"interval": args.via, "pair": [u, v], "members": _names(s, p)})
    return EXIT_OK


def cmd_product(args: argparse.Namespace) -> int:
    if not (args.left and args.right):
        raise UsageError("product needs --left and --right")
    p = product(parse_graph_spec(args.left), parse_graph_spec(args.right), args.kind)
    _write_dot(args.emit_dot, p.graph, p, ())
    payload = {
        "kind": p.kind,
        "n": p.graph.n,
        "graph6": emit_graph6(p.graph),
        "edges": [[list(p.decode(a)), list(p.decode(b))] for a, b in p.graph.edges()],
    }
    _emit(args, emit_graph6(p.graph), payload)
    return EXIT_OK


def _check_names(check: str) -> list[str]:
    return list(CHECKS) if check == "all" else [check]


def cmd_verify(args: argparse.Namespace) -> int:
    if not (args.left and args.right):
        raise UsageError("verify needs --left and --right")
    left, right = parse_graph_spec(args.left), parse_graph_spec(args.right)
    reports = [run_check(name, left, right) for name in _check_names(args.check)]
    if args.format == "machine":
        print(reports_to_json(reports, {"left": args.left, "right": args.right}))
    else:
        sys.stdout.write(reports_to_text(reports))
    return EXIT_FAILED if any(r.outcome == "fail" for r in reports) else EXIT_OK


def cmd_sweep(args: argparse.Namespace) -> int:
    generated = _generated_corpus(args.min_n, args.max_n, args.skip_complete)
    left = parse_corpus_spec(args.left) if args.left else generated
    right = parse_corpus_spec(args.right) if args.right else generated
    reports = sweep(left, right, _check_names(args.check), jobs=args.jobs)
    counts = summarize(reports)
    if args.format == "machine":
        meta = {"left": left.source, "right": right.source, "check": args.check}
        print(reports_to_json(reports, meta))
    else:
        sys.stdout.write(reports_to_text(reports))
        print("summary " + " ".join(f"{k}={v}" for k, v in counts.items()))
    return EXIT_FAILED if counts["fail"] else EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    corpus = _generated_corpus(args.min_n, args.max_n, args.skip_complete)
    lines = [f"# {corpus.source} ({len(corpus)} graphs)"] + [emit_graph6(g) for g in corpus]
    text = "\n".join(lines) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


def _default_jobs() -> int:
    raw = os.environ.get("TOLLKIT_JOBS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tollkit", description="Toll convexity of graphs and strong products.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def graph_args(sp: argparse.ArgumentParser, single: bool = True) -> None:
        if single:
            sp.add_argument("--graph", help="g6:<line> | file:<path> | family:<kind>:<n>")
        sp.add_argument("--left", help="left factor (same syntax as --graph)")
        sp.add_argument("--right", help="right factor (same syntax as --graph)")
        sp.add_argument("--kind", choices=["strong", "cartesian", "lex"], default="strong")

    def output_args(sp: argparse.ArgumentParser, dot: bool = False) -> None:
        sp.add_argument("--format", choices=["text", "machine"], default="text")
        if dot:
            sp.add_argument("--emit-dot", metavar="PATH", help="write a DOT rendering")

    sp = sub.add_parser("compute", help="compute an invariant")
    graph_args(sp)
    sp.add_argument("--invariant", choices=["tn", "th", "g", "hn", "ext"], required=True)
    sp.add_argument("--max-size", type=int, default=0, help="cap on the witness size")
    output_args(sp, dot=True)
    sp.set_defaults(func=cmd_compute)

    sp = sub.add_parser("interval", help="print an interval between two vertices")
    graph_args(sp)
    sp.add_argument("--pair", required=True, help="vertex indices u,v")
    sp.add_argument("--via", choices=list(_INTERVALS), default="toll")
    output_args(sp, dot=True)
    sp.set_defaults(func=cmd_interval)

    sp = sub.add_parser("product", help="build a graph product")
    graph_args(sp, single=False)
    output_args(sp, dot=True)
    sp.set_defaults(func=cmd_product)

    check_choices = list(CHECKS) + ["all"]
    sp = sub.add_parser("verify", help="check the product theorems on one factor pair")
    graph_args(sp, single=False)
    sp.add_argument("--check", choices=check_choices, default="all")
    output_args(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("sweep", help="check the product theorems over corpora")
    sp.add_argument("--left", help="corpus: file:<path> or a single graph spec")
    sp.add_argument("--right", help="corpus: file:<path> or a single graph spec")
    sp.add_argument("--check", choices=check_choices, default="all")
    sp.add_argument("--min-n", type=int, default=2)
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--skip-complete", action="store_true")
    sp.add_argument("--jobs", type=int, default=_default_jobs())
    output_args(sp)
    sp.set_defaults(func=cmd_sweep)

    sp = sub.add_parser("gen", help="write connected graphs as graph6 lines")
    sp.add_argument("--min-n", type=int, default=2)
    sp.add_argument("--max-n", type=int, default=4)
    sp.add_argument("--skip-complete", action="store_true")
    sp.add_argument("--output", metavar="PATH")
    sp.set_defaults(func=cmd_gen)
    return parser


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"tollkit: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except GraphError as exc:
        print(f"tollkit: {exc}", file=sys.stderr)
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
