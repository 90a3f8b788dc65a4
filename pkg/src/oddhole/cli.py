"""Command-line interface.

Exit codes: 0 when no check failed, 1 when a Fail is present, 2 on input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .budget import default_budget_nodes
from .coloring import chromatic_number, k_colorable
from .corpus import builtin_corpus, load_corpus
from .cuts import degree_two_vertices, k2_cuts, p3_cuts, two_edge_cuts
from .formats import FormatError, read_graph_file, write_records
from .generators import (
    exhaustive_girth_graphs,
    gen_cycle,
    gen_k4_subdivision,
    gen_multi_theta,
    gen_path,
    gen_theta,
    petersen,
    random_girth_graph,
)
from .graph import GraphError, is_connected
from .holes import is_in_Gl
from .k4 import classify, classify_in, find_k4_subdivisions
from .validator import SuiteBudgets, emit_report, run_lemma_suite

EXIT_OK, EXIT_FAIL, EXIT_INPUT = 0, 1, 2

FAMILIES = ("cycle", "path", "theta", "multi-theta", "k4", "petersen", "random", "exhaustive")


class InputError(Exception):
    pass


def _ints(values, count=None, name="family"):
    try:
        out = [int(v) for v in values]
    except ValueError:
        raise InputError(f"{name} parameters must be integers") from None
    if count is not None and len(out) != count:
        raise InputError(f"{name} takes {count} parameter(s), got {len(out)}")
    return out


def _generate(family: str, params: list[str]):
    if family == "cycle":
        return [gen_cycle(*_ints(params, 1, family))]
    if family == "path":
        return [gen_path(*_ints(params, 1, family))]
    if family == "theta":
        return [gen_theta(*_ints(params, 3, family))]
    if family == "multi-theta":
        return [gen_multi_theta(_ints(params, None, family))]
    if family == "k4":
        return [gen_k4_subdivision(_ints(params, 6, family))[0]]
    if family == "petersen":
        _ints(params, 0, family)
        return [petersen()]
    if family == "random":
        n, m, g, seed = _ints(params, 4, family)
        res = random_girth_graph(n, m, g, seed)
        if not res.complete:
            print(f"warning: stopped at {res.graph.m} of {m} edges", file=sys.stderr)
        return [res.graph]
    if family == "exhaustive":
        n_max, g = _ints(params, 2, family)
        return list(exhaustive_girth_graphs(n_max, g))
    raise InputError(f"unknown family {family!r}")


def _budget(args) -> int | None:
    return args.budget if args.budget is not None else default_budget_nodes()


def _load(args):
    fmt = None if args.format == "auto" else args.format
    try:
        return read_graph_file(args.input, fmt)
    except FileNotFoundError:
        raise InputError(f"no such file: {args.input}") from None


def _dump(obj) -> None:
    print(json.dumps(obj, sort_keys=True))


def cmd_generate(args) -> int:
    graphs = _generate(args.family, args.params)
    data = write_records(graphs, args.format)
    if args.out:
        Path(args.out).write_bytes(data)
    else:
        sys.stdout.write(data.decode("ascii"))
    return EXIT_OK


def cmd_membership(args) -> int:
    for i, G in enumerate(_load(args)):
        v = is_in_Gl(G, args.l, _budget(args))
        _dump({"record": i, **v.to_json()})
    return EXIT_OK


def cmd_color(args) -> int:
    for i, G in enumerate(_load(args)):
        if args.chromatic:
            res = chromatic_number(G, _budget(args))
            coloring = res.coloring
            _dump({"record": i, "chromatic": res.value, "reason": res.lower_witness,
                   "coloring": None if coloring is None else [coloring[v] for v in range(G.n)]})
        else:
            res = k_colorable(G, args.k, _budget(args))
            coloring = res.coloring
            _dump({"record": i, "k": args.k, "outcome": res.outcome.value,
                   "coloring": None if coloring is None else [coloring[v] for v in range(G.n)]})
    return EXIT_OK


def cmd_cuts(args) -> int:
    for i, G in enumerate(_load(args)):
        out = {"record": i, "degree2": degree_two_vertices(G)}
        if is_connected(G):
            out["two_edge_cuts"] = [w.to_json() for w in two_edge_cuts(G)]
            out["k2_cuts"] = [w.to_json() for w in k2_cuts(G)]
            out["p3_cuts"] = [w.to_json() for w in p3_cuts(G)]
        else:
            out["error"] = "graph is disconnected; separators are not defined"
        _dump(out)
    return EXIT_OK


def cmd_subdivisions(args) -> int:
    for i, G in enumerate(_load(args)):
        stream = find_k4_subdivisions(G, args.cap, _budget(args))
        found = []
        for H in stream:
            found.append({**H.to_json(), "class": classify(H).value,
                          "class_in_graph": classify_in(G, H).value,
                          "faces": list(H.face_lengths())})
        _dump({"record": i, "cap": args.cap, "subdivisions": found, "exhausted": stream.exhausted})
    return EXIT_OK


def cmd_lemmas(args) -> int:
    if args.corpus:
        try:
            corpus = load_corpus(args.corpus)
        except FileNotFoundError as exc:
            raise InputError(str(exc)) from None
    else:
        corpus = builtin_corpus(args.l, args.seed)
    budgets = SuiteBudgets.from_env()
    if args.budget is not None:
        b = args.budget
        budgets = SuiteBudgets(b, b, b, b, b)
    report = run_lemma_suite(corpus, args.l, budgets, args.seed, args.jobs, args.timing)
    data = emit_report(report, "json" if args.json else "text", args.timing)
    if args.json and args.json != "-":
        Path(args.json).write_bytes(data)
        sys.stdout.write(emit_report(report, "text").decode())
    else:
        sys.stdout.write(data.decode())
    return EXIT_FAIL if report.has_fail else EXIT_OK


def cmd_report(args) -> int:
    try:
        data = json.loads(Path(args.input).read_text())
    except FileNotFoundError:
        raise InputError(f"no such file: {args.input}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"not a JSON report: {exc}") from None
    if "entries" not in data or "summary" not in data:
        raise InputError("not a lemma-suite report")
    fails = []
    for e in data["entries"]:
        for c in e["checks"]:
            if c["status"] == "Fail":
                fails.append((e["id"], c["check"], c["reason"]))
    if args.format == "json":
        _dump({"summary": data["summary"], "fails": [list(f) for f in fails]})
    else:
        print(f"report from oddhole {data.get('version')}  l={data.get('l')}  seed={data.get('seed')}")
        for check, row in data["summary"].items():
            cells = "  ".join(f"{k}={v}" for k, v in row.items())
            print(f"  {check:<8} {cells}")
        for entry, check, why in fails:
            print(f"FAIL {entry} {check}: {why}")
    return EXIT_FAIL if fails else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="oddhole", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"oddhole {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    def graph_input(sp):
        sp.add_argument("--input", "-i", required=True, help="graph file")
        sp.add_argument("--format", choices=("auto", "g6", "s6", "dimacs"), default="auto")
        sp.add_argument("--budget", type=int, default=None, help="search node cap")

    g = sub.add_parser("generate", help="write a family member as graph6/sparse6/DIMACS")
    g.add_argument("family", choices=FAMILIES)
    g.add_argument("params", nargs="*")
    g.add_argument("--format", choices=("g6", "s6", "dimacs"), default="g6")
    g.add_argument("--out", "-o")
    g.set_defaults(func=cmd_generate)

    m = sub.add_parser("membership", help="decide membership in the family for l")
    graph_input(m)
    m.add_argument("--l", type=int, required=True)
    m.set_defaults(func=cmd_membership)

    c = sub.add_parser("color", help="k-colourability or chromatic number")
    graph_input(c)
    mode = c.add_mutually_exclusive_group(required=True)
    mode.add_argument("--k", type=int)
    mode.add_argument("--chromatic", action="store_true")
    c.set_defaults(func=cmd_color)

    cu = sub.add_parser("cuts", help="degree-2 vertices, 2-edge-, K2- and P3-cuts")
    graph_input(cu)
    cu.set_defaults(func=cmd_cuts)

    s = sub.add_parser("subdivisions", help="K4-subdivisions with bounded arrises")
    graph_input(s)
    s.add_argument("--cap", type=int, default=None, help="maximum arris length")
    s.set_defaults(func=cmd_subdivisions)

    lm = sub.add_parser("lemmas", help="run every structural check over a corpus")
    lm.add_argument("--l", type=int, default=4)
    lm.add_argument("--corpus", nargs="*", help="graph files or directories (default: built-in)")
    lm.add_argument("--json", nargs="?", const="-", help="write the JSON report here ('-' for stdout)")
    lm.add_argument("--seed", type=int, default=0)
    lm.add_argument("--jobs", type=int, default=1)
    lm.add_argument("--budget", type=int, default=None)
    lm.add_argument("--timing", action="store_true", help="include per-check timings")
    lm.set_defaults(func=cmd_lemmas)

    r = sub.add_parser("report", help="summarize a saved JSON report")
    r.add_argument("input")
    r.add_argument("--format", choices=("text", "json"), default="text")
    r.set_defaults(func=cmd_report)
    return p


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (InputError, FormatError, GraphError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
