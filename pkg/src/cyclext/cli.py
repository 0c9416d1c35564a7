"""Command-line surface: analyze, check, verify, enumerate, catalog.

Exit codes: 0 = pass / verdict delivered, 1 = verification failure
(recognizer/oracle disagreement), 2 = usage or parse error, vacuous run, or
budget exhaustion.  JSON output has sorted keys and is byte-stable for a
fixed invocation and seed.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Iterable

from .catalog import CatalogError, load_patterns, self_check
from .cycles import DEFAULT_CYCLE_BUDGET, is_fully_cycle_extendable
from .graph import Graph, Graph6Error, parse_graph6, write_graph6
from .harness import (
    enumerate_connected_graphs,
    random_probe,
    verify_corollary,
    verify_theorem,
)
from .localprops import (
    UndefinedCoefficientError,
    degree_stats,
    is_claw_free,
    is_locally_connected,
    local_profile,
    min_clustering_coefficient,
    true_twin_classes,
)
from .recognizer import check_hypotheses, classify

BUDGET_ENV = "CYCLEXT_BUDGET"
WORKERS_ENV = "CYCLEXT_WORKERS"


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="ascii") as fh:
        return fh.read().splitlines()


def _parse_edge_list(lines: list[str]) -> Graph:
    header = lines[0].strip()
    n = int(header[2:])
    edges = []
    for ln in lines[1:]:
        ln = ln.split("#", 1)[0].strip()
        if not ln:
            continue
        u, v = ln.split()
        edges.append((int(u), int(v)))
    return Graph(n, edges)


def read_input_graphs(path: str) -> list[Graph]:
    """graph6 records one per line, or an edge list starting with ``n=K``."""
    lines = [ln for ln in _read_lines(path) if ln.strip()]
    if not lines:
        raise ValueError("empty input")
    if lines[0].strip().startswith("n="):
        return [_parse_edge_list(lines)]
    return [parse_graph6(ln.strip()) for ln in lines]


def _fraction_str(x) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)


def _cmd_analyze(args) -> int:
    graphs = read_input_graphs(args.input)
    for g in graphs:
        profiles = [local_profile(g, v) for v in range(g.n)]
        try:
            xi_g = min_clustering_coefficient(g)
        except UndefinedCoefficientError:
            xi_g = None
        lc = is_locally_connected(g)
        delta, big_delta = degree_stats(g) if g.n else (0, 0)
        twins = [list(c) for c in true_twin_classes(g) if len(c) > 1]
        if args.format == "json":
            out = {
                "graph6": write_graph6(g).decode("ascii"),
                "n": g.n,
                "m": g.edge_count(),
                "min_degree": delta,
                "max_degree": big_delta,
                "min_clustering_coefficient": _fraction_str(xi_g) if xi_g is not None else None,
                "locally_connected": lc.ok,
                "locally_connected_failing_vertex": lc.failing_vertex,
                "claw_free": is_claw_free(g),
                "true_twin_classes": twins,
                "vertices": [
                    {"vertex": p.vertex, "degree": p.degree, "nbr_edges": p.nbr_edges,
                     "xi": _fraction_str(p.xi) if p.xi is not None else None,
                     "nbrhood_connected": p.nbrhood_connected}
                    for p in profiles
                ],
            }
            print(json.dumps(out, sort_keys=True))
        else:
            print(f"graph6 {write_graph6(g).decode('ascii')}  n={g.n} m={g.edge_count()} "
                  f"delta={delta} Delta={big_delta}")
            print(f"  min clustering coefficient: "
                  f"{_fraction_str(xi_g) if xi_g is not None else 'undefined (a vertex has degree < 2)'}")
            print(f"  locally connected: {lc.ok}"
                  + (f" (fails at vertex {lc.failing_vertex})" if not lc.ok else ""))
            print(f"  claw-free: {is_claw_free(g)}")
            print(f"  true twin classes (size > 1): {twins if twins else 'none'}")
            for p in profiles:
                xi = _fraction_str(p.xi) if p.xi is not None else "undefined"
                print(f"    v={p.vertex} deg={p.degree} nbr_edges={p.nbr_edges} "
                      f"xi={xi} nbrhood_connected={p.nbrhood_connected}")
    return 0


def _cmd_check(args) -> int:
    graphs = read_input_graphs(args.input)
    any_disagree = False
    for g in graphs:
        verdict = classify(g)
        out = verdict.to_json_dict()
        out["graph6"] = write_graph6(g).decode("ascii")
        if args.oracle:
            if check_hypotheses(g).all_ok:
                oracle = is_fully_cycle_extendable(g, budget=args.budget)
                out["oracle_fully_cycle_extendable"] = oracle.ok
                out["agree"] = verdict.is_fully_cycle_extendable == oracle.ok
                any_disagree |= not out["agree"]
            else:
                out["oracle_fully_cycle_extendable"] = None
                out["agree"] = None
        if args.format == "json":
            print(json.dumps(out, sort_keys=True))
        else:
            line = f"{out['graph6']}: {verdict.verdict}"
            if verdict.obstruction is not None:
                line += f" ({verdict.obstruction.name})"
            if verdict.failed:
                line += f" failed={list(verdict.failed)}"
            if args.oracle and out.get("agree") is not None:
                line += f" oracle_agree={out['agree']}"
            print(line)
    return 1 if any_disagree else 0


def _cmd_verify(args) -> int:
    if args.random:
        report = random_probe(args.n, args.trials, args.seed,
                              workers=args.workers, budget=args.budget)
    else:
        source: Iterable[str] | None = None
        if args.input is not None:
            source = _read_lines(args.input)
        run = verify_corollary if args.mode == "corollary" else verify_theorem
        report = run(args.n, source, workers=args.workers, budget=args.budget)
    if args.csv:
        _write_verdict_csv(args, report)
    if args.format == "json":
        print(report.to_json())
    else:
        print(f"{report.kind}: graphs_seen={report.graphs_seen} in_hypothesis={report.in_hypothesis} "
              f"agreements={report.agreements} disagreements={len(report.disagreements)} "
              f"lemma1_violations={len(report.lemma1_violations)} "
              f"budget_exhausted={len(report.budget_exhausted)} elapsed={report.elapsed:.2f}s")
        for d in report.disagreements:
            print(f"  DISAGREE {d}")
        for v in report.lemma1_violations:
            print(f"  LEMMA1 {v}")
    return report.exit_code()


def _write_verdict_csv(args, report) -> None:
    import csv

    with open(args.csv, "w", newline="", encoding="ascii") as fh:
        w = csv.writer(fh)
        w.writerow(["graph6", "recognizer", "oracle"])
        for d in report.disagreements:
            w.writerow([d.get("graph6"), d.get("recognizer"), d.get("oracle")])


def _cmd_enumerate(args) -> int:
    for g in enumerate_connected_graphs(args.n):
        sys.stdout.write(write_graph6(g).decode("ascii") + "\n")
    return 0


def _cmd_catalog(args) -> int:
    patterns = load_patterns()
    lines = self_check(patterns)
    for p in patterns:
        print(f"name: {p.name}")
        print(f"n: {p.graph.n}")
        print(f"edges: {' '.join(f'{u}-{v}' for u, v in p.graph.edges())}")
        print(f"attachment: {' '.join(str(v) for v in sorted(p.attachment))}")
        print(f"provenance: {p.provenance}")
        print()
    print(f"self-checks passed: {len(lines)}")
    if args.verbose:
        for ln in lines:
            print(f"  {ln}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cyclext",
        description="Cycle extendability analysis for locally connected, locally dense graphs.")
    sub = parser.add_subparsers(dest="command", required=True)

    default_budget = int(os.environ.get(BUDGET_ENV, DEFAULT_CYCLE_BUDGET))
    default_workers = int(os.environ.get(WORKERS_ENV, 1))

    p = sub.add_parser("analyze", help="per-vertex local structure report")
    p.add_argument("--input", default="-", help="graph6 lines or edge list file; - for stdin")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=_cmd_analyze)

    p = sub.add_parser("check", help="classify graphs; optional oracle cross-check")
    p.add_argument("--input", default="-")
    p.add_argument("--format", choices=["text", "json"], default="json")
    p.add_argument("--oracle", action="store_true", help="also run the exponential oracle")
    p.add_argument("--budget", type=int, default=default_budget)
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("verify", help="recognizer-vs-oracle verification campaigns")
    p.add_argument("--n", type=int, default=6, help="max order for builtin sweeps / order for --random")
    p.add_argument("--mode", choices=["theorem", "corollary"], default="theorem")
    p.add_argument("--input", default=None, help="graph6 stream instead of the builtin enumerator")
    p.add_argument("--random", action="store_true", help="randomized probe instead of exhaustion")
    p.add_argument("--trials", type=int, default=10000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--budget", type=int, default=default_budget)
    p.add_argument("--workers", type=int, default=default_workers)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--csv", default=None, help="write per-graph disagreement rows as CSV")
    p.set_defaults(func=_cmd_verify)

    p = sub.add_parser("enumerate", help="connected graphs on n vertices, one graph6 line each")
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("catalog", help="print catalog stanzas and re-run self-checks")
    p.add_argument("--verbose", action="store_true")
    p.set_defaults(func=_cmd_catalog)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "workers", 1) < 1:
        parser.error("--workers must be >= 1")
    try:
        return args.func(args)
    except Graph6Error as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, OSError, CatalogError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
