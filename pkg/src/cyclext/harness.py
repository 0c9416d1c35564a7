"""Verification campaigns: recognizer vs oracle over exhaustive and random corpora.

The built-in enumerator produces one representative per isomorphism class of
connected graphs up to order 8, deduplicated by a canonical form computed
with iterated colour refinement plus individualization backtracking.  Runs
shard per-graph across a process pool and merge into deterministic,
machine-readable reports.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache, partial
from itertools import combinations
from typing import Callable, Iterable, Iterator

from .cycles import (
    DEFAULT_CYCLE_BUDGET,
    BudgetExceededError,
    check_lemma1,
    cycle_spectrum,
    is_fully_cycle_extendable,
    is_weakly_pancyclic,
)
from .graph import Graph, induced_subgraph, is_connected, iter_bits, parse_graph6, write_graph6
from .recognizer import (
    VERDICT_FULLY_CYCLE_EXTENDABLE,
    Classification,
    check_hypotheses,
    classify,
    predict_weakly_pancyclic,
)

ENUMERATOR_MAX_N = 8


# ---------------------------------------------------------------------------
# Canonical labeling and the built-in enumerator
# ---------------------------------------------------------------------------


def _refine(adj: tuple[int, ...], n: int, colors: tuple[int, ...]) -> tuple[int, ...]:
    # Iterated colour refinement: split classes by the multiset of neighbour
    # colours until stable.  Colour ids are ranks of sorted signatures, so the
    # refinement itself is label-independent.
    while True:
        sigs = []
        for v in range(n):
            nbr = sorted(colors[u] for u in iter_bits(adj[v]))
            sigs.append((colors[v], tuple(nbr)))
        rank = {s: i for i, s in enumerate(sorted(set(sigs)))}
        new = tuple(rank[s] for s in sigs)
        if new == colors:
            return new
        colors = new


def canonical_labeling(g: Graph) -> tuple[int, ...]:
    """old -> new position map minimizing the adjacency bitstring over the search tree."""
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g._adj
    twice_m = sum(m.bit_count() for m in adj)
    if twice_m == 0 or twice_m == n * (n - 1):
        return tuple(range(n))  # edgeless and complete graphs are already canonical
    best: list = [None, None]

    def encode(perm: tuple[int, ...]) -> int:
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        acc = 1  # leading sentinel bit keeps leading zeros significant
        for j in range(1, n):
            col = adj[inv[j]]
            for i in range(j):
                acc = (acc << 1) | ((col >> inv[i]) & 1)
        return acc

    def descend(colors: tuple[int, ...]) -> None:
        colors = _refine(adj, n, colors)
        cells: dict[int, list[int]] = {}
        for v in range(n):
            cells.setdefault(colors[v], []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                target = cells[c]
                break
        if target is None:
            enc = encode(colors)
            if best[0] is None or enc < best[0]:
                best[0], best[1] = enc, colors
            return
        base = [c * 2 for c in colors]
        for v in target:
            branched = list(base)
            branched[v] -= 1
            descend(tuple(branched))

    descend(tuple([0] * n))
    return best[1]


def canonical_form(g: Graph) -> bytes:
    """graph6 record of the canonically relabeled graph; equal iff isomorphic."""
    return write_graph6(g.relabel(canonical_labeling(g)))


@lru_cache(maxsize=None)
def _graph_classes(n: int) -> tuple[tuple[int, ...], ...]:
    # One canonically-labeled adjacency tuple per isomorphism class of ALL
    # simple graphs on n vertices, built by extending the (n-1)-classes with
    # one new vertex attached in every possible way.
    if n == 1:
        return ((0,),)
    out: set[tuple[int, ...]] = set()
    newbit = 1 << (n - 1)
    for parent in _graph_classes(n - 1):
        for nbrs in range(1 << (n - 1)):
            masks = [parent[i] | (newbit if (nbrs >> i) & 1 else 0) for i in range(n - 1)]
            masks.append(nbrs)
            g = Graph._from_masks(n, tuple(masks))
            out.add(g.relabel(canonical_labeling(g))._adj)
    return tuple(sorted(out))


def enumerate_connected_graphs(n: int) -> Iterator[Graph]:
    """Exactly one representative per isomorphism class of connected graphs on n vertices."""
    if not 1 <= n <= ENUMERATOR_MAX_N:
        raise ValueError(
            f"builtin enumerator supports 1 <= n <= {ENUMERATOR_MAX_N}; "
            "feed larger orders as an external graph6 stream")
    for masks in _graph_classes(n):
        g = Graph._from_masks(n, masks)
        if is_connected(g):
            yield g


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class VerificationReport:
    """Aggregate of one verification campaign; deterministic given (source, seed, budget)."""

    kind: str
    n_range: list[int]
    graphs_seen: int = 0
    in_hypothesis: int = 0
    agreements: int = 0
    disagreements: list[dict] = field(default_factory=list)
    lemma1_violations: list[dict] = field(default_factory=list)
    budget_exhausted: list[str] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.disagreements and not self.lemma1_violations

    @property
    def vacuous(self) -> bool:
        return self.in_hypothesis == 0

    def validate(self) -> None:
        # Every in-hypothesis graph is exactly one of: agreed, disagreed,
        # budget-exhausted.  With an empty budget list this is the plain
        # invariant agreements + |disagreements| == in_hypothesis.
        assert self.agreements + len(self.disagreements) + len(self.budget_exhausted) == self.in_hypothesis

    def exit_code(self) -> int:
        if not self.passed:
            return 1
        if self.vacuous or self.budget_exhausted:
            return 2
        return 0

    def to_json(self, include_elapsed: bool = False) -> str:
        out = {
            "kind": self.kind,
            "n_range": self.n_range,
            "graphs_seen": self.graphs_seen,
            "in_hypothesis": self.in_hypothesis,
            "agreements": self.agreements,
            "disagreements": self.disagreements,
            "lemma1_violations": self.lemma1_violations,
            "budget_exhausted": self.budget_exhausted,
            "passed": self.passed,
            "vacuous": self.vacuous,
        }
        if include_elapsed:
            out["elapsed"] = self.elapsed
        return json.dumps(out, sort_keys=True, separators=(",", ":"))


def _verdict_label(c: Classification) -> str:
    if c.verdict == VERDICT_FULLY_CYCLE_EXTENDABLE:
        return "fully_cycle_extendable"
    if c.obstruction is not None:
        return f"obstructed({c.obstruction.name})"
    return c.verdict


# ---------------------------------------------------------------------------
# Per-graph cases (top level so they pickle for the worker pool)
# ---------------------------------------------------------------------------


def _theorem_case(g6: str, budget: int, with_pancyclicity: bool = False) -> dict:
    g = parse_graph6(g6)
    row: dict = {"graph6": g6, "n": g.n, "in_hypothesis": False}
    if not check_hypotheses(g).all_ok:
        return row
    row["in_hypothesis"] = True
    verdict = classify(g)
    row["recognizer"] = _verdict_label(verdict)
    try:
        oracle = is_fully_cycle_extendable(g, budget=budget)
    except BudgetExceededError:
        row["budget_exceeded"] = True
        return row
    row["oracle"] = oracle.ok
    row["agree"] = verdict.is_fully_cycle_extendable == oracle.ok
    if not oracle.ok and oracle.cycle is not None:
        # The oracle just proved this cycle non-extendable; no need to re-verify.
        for v in check_lemma1(g, oracle.cycle, verify_precondition=False):
            row.setdefault("lemma1", []).append(
                {"graph6": g6, "statement": v.statement, "i": v.i, "j": v.j, "x": v.x, "detail": v.detail})
    if with_pancyclicity:
        predicted = predict_weakly_pancyclic(g)
        actual = is_weakly_pancyclic(g)
        row["weakly_pancyclic_agree"] = predicted == actual
        row["weakly_pancyclic"] = actual
    return row


def _corollary_case(g6: str, budget: int) -> dict:
    g = parse_graph6(g6)
    row: dict = {"graph6": g6, "n": g.n, "in_hypothesis": False, "failures": []}
    if not check_hypotheses(g).all_ok:
        return row
    row["in_hypothesis"] = True
    predicted = predict_weakly_pancyclic(g)
    actual = is_weakly_pancyclic(g)
    if predicted != actual:
        row["failures"].append({"graph6": g6, "check": "weakly_pancyclic",
                                "recognizer": str(predicted), "oracle": str(actual)})
    # Degree-2 deletion mechanics.  Removing a degree-2 vertex from K3 leaves
    # an order-2 graph, below the order->=3 universe, so only n >= 4 applies.
    if g.n >= 4:
        circ = cycle_spectrum(g).circumference
        for v in range(g.n):
            if g.degree(v) != 2:
                continue
            a, b = g.neighbors(v)
            if not g.adjacent(a, b):
                row["failures"].append({"graph6": g6, "check": "degree2_neighbours_adjacent",
                                        "recognizer": f"vertex {v}", "oracle": "non-adjacent"})
                continue
            h, _ = induced_subgraph(g, set(range(g.n)) - {v})
            if not check_hypotheses(h).all_ok:
                row["failures"].append({"graph6": g6, "check": "degree2_deletion_hypothesis",
                                        "recognizer": f"vertex {v}",
                                        "oracle": str(check_hypotheses(h).failed_fields())})
                continue
            circ_h = cycle_spectrum(h).circumference
            if circ_h not in (circ, circ - 1):
                row["failures"].append({"graph6": g6, "check": "degree2_deletion_circumference",
                                        "recognizer": f"c(g)={circ}", "oracle": f"c(g-v)={circ_h}"})
    return row


# ---------------------------------------------------------------------------
# Campaign drivers
# ---------------------------------------------------------------------------


def _map_cases(fn: Callable[[str], dict], items: list[str], workers: int) -> list[dict]:
    if workers <= 1 or len(items) < 4:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (workers * 16))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _builtin_stream(n_max: int) -> list[str]:
    if not 3 <= n_max <= ENUMERATOR_MAX_N:
        raise ValueError(f"builtin sweeps need 3 <= n_max <= {ENUMERATOR_MAX_N}")
    out = []
    for n in range(3, n_max + 1):
        out.extend(write_graph6(g).decode("ascii") for g in enumerate_connected_graphs(n))
    return out


def _stream_records(source: Iterable[bytes | str]) -> list[str]:
    records = []
    for line in source:
        if isinstance(line, bytes):
            line = line.decode("ascii")
        line = line.strip()
        if line:
            records.append(line)
    return records


def verify_theorem(n_max: int = ENUMERATOR_MAX_N,
                   source: Iterable[bytes | str] | None = None,
                   *, workers: int = 1,
                   budget: int = DEFAULT_CYCLE_BUDGET) -> VerificationReport:
    """Recognizer verdict vs brute-force oracle on every in-hypothesis graph."""
    t0 = time.perf_counter()
    records = _builtin_stream(n_max) if source is None else _stream_records(source)
    rows = _map_cases(partial(_theorem_case, budget=budget), records, workers)
    rows.sort(key=lambda r: (r["n"], r["graph6"]))
    orders = [r["n"] for r in rows]
    report = VerificationReport(
        kind="theorem",
        n_range=[3, n_max] if source is None else ([min(orders), max(orders)] if orders else [0, 0]),
        graphs_seen=len(rows),
    )
    for r in rows:
        if not r["in_hypothesis"]:
            continue
        report.in_hypothesis += 1
        if r.get("budget_exceeded"):
            report.budget_exhausted.append(r["graph6"])
            continue
        if r["agree"]:
            report.agreements += 1
        else:
            report.disagreements.append(
                {"graph6": r["graph6"], "recognizer": r["recognizer"], "oracle": str(r["oracle"])})
        report.lemma1_violations.extend(r.get("lemma1", []))
    report.elapsed = time.perf_counter() - t0
    report.validate()
    return report


def verify_corollary(n_max: int = ENUMERATOR_MAX_N,
                     source: Iterable[bytes | str] | None = None,
                     *, workers: int = 1,
                     budget: int = DEFAULT_CYCLE_BUDGET) -> VerificationReport:
    """Weak pancyclicity plus degree-2 deletion mechanics on every in-hypothesis graph."""
    t0 = time.perf_counter()
    records = _builtin_stream(n_max) if source is None else _stream_records(source)
    rows = _map_cases(partial(_corollary_case, budget=budget), records, workers)
    rows.sort(key=lambda r: (r["n"], r["graph6"]))
    orders = [r["n"] for r in rows]
    report = VerificationReport(
        kind="corollary",
        n_range=[3, n_max] if source is None else ([min(orders), max(orders)] if orders else [0, 0]),
        graphs_seen=len(rows),
    )
    for r in rows:
        if not r["in_hypothesis"]:
            continue
        report.in_hypothesis += 1
        if r["failures"]:
            report.disagreements.extend(r["failures"])
        else:
            report.agreements += 1
    report.elapsed = time.perf_counter() - t0
    return report


def random_probe(n: int, trials: int, seed: int,
                 *, workers: int = 1,
                 budget: int = DEFAULT_CYCLE_BUDGET) -> VerificationReport:
    """Seeded random sweep: sample G(n, p) over a p-ladder, filter, compare.

    Deterministic under a fixed seed: the report (minus timing) is
    byte-identical across runs and worker counts.
    """
    if not 3 <= n <= 12:
        raise ValueError("random_probe supports 3 <= n <= 12")
    t0 = time.perf_counter()
    rng = random.Random(seed)
    pairs = list(combinations(range(n), 2))
    # Mean-degree ladder chosen so the max-degree <= 6 filter is satisfiable.
    ladder = [d / (n - 1) for d in (3.0, 3.5, 4.0, 4.5, 5.0)]
    hits: list[str] = []
    for t in range(trials):
        p = ladder[t % len(ladder)]
        masks = [0] * n
        for u, v in pairs:
            if rng.random() < p:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
        degs = [m.bit_count() for m in masks]
        if min(degs) < 2 or max(degs) > 6:
            continue
        g = Graph._from_masks(n, tuple(masks))
        if check_hypotheses(g).all_ok:
            hits.append(write_graph6(g).decode("ascii"))
    rows = _map_cases(partial(_theorem_case, budget=budget, with_pancyclicity=True),
                      sorted(hits), workers)
    rows.sort(key=lambda r: r["graph6"])
    report = VerificationReport(kind="random_probe", n_range=[n, n], graphs_seen=trials)
    for r in rows:
        report.in_hypothesis += 1
        if r.get("budget_exceeded"):
            report.budget_exhausted.append(r["graph6"])
            continue
        ok = r["agree"] and r.get("weakly_pancyclic_agree", True)
        if ok:
            report.agreements += 1
        else:
            report.disagreements.append(
                {"graph6": r["graph6"], "recognizer": r["recognizer"],
                 "oracle": f"fce={r['oracle']},weakly_pancyclic={r.get('weakly_pancyclic')}"})
        report.lemma1_violations.extend(r.get("lemma1", []))
    report.elapsed = time.perf_counter() - t0
    report.validate()
    return report
