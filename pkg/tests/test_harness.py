"""verify_harness: canonical forms, the enumerator, reports, and campaign drivers."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import cyclext as cx
from cyclext.harness import (
    _theorem_case,
    canonical_form,
    enumerate_connected_graphs,
    random_probe,
    verify_corollary,
    verify_theorem,
)
from conftest import WORKERS
from naive_oracles import brute_connected_classes, brute_isomorphic


# --- canonical form ----------------------------------------------------------


@given(st.data())
@settings(max_examples=120, deadline=None)
def test_canonical_form_is_isomorphism_invariant(data):
    n = data.draw(st.integers(min_value=1, max_value=7))
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    mask = data.draw(st.integers(min_value=0, max_value=(1 << len(pairs)) - 1)) if pairs else 0
    g = cx.Graph(n, [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1])
    perm = tuple(data.draw(st.permutations(list(range(n)))))
    assert canonical_form(g) == canonical_form(g.relabel(perm))


def test_canonical_form_separates_non_isomorphic():
    assert canonical_form(cx.complete_graph(4)) != canonical_form(cx.complete_minus_edge(4))
    assert canonical_form(cx.cycle_graph(6)) != canonical_form(cx.path_graph(6))


def test_canonical_form_equality_iff_isomorphic():
    import random

    rng = random.Random(404)
    pool = []
    for _ in range(60):
        n = rng.randint(3, 7)
        pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
        pool.append(cx.Graph(n, [e for e in pairs if rng.random() < 0.5]))
    for a in pool[:25]:
        for b in pool[:25]:
            assert (canonical_form(a) == canonical_form(b)) == cx.are_isomorphic(a, b)[0]


# --- enumerator --------------------------------------------------------------


def test_enumerator_counts_small_against_brute_force():
    assert sum(1 for _ in enumerate_connected_graphs(1)) == 1
    for n in (4, 5):
        ours = list(enumerate_connected_graphs(n))
        brute = brute_connected_classes(n)
        assert len(ours) == len(brute)
        for g in ours:
            assert cx.is_connected(g)
            assert sum(1 for r in brute if brute_isomorphic(g, r)) == 1
        for a_i, a in enumerate(ours):
            for b in ours[a_i + 1:]:
                assert not cx.are_isomorphic(a, b)[0]


def test_enumerator_counts_against_atlas():
    nx = pytest.importorskip("networkx")
    from networkx.generators.atlas import graph_atlas_g

    atlas_connected = {n: 0 for n in range(1, 8)}
    for h in graph_atlas_g()[1:]:  # entry 0 is the order-0 graph
        if h.number_of_nodes() >= 1 and nx.is_connected(h):
            atlas_connected[h.number_of_nodes()] += 1
    for n in range(1, 8):
        assert sum(1 for _ in enumerate_connected_graphs(n)) == atlas_connected[n]


def test_enumerator_count_order_8():
    # 11117 is the published number of connected graphs on 8 vertices; the
    # atlas cross-check above pins the same sequence through order 7.
    assert sum(1 for _ in enumerate_connected_graphs(8)) == 11117


def test_enumerator_range_errors():
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(0))
    with pytest.raises(ValueError):
        list(enumerate_connected_graphs(9))


# --- campaign drivers --------------------------------------------------------


def test_verify_theorem_small_sweep_passes():
    r = verify_theorem(5)
    assert r.graphs_seen == 29 and r.passed and not r.vacuous
    assert r.agreements == r.in_hypothesis > 0
    assert r.exit_code() == 0
    r.validate()


def test_verify_theorem_deterministic_and_worker_invariant():
    a = verify_theorem(5)
    b = verify_theorem(5)
    assert a.to_json() == b.to_json()
    c = verify_theorem(5, workers=WORKERS)
    assert a.to_json() == c.to_json()


def test_theorem_case_on_h1(pattern):
    g6 = cx.write_graph6(pattern["H1"].graph).decode("ascii")
    row = _theorem_case(g6, budget=10**7)
    assert row["in_hypothesis"] and row["recognizer"] == "obstructed(H1)"
    assert row["oracle"] is False and row["agree"] is True
    assert "lemma1" not in row or row["lemma1"] == []


def test_sweep_encounters_h_patterns_in_hypothesis(pattern):
    # The exhaustive sweep must meet H1 (order 6), H2/H3 (order 7) and H4
    # (order 8) standalone, inside the hypothesis class, and name them.
    by_order = {6: ["H1"], 7: ["H2", "H3"], 8: ["H4"]}
    for order, names in by_order.items():
        in_hyp_forms = {}
        for g in enumerate_connected_graphs(order):
            if cx.check_hypotheses(g).all_ok:
                in_hyp_forms[canonical_form(g)] = g
        for name in names:
            g = in_hyp_forms[canonical_form(pattern[name].graph)]
            verdict = cx.classify(g)
            assert verdict.obstruction is not None and verdict.obstruction.name == name
            assert not cx.is_fully_cycle_extendable(g).ok


def test_verify_theorem_stream_source(pattern):
    stream = [cx.write_graph6(pattern["F3"].graph), cx.write_graph6(pattern["F4"].graph)]
    r = verify_theorem(source=stream)
    # F3 is in-hypothesis and obstructed; F4 fails the xi >= 1/2 filter.
    assert r.graphs_seen == 2 and r.in_hypothesis == 1
    assert r.passed and r.n_range == [9, 9]


def test_verify_corollary_small_sweep():
    r = verify_corollary(6)
    assert r.passed and r.in_hypothesis > 0
    assert r.agreements == r.in_hypothesis


def test_corollary_mechanics_on_h1(pattern):
    h1 = pattern["H1"].graph
    circ = cx.cycle_spectrum(h1).circumference
    deg2 = [v for v in range(h1.n) if h1.degree(v) == 2]
    assert deg2
    for v in deg2:
        a, b = h1.neighbors(v)
        assert h1.adjacent(a, b)
        h, _ = cx.induced_subgraph(h1, set(range(h1.n)) - {v})
        assert cx.check_hypotheses(h).all_ok
        assert cx.cycle_spectrum(h).circumference in (circ, circ - 1)


def test_random_probe_deterministic_and_flags():
    a = random_probe(9, 2000, seed=11)
    b = random_probe(9, 2000, seed=11)
    assert a.to_json() == b.to_json()
    c = random_probe(9, 2000, seed=11, workers=WORKERS)
    assert a.to_json() == c.to_json()
    assert a.graphs_seen == 2000
    vac = random_probe(9, 0, seed=11)
    assert vac.graphs_seen == 0 and vac.vacuous and vac.exit_code() == 2
    with pytest.raises(ValueError):
        random_probe(13, 10, seed=0)


def test_report_invariant_and_json_shape():
    r = verify_theorem(4)
    r.validate()
    assert r.agreements + len(r.disagreements) == r.in_hypothesis
    js = r.to_json()
    assert '"elapsed"' not in js
    assert '"kind":"theorem"' in js
    assert '"elapsed"' in r.to_json(include_elapsed=True)


def test_budget_exhaustion_is_recorded_not_fatal():
    # With a 2-cycle budget, K4 (7 cycles) and K4-e (3) go inconclusive while
    # K3 (1 cycle) still gets compared; the report invariant must still hold.
    r = verify_theorem(4, budget=2)
    r.validate()
    assert len(r.budget_exhausted) == 2
    assert r.agreements == 1 and r.in_hypothesis == 3
    assert r.passed and r.exit_code() == 2
