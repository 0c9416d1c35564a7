"""recognizer: hypothesis gating, classification, and the weak-pancyclicity predictor."""

from unittest import mock

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import cyclext as cx
from cyclext.harness import canonical_form, enumerate_connected_graphs
from cyclext.recognizer import K2_PLUS_K3BAR, VERDICT_OBSTRUCTED, VERDICT_OUT_OF_SCOPE


def test_check_hypotheses_examples():
    assert cx.check_hypotheses(cx.complete_graph(4)).all_ok
    hc = cx.check_hypotheses(cx.cycle_graph(5))
    assert not hc.locally_connected and hc.connected and hc.min_degree_ok
    assert "locally_connected" in hc.failed_fields()
    hc = cx.check_hypotheses(cx.complete_graph(8))
    assert not hc.delta_ok and hc.locally_connected
    hc = cx.check_hypotheses(cx.Graph(0))
    assert not hc.all_ok
    hc = cx.check_hypotheses(cx.path_graph(3))
    assert not hc.min_degree_ok and not hc.xi_ok


def test_classify_small_degree_graphs():
    for g in (cx.complete_graph(3), cx.complete_graph(4), cx.complete_minus_edge(4)):
        assert cx.classify(g).is_fully_cycle_extendable


def test_classify_k113_obstructed():
    c = cx.classify(cx.complete_tripartite_113())
    assert c.verdict == VERDICT_OBSTRUCTED
    assert c.obstruction.name == K2_PLUS_K3BAR and c.obstruction.kind == "isomorphism"


def test_classify_catalog_patterns(pattern):
    for name in ("H1", "H2", "H3", "H4", "F1", "F2", "F3"):
        c = cx.classify(pattern[name].graph)
        assert c.verdict == VERDICT_OBSTRUCTED and c.obstruction.name == name, name
    # H5 and F4 fail the clustering hypothesis as standalone graphs: a sealed
    # degree-6 vertex keeps xi = 7/15 in any host, so these two catalog
    # clauses can never fire inside the hypothesis class.
    for name in ("H5", "F4"):
        c = cx.classify(pattern[name].graph)
        assert c.verdict == VERDICT_OUT_OF_SCOPE and c.failed == ("xi_ok",), name


def test_classify_out_of_scope_is_a_verdict_not_an_error():
    c = cx.classify(cx.cycle_graph(5))
    assert c.verdict == VERDICT_OUT_OF_SCOPE and "locally_connected" in c.failed


def test_obstruction_witnesses_reverify(catalog, pattern):
    for name in ("H1", "H2", "H3", "H4"):
        host = pattern[name].graph
        c = cx.classify(host)
        emb = cx.Embedding(c.obstruction.name, c.obstruction.mapping)
        assert emb.verify(host, pattern[c.obstruction.name])
    c = cx.classify(pattern["F1"].graph)
    m = dict(c.obstruction.mapping)
    ref = pattern["F1"].graph
    assert all(ref.adjacent(u, v) == pattern["F1"].graph.adjacent(m[u], m[v])
               for u in range(7) for v in range(u + 1, 7))


@given(data=st.data())
@settings(max_examples=60, deadline=None)
def test_classify_is_isomorphism_invariant(pattern, data):
    pool = [pattern["H1"].graph, pattern["H3"].graph, pattern["F2"].graph,
            cx.complete_tripartite_113(), cx.complete_graph(4),
            cx.strong_product_path_k2(3), cx.cycle_graph(6)]
    g = data.draw(st.sampled_from(pool))
    perm = data.draw(st.permutations(list(range(g.n))))
    relabeled = g.relabel(tuple(perm))
    a, b = cx.classify(g), cx.classify(relabeled)
    assert a.verdict == b.verdict
    if a.obstruction is not None:
        assert a.obstruction.name == b.obstruction.name


def test_small_delta_branch_census():
    # Within hypothesis, max degree <= 3 admits exactly K3, K4, K4-e.
    expected = {canonical_form(cx.complete_graph(3)),
                canonical_form(cx.complete_graph(4)),
                canonical_form(cx.complete_minus_edge(4))}
    seen = set()
    for n in range(3, 9):
        for g in enumerate_connected_graphs(n):
            if cx.check_hypotheses(g).all_ok and max(g.degrees()) <= 3:
                seen.add(canonical_form(g))
                assert cx.classify(g).is_fully_cycle_extendable
    assert seen == expected


def test_internal_contradiction_aborts_loudly():
    with mock.patch("cyclext.recognizer.are_isomorphic", return_value=(False, None)):
        with pytest.raises(cx.InternalContradictionError):
            cx.classify(cx.complete_graph(3))


def test_predict_weakly_pancyclic(pattern):
    for name in ("H1", "H2", "H3", "F1", "F3"):
        g = pattern[name].graph
        assert cx.predict_weakly_pancyclic(g) is True
        assert cx.is_weakly_pancyclic(g) is True
    # The order >= 3 components relaxation: disconnected but each side rich.
    both = cx.disjoint_union(cx.complete_graph(3), cx.complete_graph(4))
    assert cx.predict_weakly_pancyclic(both) is True
    assert cx.is_weakly_pancyclic(both) is True


def test_predict_weakly_pancyclic_out_of_scope(pattern):
    with pytest.raises(cx.OutOfScopeError) as e:
        cx.predict_weakly_pancyclic(cx.cycle_graph(5))
    assert "locally_connected" in e.value.failed
    with pytest.raises(cx.OutOfScopeError):
        cx.predict_weakly_pancyclic(cx.disjoint_union(cx.complete_graph(3), cx.complete_graph(2)))
    for name in ("H5", "F4"):
        with pytest.raises(cx.OutOfScopeError) as e:
            cx.predict_weakly_pancyclic(pattern[name].graph)
        assert "xi" in e.value.failed
        # The oracle itself still confirms these graphs weakly pancyclic.
        assert cx.is_weakly_pancyclic(pattern[name].graph)
