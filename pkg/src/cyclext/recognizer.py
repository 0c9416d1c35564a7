"""Polynomial-time classification of hypothesis-class graphs.

A graph qualifies for classification when it is connected, of order >= 3,
locally connected, has minimum degree >= 2, maximum degree <= 6, and minimum
clustering coefficient >= 1/2.  Within that class the verdict is either
"fully cycle extendable" or a named obstruction with a verifiable witness.
The recognizer never calls the exponential cycle oracles; that separation is
the whole point of the module.
"""

from __future__ import annotations

from dataclasses import dataclass

from .catalog import Obstruction, are_isomorphic, contains_forbidden
from .graph import (
    Graph,
    complete_graph,
    complete_minus_edge,
    complete_tripartite_113,
    connected_components,
    is_connected,
)
from .localprops import ONE_HALF, UndefinedCoefficientError, degree_stats, is_locally_connected, min_clustering_coefficient

VERDICT_FULLY_CYCLE_EXTENDABLE = "fully_cycle_extendable"
VERDICT_OBSTRUCTED = "obstructed"
VERDICT_OUT_OF_SCOPE = "out_of_scope"

K2_PLUS_K3BAR = "K2+K3bar"  # the lone obstruction at maximum degree 4


class InternalContradictionError(RuntimeError):
    """The degree <= 3 classification was contradicted; implementation or catalog bug."""


class OutOfScopeError(ValueError):
    """A precondition field failed; carries the failed field names."""

    def __init__(self, failed: tuple[str, ...]):
        super().__init__(f"graph outside the hypothesis class: failed {list(failed)}")
        self.failed = failed


@dataclass(frozen=True)
class HypothesisCheck:
    """Each hypothesis field, computed independently of the others."""

    connected: bool
    locally_connected: bool
    xi_ok: bool  # min clustering coefficient >= 1/2
    delta_ok: bool  # maximum degree <= 6
    min_degree_ok: bool  # minimum degree >= 2
    order_ok: bool  # n >= 3

    @property
    def all_ok(self) -> bool:
        return all((self.connected, self.locally_connected, self.xi_ok,
                    self.delta_ok, self.min_degree_ok, self.order_ok))

    def failed_fields(self) -> tuple[str, ...]:
        return tuple(name for name in
                     ("connected", "locally_connected", "xi_ok", "delta_ok", "min_degree_ok", "order_ok")
                     if not getattr(self, name))


@dataclass(frozen=True)
class Classification:
    verdict: str
    obstruction: Obstruction | None = None
    failed: tuple[str, ...] = ()

    @property
    def is_fully_cycle_extendable(self) -> bool:
        return self.verdict == VERDICT_FULLY_CYCLE_EXTENDABLE

    def to_json_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.name
            out["witness_kind"] = self.obstruction.kind
            out["witness_map"] = [list(pair) for pair in self.obstruction.mapping]
        if self.failed:
            out["failed"] = list(self.failed)
        return out


def check_hypotheses(g: Graph) -> HypothesisCheck:
    """Evaluate every hypothesis field; failures are data, never errors."""
    n = g.n
    if n == 0:
        return HypothesisCheck(False, False, False, False, False, False)
    connected = is_connected(g)
    locally_connected = bool(is_locally_connected(g))
    delta, big_delta = degree_stats(g)
    try:
        xi_ok = min_clustering_coefficient(g) >= ONE_HALF
    except UndefinedCoefficientError:
        xi_ok = False
    return HypothesisCheck(
        connected=connected,
        locally_connected=locally_connected,
        xi_ok=xi_ok,
        delta_ok=big_delta <= 6,
        min_degree_ok=delta >= 2,
        order_ok=n >= 3,
    )


def _iso_obstruction(g: Graph, reference: Graph, name: str) -> Obstruction | None:
    ok, mapping = are_isomorphic(g, reference)
    if not ok:
        return None
    assert mapping is not None
    return Obstruction(name, "isomorphism", tuple(sorted((pv, hv) for hv, pv in mapping.items())))


def classify(g: Graph) -> Classification:
    """Theorem-backed verdict for a hypothesis-class graph.

    Max degree 2 or 3 admits only K3, K4 and K4-e (asserted, not assumed);
    max degree 4 is fully cycle extendable unless isomorphic to K2+K3bar;
    max degree 5 or 6 is fully cycle extendable iff no catalog obstruction
    matches.  Out-of-hypothesis graphs get an out-of-scope verdict.
    """
    hc = check_hypotheses(g)
    if not hc.all_ok:
        return Classification(VERDICT_OUT_OF_SCOPE, failed=hc.failed_fields())
    _, big_delta = degree_stats(g)
    if big_delta <= 3:
        references = [complete_graph(3)] if big_delta == 2 else [complete_graph(4), complete_minus_edge(4)]
        if not any(are_isomorphic(g, ref)[0] for ref in references):
            raise InternalContradictionError(
                f"hypothesis-class graph with max degree {big_delta} is none of the admissible small graphs")
        return Classification(VERDICT_FULLY_CYCLE_EXTENDABLE)
    if big_delta == 4:
        obs = _iso_obstruction(g, complete_tripartite_113(), K2_PLUS_K3BAR)
        if obs is not None:
            return Classification(VERDICT_OBSTRUCTED, obstruction=obs)
        return Classification(VERDICT_FULLY_CYCLE_EXTENDABLE)
    obs = contains_forbidden(g)
    if obs is not None:
        return Classification(VERDICT_OBSTRUCTED, obstruction=obs)
    return Classification(VERDICT_FULLY_CYCLE_EXTENDABLE)


def predict_weakly_pancyclic(g: Graph) -> bool:
    """Unconditionally True under its preconditions; exists to be falsified by the oracle.

    Preconditions: every component of order >= 3, locally connected, minimum
    degree >= 2, maximum degree between 2 and 6, min clustering >= 1/2.
    """
    failed = []
    comps = connected_components(g)
    if not comps or any(c.bit_count() < 3 for c in comps):
        failed.append("component_order")
    if g.n == 0 or not is_locally_connected(g):
        failed.append("locally_connected")
    if g.n:
        delta, big_delta = degree_stats(g)
        if delta < 2:
            failed.append("min_degree")
        if not (2 <= big_delta <= 6):
            failed.append("max_degree")
        try:
            if min_clustering_coefficient(g) < ONE_HALF:
                failed.append("xi")
        except UndefinedCoefficientError:
            failed.append("xi")
    if failed:
        raise OutOfScopeError(tuple(failed))
    return True
