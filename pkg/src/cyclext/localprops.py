"""Per-vertex local structure: clustering coefficients, local connectivity, twins, claws.

Clustering coefficients are exact rationals throughout.  The >= 1/2 threshold
is a sharp hypothesis boundary, so nothing here ever touches floating point.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass
from fractions import Fraction

from .graph import Graph, iter_bits

ONE_HALF = Fraction(1, 2)


class UndefinedCoefficientError(ValueError):
    """xi(v) is undefined when deg(v) < 2; callers must not treat this as 0."""

    def __init__(self, vertex: int, degree: int):
        super().__init__(f"clustering coefficient undefined at vertex {vertex} (degree {degree} < 2)")
        self.vertex = vertex
        self.degree = degree


@dataclass(frozen=True)
class LocalProfile:
    """Everything local to one vertex: degree, edges inside N(v), xi, connectivity of <N(v)>."""

    vertex: int
    degree: int
    nbr_edges: int
    xi: Fraction | None  # None when degree < 2
    nbrhood_connected: bool


@dataclass(frozen=True)
class LocalConnectivity:
    ok: bool
    failing_vertex: int | None

    def __bool__(self) -> bool:
        return self.ok


def _scan_neighborhood(adj: tuple[int, ...], v: int) -> tuple[int, int, bool]:
    """One pass over <N(v)>: (degree, edges inside, connected-and-nonempty)."""
    nbhd = adj[v]
    deg = nbhd.bit_count()
    if deg == 0:
        return 0, 0, False
    twice_edges = 0
    for u in iter_bits(nbhd):
        twice_edges += (adj[u] & nbhd).bit_count()
    start = nbhd & -nbhd
    seen = start
    frontier = start
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= adj[u]
        nxt &= nbhd & ~seen
        seen |= nxt
        frontier = nxt
    return deg, twice_edges // 2, seen == nbhd


def local_profile(g: Graph, v: int) -> LocalProfile:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")
    deg, ne, conn = _scan_neighborhood(g._adj, v)
    xi = Fraction(ne, deg * (deg - 1) // 2) if deg >= 2 else None
    return LocalProfile(v, deg, ne, xi, conn)


def clustering_coefficient(g: Graph, v: int) -> Fraction:
    """xi(v) = edges inside <N(v)> over C(deg v, 2), exact."""
    p = local_profile(g, v)
    if p.xi is None:
        raise UndefinedCoefficientError(v, p.degree)
    return p.xi


def min_clustering_coefficient(g: Graph) -> Fraction:
    """xi(G): the smallest clustering coefficient over all vertices; loud on deg < 2."""
    if g.n == 0:
        raise UndefinedCoefficientError(0, 0)
    return min(clustering_coefficient(g, v) for v in range(g.n))


def is_locally_connected(g: Graph) -> LocalConnectivity:
    """True iff <N(v)> is connected and nonempty for every vertex v."""
    if g.n == 0:
        warnings.warn("is_locally_connected on the empty graph is vacuously true", stacklevel=2)
        return LocalConnectivity(True, None)
    for v in range(g.n):
        _, _, conn = _scan_neighborhood(g._adj, v)
        if not conn:
            return LocalConnectivity(False, v)
    return LocalConnectivity(True, None)


def are_true_twins(g: Graph, u: int, v: int) -> bool:
    """True iff N[u] = N[v]."""
    if u == v:
        raise ValueError("true twins must be distinct vertices")
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise ValueError(f"vertices ({u},{v}) out of range for n={g.n}")
    return (g._adj[u] | (1 << u)) == (g._adj[v] | (1 << v))


def is_claw_free(g: Graph) -> bool:
    """True iff no vertex has three pairwise non-adjacent neighbours (no induced K_{1,3})."""
    adj = g._adj
    for v in range(g.n):
        nbhd = adj[v]
        for a in iter_bits(nbhd):
            rest_a = nbhd & ~adj[a] & ~((1 << (a + 1)) - 1)  # non-neighbours of a above a
            for b in iter_bits(rest_a):
                if rest_a & ~adj[b] & ~((1 << (b + 1)) - 1):
                    return False
    return True


def degree_stats(g: Graph) -> tuple[int, int]:
    """(delta, Delta): minimum and maximum degree."""
    if g.n == 0:
        raise ValueError("degree_stats undefined on the empty graph")
    degs = g.degrees()
    return min(degs), max(degs)


def true_twin_classes(g: Graph) -> list[tuple[int, ...]]:
    """Partition of the vertex set by closed neighbourhood (classes of size >= 1)."""
    buckets: dict[int, list[int]] = {}
    for v in range(g.n):
        buckets.setdefault(g._adj[v] | (1 << v), []).append(v)
    return [tuple(vs) for vs in sorted(buckets.values())]
