"""Independent brute-force oracles the tests check the library against.

These deliberately share no search machinery with the package: the matcher
oracle enumerates every injective map, isomorphism tries every permutation,
and the small-order graph census walks every edge subset.
"""

from __future__ import annotations

from itertools import combinations, permutations

import numpy as np

from cyclext import Graph, PatternGraph


def naive_strongly_induced_py(host: Graph, pattern: PatternGraph) -> bool:
    """Reference matcher: literally try every injective map (small hosts only)."""
    pg = pattern.graph
    if pg.n > host.n:
        return False
    pairs = [(u, v) for u in range(pg.n) for v in range(u + 1, pg.n)]
    sealed = [p for p in range(pg.n) if p not in pattern.attachment]
    for img in permutations(range(host.n), pg.n):
        if any(host.degree(img[p]) != pg.degree(p) for p in sealed):
            continue
        if all(host.adjacent(img[u], img[v]) == pg.adjacent(u, v) for u, v in pairs):
            return True
    return False


def naive_induced_py(host: Graph, pattern_graph: Graph) -> bool:
    """Induced-subgraph existence without the degree seal."""
    k = pattern_graph.n
    if k > host.n:
        return False
    pairs = [(u, v) for u in range(k) for v in range(u + 1, k)]
    for img in permutations(range(host.n), k):
        if all(host.adjacent(img[u], img[v]) == pattern_graph.adjacent(u, v) for u, v in pairs):
            return True
    return False


class NaiveMatcher:
    """All-injective-maps matcher oracle, vectorized over the map axis.

    Semantically identical to naive_strongly_induced_py: every injective map
    is generated and tested against the full induced + degree-seal condition;
    numpy only batches the per-map checks.
    """

    def __init__(self):
        self._perms: dict[tuple[int, int], np.ndarray] = {}

    def _perm_array(self, host_n: int, pat_n: int) -> np.ndarray:
        key = (host_n, pat_n)
        if key not in self._perms:
            flat = np.fromiter(
                (v for p in permutations(range(host_n), pat_n) for v in p), dtype=np.int8)
            self._perms[key] = flat.reshape(-1, pat_n)
        return self._perms[key]

    def exists(self, host: Graph, pattern: PatternGraph) -> bool:
        pg = pattern.graph
        if pg.n > host.n:
            return False
        maps = self._perm_array(host.n, pg.n)
        adj = np.zeros((host.n, host.n), dtype=bool)
        for u, v in host.edges():
            adj[u, v] = adj[v, u] = True
        hdeg = np.array(host.degrees(), dtype=np.int16)
        pdeg = np.array(pg.degrees(), dtype=np.int16)
        alive = np.arange(len(maps))
        for p in range(pg.n):
            if p in pattern.attachment:
                continue
            alive = alive[hdeg[maps[alive, p]] == pdeg[p]]
            if alive.size == 0:
                return False
        for u in range(pg.n):
            for v in range(u + 1, pg.n):
                alive = alive[adj[maps[alive, u], maps[alive, v]] == pg.adjacent(u, v)]
                if alive.size == 0:
                    return False
        return True

    def induced_exists(self, host: Graph, pattern_graph: Graph) -> bool:
        """Same enumeration with the degree seal dropped."""
        return self.exists(host, PatternGraph("induced", pattern_graph,
                                              frozenset(range(pattern_graph.n)), ""))


def brute_isomorphic(a: Graph, b: Graph) -> bool:
    """Permutation-by-permutation isomorphism test (n <= 7 or so)."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False
    pairs = [(u, v) for u in range(a.n) for v in range(u + 1, a.n)]
    for perm in permutations(range(a.n)):
        if all(a.adjacent(u, v) == b.adjacent(perm[u], perm[v]) for u, v in pairs):
            return True
    return False


def brute_has_induced_claw(g: Graph) -> bool:
    """Direct search for an induced K_{1,3}: a center with three pairwise non-adjacent neighbours."""
    for c in range(g.n):
        nbrs = g.neighbors(c)
        for trio in combinations(nbrs, 3):
            if all(not g.adjacent(x, y) for x, y in combinations(trio, 2)):
                return True
    return False


def brute_connected_classes(n: int) -> list[Graph]:
    """All connected graphs on n vertices up to isomorphism, by walking every edge subset."""
    from cyclext import is_connected

    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    reps: list[Graph] = []
    for mask in range(1 << len(pairs)):
        edges = [pairs[i] for i in range(len(pairs)) if (mask >> i) & 1]
        g = Graph(n, edges)
        if not is_connected(g):
            continue
        if not any(brute_isomorphic(g, r) for r in reps):
            reps.append(g)
    return reps
