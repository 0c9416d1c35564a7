"""The forbidden-structure catalog and the strongly induced subgraph matcher.

A pattern is strongly induced in a host when it appears as an induced
subgraph and every vertex outside its attachment set has host degree equal
to its pattern degree (no edges escape except through the attachment set).
The catalog is parsed from a frozen plain-text edge-list file and every
pattern must pass its self-checks before being served.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from importlib import resources

from .cycles import cut_set_nonhamiltonicity_witness, is_fully_cycle_extendable, is_hamiltonian, is_weakly_pancyclic
from .graph import Graph, is_connected, iter_bits
from .localprops import ONE_HALF, degree_stats, is_locally_connected, min_clustering_coefficient

PATTERN_NAMES = ("H1", "H2", "H3", "H4", "H5", "F1", "F2", "F3", "F4")

# Orders and maximum degrees the reconstructions must reproduce, and the cut
# set certifying nonhamiltonicity, described by the degrees of its vertices.
_EXPECTED = {
    "H1": (6, 5, (5,)),
    "H2": (7, 6, (6,)),
    "H3": (7, 6, (5, 6)),
    "H4": (8, 6, (6,)),
    "H5": (8, 6, (6,)),
    "F1": (7, 6, (6,)),
    "F2": (7, 5, (5,)),
    "F3": (9, 6, (6,)),
    "F4": (9, 6, (6,)),
}


class CatalogError(RuntimeError):
    """A catalog pattern failed parsing or one of its self-checks."""


@dataclass(frozen=True)
class PatternGraph:
    name: str
    graph: Graph
    attachment: frozenset[int]
    provenance: str


@dataclass(frozen=True)
class Embedding:
    """Injective pattern -> host vertex map witnessing a strongly induced copy."""

    pattern_name: str
    mapping: tuple[tuple[int, int], ...]  # (pattern vertex, host vertex), sorted

    def as_dict(self) -> dict[int, int]:
        return dict(self.mapping)

    def verify(self, host: Graph, pattern: PatternGraph) -> bool:
        """Recheck injectivity, induced adjacency, and the degree seal from scratch."""
        m = self.as_dict()
        pg = pattern.graph
        if sorted(m) != list(range(pg.n)):
            return False
        if len(set(m.values())) != pg.n:
            return False
        if any(not (0 <= v < host.n) for v in m.values()):
            return False
        for p in range(pg.n):
            for q in range(p + 1, pg.n):
                if host.adjacent(m[p], m[q]) != pg.adjacent(p, q):
                    return False
        for p in range(pg.n):
            if p not in pattern.attachment and host.degree(m[p]) != pg.degree(p):
                return False
        return True


@dataclass(frozen=True)
class Obstruction:
    """A named reason a graph is not fully cycle extendable, with its witness map."""

    name: str
    kind: str  # "isomorphism" | "strong_induced"
    mapping: tuple[tuple[int, int], ...]  # pattern/reference vertex -> host vertex


def _parse_stanza(lines: list[str], stanza_no: int) -> PatternGraph:
    fields: dict[str, str] = {}
    for ln in lines:
        key, _, value = ln.partition(":")
        fields[key.strip()] = value.strip()
    missing = {"name", "n", "edges", "attachment", "provenance"} - set(fields)
    if missing:
        raise CatalogError(f"stanza {stanza_no} missing fields {sorted(missing)}")
    name = fields["name"]
    n = int(fields["n"])
    edges = []
    for tok in fields["edges"].split():
        u, _, v = tok.partition("-")
        edges.append((int(u), int(v)))
    attachment = frozenset(int(t) for t in fields["attachment"].split())
    try:
        graph = Graph(n, edges)
    except ValueError as exc:
        raise CatalogError(f"pattern {name}: bad edge list: {exc}") from exc
    if any(not (0 <= v < n) for v in attachment):
        raise CatalogError(f"pattern {name}: attachment vertex out of range")
    return PatternGraph(name, graph, attachment, fields["provenance"])


def load_patterns() -> list[PatternGraph]:
    """Parse the frozen catalog file (no self-checks)."""
    text = resources.files(__package__).joinpath("catalog_data.txt").read_text()
    stanzas: list[list[str]] = [[]]
    for raw in text.splitlines():
        line = raw.strip()
        if line.startswith("#"):
            continue
        if not line:
            if stanzas[-1]:
                stanzas.append([])
            continue
        stanzas[-1].append(line)
    if not stanzas[-1]:
        stanzas.pop()
    patterns = [_parse_stanza(s, i) for i, s in enumerate(stanzas)]
    names = tuple(p.name for p in patterns)
    if names != PATTERN_NAMES:
        raise CatalogError(f"catalog names {names} != expected {PATTERN_NAMES}")
    return patterns


def self_check(patterns: list[PatternGraph]) -> list[str]:
    """Run every catalog self-check; returns one line per passed check.

    Raises CatalogError naming the pattern and the failed check otherwise.
    """
    lines: list[str] = []

    def require(cond: bool, pattern: str, what: str) -> None:
        if not cond:
            raise CatalogError(f"catalog self-check failed: {pattern}: {what}")
        lines.append(f"{pattern}: {what}")

    for p in patterns:
        g = p.graph
        exp_n, exp_delta, cut_degrees = _EXPECTED[p.name]
        require(is_connected(g), p.name, "connected")
        require(g.n == exp_n, p.name, f"order {exp_n}")
        delta, big_delta = degree_stats(g)
        require(big_delta == exp_delta, p.name, f"maximum degree {exp_delta}")
        if p.name.startswith("F"):
            require(not p.attachment, p.name, "empty attachment set")
        else:
            require(bool(p.attachment), p.name, "nonempty attachment set")
        cut = [v for v in range(g.n) if g.degree(v) in cut_degrees]
        require(cut_set_nonhamiltonicity_witness(g, cut), p.name,
                f"cut on degrees {cut_degrees} leaves more components than its size")
        ham, _ = is_hamiltonian(g)
        require(not ham, p.name, "nonhamiltonian by direct search")
        require(is_weakly_pancyclic(g), p.name, "weakly pancyclic")

    for name in ("H1", "H2", "H3"):
        p = next(q for q in patterns if q.name == name)
        g = p.graph
        require(bool(is_locally_connected(g)), name, "locally connected")
        require(degree_stats(g)[0] >= 2, name, "minimum degree >= 2")
        require(min_clustering_coefficient(g) >= ONE_HALF, name, "min clustering coefficient >= 1/2")
        require(not is_fully_cycle_extendable(g).ok, name, "not fully cycle extendable")
    return lines


@lru_cache(maxsize=1)
def build_catalog() -> tuple[PatternGraph, ...]:
    """The nine validated patterns; self-checks run once per process."""
    patterns = load_patterns()
    self_check(patterns)
    return tuple(patterns)


# ---------------------------------------------------------------------------
# Embedding search
# ---------------------------------------------------------------------------


def _search(host_adj: tuple[int, ...], pat_adj: tuple[int, ...], cand: list[int]) -> list[int] | None:
    """Backtracking over injective maps with per-vertex candidate bitmasks.

    Adjacency AND non-adjacency to already-placed vertices must match the
    pattern exactly (induced).  Returns pattern-indexed host vertices.
    """
    k = len(pat_adj)
    # Most-constrained order: prefer vertices with many already-ordered
    # neighbours, then high degree (ties broken by index for determinism).
    order: list[int] = []
    chosen: set[int] = set()
    for _ in range(k):
        best = max(
            (p for p in range(k) if p not in chosen),
            key=lambda p: (sum((pat_adj[p] >> q) & 1 for q in order), pat_adj[p].bit_count(), -p),
        )
        order.append(best)
        chosen.add(best)
    img = [-1] * k

    def place(level: int, used: int) -> bool:
        if level == k:
            return True
        p = order[level]
        m = cand[p] & ~used
        for q in order[:level]:
            if (pat_adj[p] >> q) & 1:
                m &= host_adj[img[q]]
            else:
                m &= ~host_adj[img[q]]
            if not m:
                return False
        while m:
            b = m & -m
            m ^= b
            img[p] = b.bit_length() - 1
            if place(level + 1, used | b):
                return True
        img[p] = -1
        return False

    return img if place(0, 0) else None


def are_isomorphic(a: Graph, b: Graph) -> tuple[bool, dict[int, int] | None]:
    """Exact isomorphism with degree and neighbour-degree-multiset pruning."""
    if a.n != b.n or a.edge_count() != b.edge_count():
        return False, None
    if a.n == 0:
        return True, {}

    def invariants(g: Graph) -> list[tuple[int, tuple[int, ...]]]:
        degs = g.degrees()
        return [(degs[v], tuple(sorted(degs[u] for u in iter_bits(g._adj[v])))) for v in range(g.n)]

    ia, ib = invariants(a), invariants(b)
    if sorted(ia) != sorted(ib):
        return False, None
    cand = []
    for v in range(a.n):
        m = 0
        for w in range(b.n):
            if ia[v] == ib[w]:
                m |= 1 << w
        if not m:
            return False, None
        cand.append(m)
    img = _search(b._adj, a._adj, cand)
    if img is None:
        return False, None
    return True, {v: img[v] for v in range(a.n)}


def find_strongly_induced(host: Graph, pattern: PatternGraph) -> Embedding | None:
    """Exhaustive search for a strongly induced copy of ``pattern`` in ``host``.

    The degree seal on non-attachment vertices is applied the moment such a
    vertex is placed, via the candidate masks.
    """
    pg = pattern.graph
    if pg.n > host.n:
        return None
    hdeg = host.degrees()
    cand = []
    for p in range(pg.n):
        d = pg.degree(p)
        if p in pattern.attachment:
            m = sum(1 << v for v in range(host.n) if hdeg[v] >= d)
        else:
            m = sum(1 << v for v in range(host.n) if hdeg[v] == d)
        if not m:
            return None
        cand.append(m)
    img = _search(host._adj, pg._adj, cand)
    if img is None:
        return None
    return Embedding(pattern.name, tuple((p, img[p]) for p in range(pg.n)))


def contains_forbidden(host: Graph, catalog: tuple[PatternGraph, ...] | None = None) -> Obstruction | None:
    """First obstruction found: isomorphism to an F-pattern, then a strongly induced H-pattern."""
    patterns = catalog if catalog is not None else build_catalog()
    by_name = {p.name: p for p in patterns}
    for name in ("F1", "F2", "F3", "F4"):
        ok, mapping = are_isomorphic(host, by_name[name].graph)
        if ok:
            assert mapping is not None
            # are_isomorphic maps host -> pattern; report pattern -> host.
            pattern_to_host = tuple(sorted((pv, hv) for hv, pv in mapping.items()))
            return Obstruction(name, "isomorphism", pattern_to_host)
    for name in ("H1", "H2", "H3", "H4", "H5"):
        emb = find_strongly_induced(host, by_name[name])
        if emb is not None:
            return Obstruction(name, "strong_induced", emb.mapping)
    return None
