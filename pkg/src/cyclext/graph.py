"""Bitset-backed simple undirected graphs, standard constructions, and the graph6 codec.

Vertices are the integers 0..n-1 and adjacency is stored as one int bitmask
per vertex, so adjacency tests and neighbourhood intersections are O(1)
word operations.  Graphs are immutable after construction and safe to share
between workers.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

# Bitset cap.  All desk-scale analysis is n <= 16 and corpus work n <= 62
# (graph6 short form), so one machine word is plenty.  Raise it if you need
# bigger hosts; everything degrades gracefully because Python ints are wide.
MAX_VERTICES = 64


class BitsetCapError(ValueError):
    """Vertex count exceeds MAX_VERTICES."""


class Graph6Error(ValueError):
    """Base class for graph6 codec failures; carries the byte offset."""

    def __init__(self, message: str, offset: int | None = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class Graph6HeaderError(Graph6Error):
    """Malformed or unsupported graph6 size header."""


class Graph6TruncatedError(Graph6Error):
    """Record ends before the encoded edge bits do."""


class Graph6ByteError(Graph6Error):
    """Byte outside the printable graph6 range 63..126."""


class Graph6TrailingError(Graph6Error):
    """Garbage after a complete graph6 record."""


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        b = mask & -mask
        yield b.bit_length() - 1
        mask ^= b


class Graph:
    """Immutable simple undirected graph with adjacency bitsets.

    Invariants: u in adj[v] iff v in adj[u]; v never in adj[v]; all ids in
    0..n-1.  Do not mutate ``_adj`` after construction.
    """

    __slots__ = ("n", "_adj")

    def __init__(self, n: int, edges: Iterable[tuple[int, int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be >= 0")
        if n > MAX_VERTICES:
            raise BitsetCapError(f"n={n} exceeds the bitset cap MAX_VERTICES={MAX_VERTICES}")
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"loop at vertex {u} not allowed")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)

    @classmethod
    def _from_masks(cls, n: int, masks: tuple[int, ...]) -> "Graph":
        # Fast path for already-validated adjacency masks.
        g = object.__new__(cls)
        g.n = n
        g._adj = masks
        return g

    def adjacent(self, u: int, v: int) -> bool:
        return bool(self._adj[u] >> v & 1)

    def neighbors_mask(self, v: int) -> int:
        return self._adj[v]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        return self._adj[v].bit_count()

    def degrees(self) -> tuple[int, ...]:
        return tuple(m.bit_count() for m in self._adj)

    def edge_count(self) -> int:
        return sum(m.bit_count() for m in self._adj) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        for v in range(self.n):
            m = self._adj[v] >> (v + 1)
            for u in iter_bits(m):
                yield (v, u + v + 1)

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Return the graph with vertex v renamed perm[v]."""
        perm = tuple(perm)
        masks = [0] * self.n
        for v in range(self.n):
            nm = 0
            for u in iter_bits(self._adj[v]):
                nm |= 1 << perm[u]
            masks[perm[v]] = nm
        return Graph._from_masks(self.n, tuple(masks))

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count()})"


@dataclass(frozen=True)
class NamedGraph:
    """A graph together with a human-readable label such as "K4" or "P3xK2"."""

    graph: Graph
    label: str

    def __post_init__(self):
        if not self.label:
            raise ValueError("label must be nonempty")


def _check_vertex(g: Graph, v: int) -> None:
    if not (0 <= v < g.n):
        raise ValueError(f"vertex {v} out of range for n={g.n}")


def open_neighborhood(g: Graph, v: int) -> set[int]:
    """N(v): the set of vertices adjacent with v."""
    _check_vertex(g, v)
    return set(iter_bits(g._adj[v]))


def closed_neighborhood(g: Graph, v: int) -> set[int]:
    """N[v] = N(v) plus v itself."""
    _check_vertex(g, v)
    return set(iter_bits(g._adj[v] | (1 << v)))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """Subgraph induced by ``vertices``; returns (graph, old->new vertex map)."""
    vs = sorted(set(vertices))
    for v in vs:
        _check_vertex(g, v)
    mapping = {v: i for i, v in enumerate(vs)}
    masks = [0] * len(vs)
    for v in vs:
        nm = 0
        for u in iter_bits(g._adj[v]):
            if u in mapping:
                nm |= 1 << mapping[u]
        masks[mapping[v]] = nm
    return Graph._from_masks(len(vs), tuple(masks)), mapping


def connected_components(g: Graph, within: int | None = None) -> list[int]:
    """Vertex-set bitmasks of the connected components (restricted to ``within`` if given)."""
    todo = ((1 << g.n) - 1) if within is None else within
    comps = []
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g._adj[u]
            nxt &= todo & ~seen
            seen |= nxt
            frontier = nxt
        comps.append(seen)
        todo &= ~seen
    return comps


def component_count(g: Graph, within: int | None = None) -> int:
    return len(connected_components(g, within))


def is_connected(g: Graph) -> bool:
    """True when g has at most one connected component (vacuously true for n <= 1)."""
    return len(connected_components(g)) <= 1


# ---------------------------------------------------------------------------
# graph6 codec (undirected, simple; short header for n <= 62, 4-byte header
# for n <= 258047).  Records are newline-delimited, one graph per line.
# ---------------------------------------------------------------------------

_G6_PREFIX = b">>graph6<<"


def parse_graph6(record: bytes | str) -> Graph:
    """Decode one graph6 record into a Graph.

    Accepts an optional ``>>graph6<<`` prefix and a single trailing newline.
    Raises a Graph6Error subclass with the failing byte offset on malformed
    input, and BitsetCapError when the encoded order exceeds MAX_VERTICES.
    """
    if isinstance(record, str):
        data = record.encode("latin-1")
    else:
        data = bytes(record)
    pos = 0
    if data.startswith(_G6_PREFIX):
        pos = len(_G6_PREFIX)
    if pos >= len(data):
        raise Graph6HeaderError("empty graph6 record", pos)

    b0 = data[pos]
    if b0 == 126:  # '~': multi-byte size header
        if pos + 1 < len(data) and data[pos + 1] == 126:
            raise Graph6HeaderError("8-byte graph6 size header not supported", pos)
        if len(data) < pos + 4:
            raise Graph6TruncatedError("truncated graph6 size header", len(data))
        vals = []
        for k in range(1, 4):
            b = data[pos + k]
            if not (63 <= b <= 126):
                raise Graph6HeaderError("invalid byte in graph6 size header", pos + k)
            vals.append(b - 63)
        n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
        pos += 4
    elif 63 <= b0 <= 125:
        n = b0 - 63
        pos += 1
    else:
        raise Graph6HeaderError("invalid graph6 header byte", pos)

    if n > MAX_VERTICES:
        raise BitsetCapError(f"graph6 record encodes n={n}, above MAX_VERTICES={MAX_VERTICES}")

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) < pos + nbytes:
        raise Graph6TruncatedError("truncated graph6 edge bits", len(data))
    groups = []
    for k in range(nbytes):
        b = data[pos + k]
        if not (63 <= b <= 126):
            raise Graph6ByteError("byte outside graph6 range in edge bits", pos + k)
        groups.append(b - 63)
    end = pos + nbytes
    tail = data[end:]
    if tail not in (b"", b"\n", b"\r\n"):
        raise Graph6TrailingError("trailing bytes after graph6 record", end)

    masks = [0] * n
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if (groups[idx // 6] >> (5 - idx % 6)) & 1:
                masks[i] |= 1 << j
                masks[j] |= 1 << i
            idx += 1
    return Graph._from_masks(n, tuple(masks))


def write_graph6(g: Graph) -> bytes:
    """Encode a Graph as a canonical (minimal header, zero-padded) graph6 record."""
    n = g.n
    if n <= 62:
        out = bytearray([n + 63])
    elif n <= 258047:
        out = bytearray([126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)])
    else:
        raise ValueError(f"n={n} exceeds the supported graph6 size limit")
    acc = 0
    nb = 0
    for j in range(1, n):
        col = g._adj[j]
        for i in range(j):
            acc = (acc << 1) | ((col >> i) & 1)
            nb += 1
            if nb == 6:
                out.append(63 + acc)
                acc = 0
                nb = 0
    if nb:
        out.append(63 + (acc << (6 - nb)))
    return bytes(out)


# ---------------------------------------------------------------------------
# Standard constructions
# ---------------------------------------------------------------------------


def complete_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("complete_graph needs n >= 1")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycle_graph needs n >= 3")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Graph:
    if n < 1:
        raise ValueError("path_graph needs n >= 1")
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def star_graph(leaves: int) -> Graph:
    """K_{1,leaves}: vertex 0 joined to ``leaves`` independent vertices."""
    if leaves < 1:
        raise ValueError("star_graph needs at least one leaf")
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def complete_minus_edge(n: int) -> Graph:
    """K_n minus the edge {0,1}."""
    if n < 2:
        raise ValueError("complete_minus_edge needs n >= 2")
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n) if (i, j) != (0, 1)])


def join(a: Graph, b: Graph) -> Graph:
    """A + B: disjoint copies of A and B plus all edges between them."""
    n = a.n + b.n
    edges = list(a.edges())
    edges += [(u + a.n, v + a.n) for u, v in b.edges()]
    edges += [(u, v + a.n) for u in range(a.n) for v in range(b.n)]
    return Graph(n, edges)


def disjoint_union(a: Graph, b: Graph) -> Graph:
    edges = list(a.edges()) + [(u + a.n, v + a.n) for u, v in b.edges()]
    return Graph(a.n + b.n, edges)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    masks = tuple((full & ~g._adj[v]) & ~(1 << v) for v in range(g.n))
    return Graph._from_masks(g.n, masks)


def strong_product_path_k2(n: int) -> Graph:
    """P_n x| K_2, the ladder with both diagonals: vertex (i, j) -> 2*i + j."""
    if n < 1:
        raise ValueError("strong_product_path_k2 needs n >= 1")
    edges = []
    for i in range(n):
        edges.append((2 * i, 2 * i + 1))  # rung
        if i + 1 < n:
            edges.append((2 * i, 2 * i + 2))
            edges.append((2 * i + 1, 2 * i + 3))
            edges.append((2 * i, 2 * i + 3))
            edges.append((2 * i + 1, 2 * i + 2))
    return Graph(2 * n, edges)


def complete_tripartite_113() -> Graph:
    """K_{1,1,3} = K_2 + complement(K_3): the lone exceptional graph at max degree 4."""
    return join(complete_graph(2), Graph(3))


def standard_graphs() -> list[NamedGraph]:
    """Representative named graphs used throughout the tests and the CLI."""
    out = [
        NamedGraph(complete_graph(3), "K3"),
        NamedGraph(complete_graph(4), "K4"),
        NamedGraph(complete_graph(5), "K5"),
        NamedGraph(complete_minus_edge(4), "K4-e"),
        NamedGraph(cycle_graph(4), "C4"),
        NamedGraph(cycle_graph(5), "C5"),
        NamedGraph(cycle_graph(6), "C6"),
        NamedGraph(path_graph(4), "P4"),
        NamedGraph(star_graph(3), "K1,3"),
        NamedGraph(complete_tripartite_113(), "K1,1,3"),
        NamedGraph(join(complete_graph(3), Graph(4)), "K3+4K1"),
        NamedGraph(strong_product_path_k2(3), "P3xK2"),
        NamedGraph(strong_product_path_k2(4), "P4xK2"),
    ]
    return out
