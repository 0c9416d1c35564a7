"""Exponential-time cycle oracles: hamiltonicity, spectra, extendability.

Everything in here is ground truth for the polynomial recognizer, so the
implementations favour obvious correctness over speed: canonical-rooted DFS
for cycle enumeration, plain backtracking with bitset pruning for
hamiltonian search, and an explicit per-length search for the spectrum.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graph import Graph, is_connected, iter_bits

DEFAULT_CYCLE_BUDGET = 10_000_000


class NotApplicableError(ValueError):
    """The operation's precondition is structurally unsatisfied (not a wrong answer)."""


class BudgetExceededError(RuntimeError):
    """Cycle enumeration visited more cycles than the configured budget."""

    def __init__(self, budget: int):
        super().__init__(f"cycle enumeration exceeded budget of {budget} cycles")
        self.budget = budget


def _canonical_cycle_seq(seq: tuple[int, ...]) -> tuple[int, ...]:
    # Rotate the minimum vertex to the front, then pick the direction whose
    # second entry is smaller.  Lexicographically minimal among all 2t forms.
    t = len(seq)
    i0 = seq.index(min(seq))
    fwd = tuple(seq[(i0 + k) % t] for k in range(t))
    bwd = tuple(seq[(i0 - k) % t] for k in range(t))
    return min(fwd, bwd)


@dataclass(frozen=True)
class Cycle:
    """A simple cycle in a host graph of order host_n, stored in canonical form."""

    host_n: int
    seq: tuple[int, ...]

    def __post_init__(self):
        seq = tuple(self.seq)
        if len(seq) < 3:
            raise ValueError("cycles have length >= 3")
        if len(set(seq)) != len(seq):
            raise ValueError("cycle vertices must be distinct")
        if any(not (0 <= v < self.host_n) for v in seq):
            raise ValueError(f"cycle vertex out of range for host_n={self.host_n}")
        object.__setattr__(self, "seq", _canonical_cycle_seq(seq))

    def __len__(self) -> int:
        return len(self.seq)

    def vertex_mask(self) -> int:
        m = 0
        for v in self.seq:
            m |= 1 << v
        return m

    def validate(self, g: Graph) -> None:
        """Raise ValueError unless this is a cycle of g."""
        if self.host_n != g.n:
            raise ValueError(f"cycle host order {self.host_n} != graph order {g.n}")
        t = len(self.seq)
        for k in range(t):
            u, v = self.seq[k], self.seq[(k + 1) % t]
            if not g.adjacent(u, v):
                raise ValueError(f"cycle edge ({u},{v}) missing from graph")


@dataclass(frozen=True)
class CycleSpectrum:
    girth: int | None
    circumference: int | None
    present: frozenset[int]


@dataclass(frozen=True)
class ExtendabilityReport:
    """Result of the full-cycle-extendability oracle, with a counterexample on failure."""

    ok: bool
    failed: str | None = None  # "triangle" | "cycle"
    vertex: int | None = None  # triangle-free vertex when failed == "triangle"
    cycle: Cycle | None = None  # non-extendable cycle when failed == "cycle"

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class Lemma1Violation:
    statement: int
    i: int  # cycle position of the first attachment vertex
    j: int  # cycle position of the second attachment vertex
    x: int  # shared off-cycle neighbour
    detail: str


def enumerate_cycles(g: Graph, budget: int | None = DEFAULT_CYCLE_BUDGET) -> Iterator[tuple[int, ...]]:
    """Yield every simple cycle of g exactly once, as a canonical vertex tuple.

    Canonical-rooted DFS: the smallest cycle vertex is the root and the
    direction is fixed by second vertex < last vertex, so no cycle is ever
    emitted twice.  Raises BudgetExceededError after ``budget`` emissions.
    """
    adj = g._adj
    emitted = 0
    for r in range(g.n):
        rbit = 1 << r
        higher = -1 << (r + 1)  # vertices strictly above the root
        path = [r]
        visited = rbit
        stack = [adj[r] & higher]
        while stack:
            m = stack[-1]
            if m:
                b = m & -m
                stack[-1] = m ^ b
                u = b.bit_length() - 1
                path.append(u)
                visited |= b
                if len(path) >= 3 and (adj[u] & rbit) and path[1] < u:
                    emitted += 1
                    if budget is not None and emitted > budget:
                        raise BudgetExceededError(budget)
                    yield tuple(path)
                stack.append(adj[u] & higher & ~visited)
            else:
                stack.pop()
                visited &= ~(1 << path.pop())


def _hamiltonian_cycle_in_mask(adj: tuple[int, ...], mask: int) -> tuple[int, ...] | None:
    """A hamiltonian cycle of the subgraph induced by ``mask``, or None."""
    k = mask.bit_count()
    if k < 3:
        return None
    for v in iter_bits(mask):
        if (adj[v] & mask).bit_count() < 2:
            return None
    start = (mask & -mask).bit_length() - 1
    sbit = 1 << start
    path = [start]

    def extend(v: int, visited: int) -> bool:
        if len(path) == k:
            return bool(adj[v] & sbit)
        rem = mask & ~visited
        vbit = 1 << v
        # Every unplaced vertex still needs two cycle neighbours drawn from
        # the unplaced set, the current endpoint, and the start vertex.
        for u in iter_bits(rem):
            if (adj[u] & ((rem & ~(1 << u)) | vbit | sbit)).bit_count() < 2:
                return False
        m = adj[v] & rem
        while m:
            b = m & -m
            m ^= b
            u = b.bit_length() - 1
            path.append(u)
            if extend(u, visited | b):
                return True
            path.pop()
        return False

    if extend(start, sbit):
        return tuple(path)
    return None


def is_hamiltonian(g: Graph) -> tuple[bool, Cycle | None]:
    """Spanning-cycle search; (True, witness) or (False, None)."""
    if g.n < 3:
        raise NotApplicableError(f"hamiltonicity needs order >= 3, got n={g.n}")
    if not is_connected(g):
        raise NotApplicableError("hamiltonicity is only assessed on connected graphs")
    seq = _hamiltonian_cycle_in_mask(g._adj, (1 << g.n) - 1)
    if seq is None:
        return False, None
    return True, Cycle(g.n, seq)


def has_cycle_of_length(g: Graph, length: int) -> bool:
    """Exact-length simple-cycle existence, decided by its own rooted DFS."""
    if length < 3 or length > g.n:
        return False
    adj = g._adj
    full = (1 << g.n) - 1
    for r in range(g.n - length + 1):
        rbit = 1 << r
        higher = full & (-1 << (r + 1))

        def dfs(v: int, visited: int, depth: int) -> bool:
            if depth == length:
                return bool(adj[v] & rbit)
            if (higher & ~visited).bit_count() < length - depth:
                return False
            m = adj[v] & higher & ~visited
            while m:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                if dfs(u, visited | b, depth + 1):
                    return True
            return False

        if dfs(r, rbit, 1):
            return True
    return False


def cycle_spectrum(g: Graph) -> CycleSpectrum:
    """The set of realized cycle lengths, each length decided independently."""
    if g.n < 3:
        raise NotApplicableError(f"cycle spectrum needs order >= 3, got n={g.n}")
    present = frozenset(length for length in range(3, g.n + 1) if has_cycle_of_length(g, length))
    if not present:
        return CycleSpectrum(None, None, present)
    return CycleSpectrum(min(present), max(present), present)


def is_weakly_pancyclic(g: Graph) -> bool:
    """True iff g has a cycle of every length between its girth and circumference."""
    spec = cycle_spectrum(g)
    if not spec.present:
        raise NotApplicableError("weak pancyclicity is undefined on acyclic graphs")
    return all(length in spec.present for length in range(spec.girth, spec.circumference + 1))


def is_pancyclic(g: Graph) -> bool:
    """True iff g has cycles of every length from 3 up to n."""
    if g.n < 3:
        return False
    spec = cycle_spectrum(g)
    return spec.present == frozenset(range(3, g.n + 1))


def is_cycle_extendable_at(g: Graph, c: Cycle) -> tuple[bool, Cycle | None]:
    """Does some cycle on V(C) plus one extra vertex exist?  (It need not reuse C's edges.)

    Exact: a (t+1)-cycle through V(C) and w is a hamiltonian cycle of the
    subgraph induced by V(C) + {w}, so we search those small hosts only.
    """
    c.validate(g)
    t = len(c)
    if t == g.n:
        raise NotApplicableError("hamiltonian cycles are exempt from extendability")
    adj = g._adj
    cmask = c.vertex_mask()
    outside = ((1 << g.n) - 1) & ~cmask
    for w in iter_bits(outside):
        if (adj[w] & cmask).bit_count() < 2:
            continue
        seq = _hamiltonian_cycle_in_mask(adj, cmask | (1 << w))
        if seq is not None:
            return True, Cycle(g.n, seq)
    return False, None


def is_fully_cycle_extendable(g: Graph, budget: int | None = DEFAULT_CYCLE_BUDGET) -> ExtendabilityReport:
    """Brute-force oracle: every vertex on a triangle and every nonhamiltonian cycle extendable.

    Checks the cheap triangle condition first, then cycles by increasing
    length, stopping at the first counterexample.
    """
    if g.n < 3:
        raise NotApplicableError(f"full cycle extendability needs order >= 3, got n={g.n}")
    if not is_connected(g):
        raise NotApplicableError("full cycle extendability is only assessed on connected graphs")
    adj = g._adj
    for v in range(g.n):
        nbhd = adj[v]
        if not any(adj[u] & nbhd for u in iter_bits(nbhd)):
            return ExtendabilityReport(False, failed="triangle", vertex=v)
    by_length: dict[int, list[tuple[int, ...]]] = {}
    for seq in enumerate_cycles(g, budget):
        if len(seq) < g.n:
            by_length.setdefault(len(seq), []).append(seq)
    for length in sorted(by_length):
        for seq in by_length[length]:
            c = Cycle(g.n, seq)
            ok, _ = is_cycle_extendable_at(g, c)
            if not ok:
                return ExtendabilityReport(False, failed="cycle", cycle=c)
    return ExtendabilityReport(True)


def check_lemma1(g: Graph, c: Cycle, *, verify_precondition: bool = True) -> list[Lemma1Violation]:
    """Evaluate the four non-extendable-cycle statements on every attachment pair.

    For distinct cycle positions i, j whose vertices share an off-cycle
    neighbour x: (1) j is not i+-1; (2) the successors are non-adjacent and
    the predecessors are non-adjacent; (3) if v_{i-1} ~ v_{i+1} then v_i is
    adjacent to neither v_{j-1} nor v_{j+1}; (4) if j = i+2 then v_{i+1} has
    no two consecutive cycle neighbours on the arc from v_{i+2} to v_i.
    An empty list means no statement is violated.
    """
    c.validate(g)
    if len(c) == g.n:
        raise ValueError("precondition: cycle must be nonhamiltonian")
    if verify_precondition:
        ok, _ = is_cycle_extendable_at(g, c)
        if ok:
            raise ValueError("precondition: cycle must be non-extendable")
    adj = g._adj
    seq = c.seq
    t = len(seq)
    cmask = c.vertex_mask()
    off = [adj[seq[k]] & ~cmask for k in range(t)]
    attach = [k for k in range(t) if off[k]]
    violations: list[Lemma1Violation] = []

    def vert(k: int) -> int:
        return seq[k % t]

    for a, i in enumerate(attach):
        for b, j in enumerate(attach):
            if i == j:
                continue
            common = off[i] & off[j]
            if not common:
                continue
            for x in iter_bits(common):
                if a < b:
                    if j == (i + 1) % t or j == (i - 1) % t:
                        violations.append(Lemma1Violation(1, i, j, x, "attachment vertices with a common off-cycle neighbour are consecutive"))
                    if g.adjacent(vert(i + 1), vert(j + 1)):
                        violations.append(Lemma1Violation(2, i, j, x, f"successors {vert(i+1)} ~ {vert(j+1)}"))
                    if g.adjacent(vert(i - 1), vert(j - 1)):
                        violations.append(Lemma1Violation(2, i, j, x, f"predecessors {vert(i-1)} ~ {vert(j-1)}"))
                if g.adjacent(vert(i - 1), vert(i + 1)):
                    if g.adjacent(vert(j - 1), vert(i)):
                        violations.append(Lemma1Violation(3, i, j, x, f"{vert(j-1)} ~ {vert(i)} despite chord at {vert(i)}"))
                    if g.adjacent(vert(j + 1), vert(i)):
                        violations.append(Lemma1Violation(3, i, j, x, f"{vert(j+1)} ~ {vert(i)} despite chord at {vert(i)}"))
                if j == (i + 2) % t:
                    w = vert(i + 1)
                    for step in range(1, t - 1):
                        p, q = vert(i + 1 + step), vert(i + 2 + step)
                        if g.adjacent(p, w) and g.adjacent(q, w):
                            violations.append(Lemma1Violation(4, i, j, x, f"{w} sees consecutive {p},{q} on the far arc"))
    return violations


def cut_set_nonhamiltonicity_witness(g: Graph, cut: set[int] | frozenset[int] | list[int] | tuple[int, ...]) -> bool:
    """True iff removing ``cut`` leaves more components than |cut| (certifies nonhamiltonicity).

    A hamiltonian cycle minus k >= 1 vertices has at most k arcs, and minus
    none is still connected, so the certificate threshold is max(|cut|, 1);
    an empty cut therefore only certifies an already-disconnected graph.
    """
    cut = set(cut)
    for v in cut:
        if not (0 <= v < g.n):
            raise ValueError(f"cut vertex {v} out of range for n={g.n}")
    cmask = 0
    for v in cut:
        cmask |= 1 << v
    keep = ((1 << g.n) - 1) & ~cmask
    comps = 0
    todo = keep
    while todo:
        start = todo & -todo
        seen = start
        frontier = start
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g._adj[u]
            nxt &= keep & ~seen
            seen |= nxt
            frontier = nxt
        comps += 1
        todo &= ~seen
    return comps > max(len(cut), 1)
