"""Simple undirected graphs on vertices 0..n-1 with bitmask adjacency.

Every vertex stores its neighbourhood as one Python int bitmask, so degree,
cut and common-neighbour queries are popcounts. Python ints grow as needed,
which lets the same representation serve both the small base graphs and the
much larger token graphs built on top of them. Graphs are immutable: every
editing operation returns a new value, so instances can be shared freely.

Relabeling rules (used by all shrinking operations): surviving vertices keep
their relative order and are compacted downward; contracting an edge merges
the endpoints into min(u, v).
"""

from __future__ import annotations

from .errors import NoSuchVertex, NotAnEdge, SizeLimitExceeded, UnsupportedPattern

CIRCUMFERENCE_MAX_N = 16


def normalize_edge(u: int, v: int) -> tuple[int, int]:
    """Return the endpoint pair ordered as (min, max); loops are rejected."""
    if u == v:
        raise NotAnEdge(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


def _bits(mask: int):
    """Yield the set bit positions of `mask` in ascending order."""
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def _drop_bit(mask: int, v: int) -> int:
    """Remove bit position v from mask, shifting higher bits down by one."""
    low = mask & ((1 << v) - 1)
    return low | ((mask >> (v + 1)) << v)


class Graph:
    """Immutable simple undirected graph."""

    __slots__ = ("n", "m", "_adj")

    def __init__(self, n: int, edges=()):
        if n < 0:
            raise ValueError(f"vertex count must be non-negative, got {n}")
        adj = [0] * n
        for u, v in edges:
            u, v = normalize_edge(u, v)
            if u < 0 or v >= n:
                raise NoSuchVertex(f"edge ({u},{v}) outside 0..{n - 1}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self._adj = tuple(adj)
        self.m = sum(a.bit_count() for a in adj) // 2

    @classmethod
    def _from_adj(cls, adj: list[int]) -> "Graph":
        # Trusted fast path for internal ops: masks must already be symmetric.
        g = object.__new__(cls)
        g.n = len(adj)
        g._adj = tuple(adj)
        g.m = sum(a.bit_count() for a in adj) // 2
        return g

    # -- basic queries -------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise NoSuchVertex(f"vertex {v} outside 0..{self.n - 1}")

    def adjacency_mask(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v]

    def neighbors(self, v: int) -> list[int]:
        self._check_vertex(v)
        return list(_bits(self._adj[v]))

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self._adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [a.bit_count() for a in self._adj]

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees()))

    def max_degree(self) -> int:
        return max(self.degrees(), default=0)

    def min_degree(self) -> int:
        return min(self.degrees(), default=0)

    def has_edge(self, u: int, v: int) -> bool:
        u, v = normalize_edge(u, v)
        self._check_vertex(u)
        self._check_vertex(v)
        return bool(self._adj[u] >> v & 1)

    def edges(self) -> list[tuple[int, int]]:
        """All edges as (u, v) with u < v, in lexicographic order."""
        out = []
        for u in range(self.n):
            higher = self._adj[u] >> (u + 1)
            for off in _bits(higher):
                out.append((u, u + 1 + off))
        return out

    def is_regular(self) -> bool:
        degs = self.degrees()
        return not degs or min(degs) == max(degs)

    def is_complete(self) -> bool:
        return self.m == self.n * (self.n - 1) // 2

    def is_empty_graph(self) -> bool:
        return self.m == 0

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self._adj == other._adj

    def __hash__(self) -> int:
        return hash((self.n, self._adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"

    # -- editing operations (all return new graphs) --------------------

    def with_edge(self, u: int, v: int) -> "Graph":
        """Add the edge (u, v); it must not be present yet."""
        u, v = normalize_edge(u, v)
        self._check_vertex(u)
        self._check_vertex(v)
        if self._adj[u] >> v & 1:
            raise NotAnEdge(f"edge ({u},{v}) already present")
        adj = list(self._adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph._from_adj(adj)

    def delete_edge(self, u: int, v: int) -> "Graph":
        u, v = normalize_edge(u, v)
        self._check_vertex(u)
        self._check_vertex(v)
        if not self._adj[u] >> v & 1:
            raise NotAnEdge(f"edge ({u},{v}) not present")
        adj = list(self._adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph._from_adj(adj)

    def delete_vertex(self, v: int) -> "Graph":
        self._check_vertex(v)
        adj = [
            _drop_bit(self._adj[x] & ~(1 << v), v)
            for x in range(self.n)
            if x != v
        ]
        return Graph._from_adj(adj)

    def contract_edge(self, u: int, v: int) -> "Graph":
        """Contract the edge (u, v), merging both ends into min(u, v)."""
        u, v = normalize_edge(u, v)
        if not self.has_edge(u, v):
            raise NotAnEdge(f"cannot contract absent edge ({u},{v})")
        merged = (self._adj[u] | self._adj[v]) & ~((1 << u) | (1 << v))
        adj = []
        for x in range(self.n):
            if x == v:
                continue
            row = merged if x == u else self._adj[x]
            if row >> v & 1:
                row = (row & ~(1 << v)) | (1 << u)
            row &= ~(1 << x)
            adj.append(_drop_bit(row, v))
        return Graph._from_adj(adj)

    def complement(self) -> "Graph":
        full = (1 << self.n) - 1
        adj = [(~self._adj[v] & full) & ~(1 << v) for v in range(self.n)]
        return Graph._from_adj(adj)

    def induced_subgraph(self, vertices) -> "Graph":
        """Subgraph induced on `vertices`, relabeled in ascending order."""
        keep = sorted(set(vertices))
        for v in keep:
            self._check_vertex(v)
        pos = {v: i for i, v in enumerate(keep)}
        adj = [0] * len(keep)
        for v in keep:
            for w in _bits(self._adj[v]):
                if w in pos:
                    adj[pos[v]] |= 1 << pos[w]
        return Graph._from_adj(adj)

    # -- connectivity ---------------------------------------------------

    def component_mask(self, v: int) -> int:
        """Bitmask of the connected component containing v."""
        self._check_vertex(v)
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= self._adj[w]
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        return self.component_mask(0) == (1 << self.n) - 1

    def connected_components(self) -> list[int]:
        """Component bitmasks, ordered by smallest member."""
        out = []
        left = (1 << self.n) - 1
        while left:
            v = (left & -left).bit_length() - 1
            comp = self.component_mask(v)
            out.append(comp)
            left &= ~comp
        return out

    def is_forest(self) -> bool:
        # n - (#components) edges is the tree bound; equality means no cycle.
        return self.m == self.n - len(self.connected_components())

    def is_tree(self) -> bool:
        return self.n >= 1 and self.m == self.n - 1 and self.is_connected()

    def is_path_graph(self) -> bool:
        if self.n == 1:
            return self.m == 0
        return (
            self.is_tree()
            and self.max_degree() <= 2
        )

    def is_cycle_graph(self) -> bool:
        return (
            self.n >= 3
            and self.m == self.n
            and self.is_connected()
            and self.degree_multiset() == (2,) * self.n
        )

    def is_star_graph(self) -> bool:
        """True for K_{1,n-1} with n >= 2 (one hub, n-1 leaves)."""
        if self.n < 2 or self.m != self.n - 1:
            return False
        return self.degree_multiset() == (1,) * (self.n - 1) + (self.n - 1,)


# ---------------------------------------------------------------------------
# named constructors


def empty_graph(n: int) -> Graph:
    return Graph(n)


def complete_graph(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs at least 3 vertices, got {n}")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def star_graph(n: int) -> Graph:
    """K_{1,n-1}: hub 0 joined to all of 1..n-1."""
    if n < 1:
        raise ValueError("star needs at least 1 vertex")
    return Graph(n, [(0, i) for i in range(1, n)])


def complete_bipartite_graph(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + w) for u in range(a) for w in range(b)])


def octahedron_graph() -> Graph:
    # K_{2,2,2}: all pairs except the three antipodal ones.
    g = complete_graph(6)
    for u, v in ((0, 3), (1, 4), (2, 5)):
        g = g.delete_edge(u, v)
    return g


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


# ---------------------------------------------------------------------------
# cycles


def _two_core(g: Graph) -> int:
    """Bitmask of the 2-core (every cycle lives inside it)."""
    alive = (1 << g.n) - 1
    changed = True
    while changed:
        changed = False
        for v in _bits(alive):
            if (g._adj[v] & alive).bit_count() < 2:
                alive &= ~(1 << v)
                changed = True
    return alive


def _longest_cycle_from(g: Graph, start: int, allowed: int, target: int | None) -> int:
    """Longest cycle through `start` using only vertices in `allowed`.

    Vertices below `start` are excluded by the caller, so each cycle is
    counted once, rooted at its minimum vertex. If `target` is given, the
    search stops early once a cycle of at least that many vertices is found.
    """
    adj = g._adj
    best = 0
    start_bit = 1 << start
    # stack entries: (vertex, visited mask, path length in edges)
    stack = [(start, start_bit, 0)]
    while stack:
        v, visited, length = stack.pop()
        nbrs = adj[v] & allowed
        if length >= 2 and nbrs & start_bit:
            if length + 1 > best:
                best = length + 1
                if target is not None and best >= target:
                    return best
        for w in _bits(nbrs & ~visited):
            stack.append((w, visited | (1 << w), length + 1))
    return best


def circumference(g: Graph) -> int:
    """Length of a longest cycle (0 if acyclic). Exhaustive; capped size."""
    if g.n > CIRCUMFERENCE_MAX_N:
        raise SizeLimitExceeded(
            f"circumference is exhaustive and capped at n <= {CIRCUMFERENCE_MAX_N}"
        )
    core = _two_core(g)
    best = 0
    for s in _bits(core):
        allowed = core & ~((1 << s) - 1)
        best = max(best, _longest_cycle_from(g, s, allowed, None))
        if best == core.bit_count():
            break
    return best


def has_cycle_of_length_at_least(g: Graph, length: int) -> bool:
    """Early-exit test for a cycle with >= `length` vertices (no size cap)."""
    core = _two_core(g)
    if core.bit_count() < length:
        return False
    for s in _bits(core):
        allowed = core & ~((1 << s) - 1)
        if allowed.bit_count() < length:
            continue
        if _longest_cycle_from(g, s, allowed, length) >= length:
            return True
    return False


# ---------------------------------------------------------------------------
# fixed-pattern subgraph containment

_PATTERN_NAMES = ("P3", "K13", "P7")


def _pattern_kind(pattern: Graph) -> str:
    """Identify the pattern up to isomorphism, or reject it."""
    degs = pattern.degree_multiset()
    if pattern.n == 3 and degs == (1, 1, 2):
        return "P3"
    if pattern.n == 4 and degs == (1, 1, 1, 3):
        return "K13"
    if pattern.n == 7 and degs == (1, 1, 2, 2, 2, 2, 2) and pattern.is_connected():
        return "P7"
    raise UnsupportedPattern(
        f"pattern containment is only supported for {_PATTERN_NAMES}"
    )


def _pattern_order(pattern: Graph) -> tuple[list[int], list[list[int]]]:
    """BFS order of the (connected) pattern plus earlier-neighbour lists."""
    order = [0]
    seen = {0}
    i = 0
    while i < len(order):
        for w in pattern.neighbors(order[i]):
            if w not in seen:
                seen.add(w)
                order.append(w)
        i += 1
    pos = {v: i for i, v in enumerate(order)}
    earlier = [
        [pos[w] for w in pattern.neighbors(v) if pos[w] < i]
        for i, v in enumerate(order)
    ]
    return order, earlier


def _iter_embeddings(g: Graph, pattern: Graph, banned: int = 0):
    """Yield vertex bitmasks of subgraph embeddings of `pattern` in `g`.

    Non-induced: pattern edges must map to edges, extra edges are fine.
    Distinct assignments mapping onto the same vertex set are deduplicated.
    """
    order, earlier = _pattern_order(pattern)
    p = len(order)
    pdeg = [pattern.degree(v) for v in order]
    avail0 = ((1 << g.n) - 1) & ~banned
    seen_masks = set()
    assigned = [0] * p  # bit of the g-vertex assigned to order position i

    def extend(i: int, used: int):
        if i == p:
            if used not in seen_masks:
                seen_masks.add(used)
                yield used
            return
        if earlier[i]:
            cands = avail0
            for j in earlier[i]:
                cands &= g._adj[assigned[j].bit_length() - 1]
            cands &= ~used
        else:
            cands = avail0 & ~used
        for v in _bits(cands):
            if g._adj[v].bit_count() < pdeg[i]:
                continue
            assigned[i] = 1 << v
            yield from extend(i + 1, used | (1 << v))

    yield from extend(0, 0)


def has_subgraph(g: Graph, pattern: Graph, banned: int = 0) -> bool:
    """True iff `g` contains `pattern` as a (not necessarily induced) subgraph."""
    _pattern_kind(pattern)
    return next(_iter_embeddings(g, pattern, banned), None) is not None


def contains_disjoint(g: Graph, pattern_a: Graph, pattern_b: Graph) -> bool:
    """True iff `g` holds vertex-disjoint copies of both patterns."""
    _pattern_kind(pattern_a)
    _pattern_kind(pattern_b)
    # Place the larger pattern first: fewer embeddings to sweep.
    if pattern_a.n < pattern_b.n:
        pattern_a, pattern_b = pattern_b, pattern_a
    for used in _iter_embeddings(g, pattern_a):
        if next(_iter_embeddings(g, pattern_b, banned=used), None) is not None:
            return True
    return False
