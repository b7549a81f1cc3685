"""Connected-graph enumeration and the edge-maximal planar-token search.

Generation is by canonical augmentation: a child g+e is accepted only when
the added edge lies in the child's designated edge orbit (the preimage of
the largest canonical pair), and candidate non-edges are deduplicated by
parent automorphism orbits first. Each isomorphism class therefore appears
exactly once per (n, m) level without a global seen-set.

The search walks m upward from n-1 per order n, keeps the graphs whose
k-token graphs are planar, records the edge-maximal ones (no single edge can
be added without losing token planarity), and stops at the first m with no
connected survivor. Planarity of token graphs only ever degrades when edges
are added to the base, so the default "pruned" mode grows candidates from
the planar classes of the previous level (connected or not) instead of
enumerating everything; "verbatim" mode enumerates every connected class,
which is affordable at desk scale and cross-checks the pruning.
"""

from __future__ import annotations

import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

from .canon import canonical_data, canonical_graph6
from .errors import BadK, SizeLimitExceeded
from .graph6 import decode_graph6, encode_graph6, iter_graph6
from .graphs import Graph, empty_graph
from .planarity import is_planar
from .tokens import build_token_graph

GENERATOR_MAX_N = 10
BUDGET_ENV_VAR = "TOKENS_BUDGET_SECS"


# ---------------------------------------------------------------------------
# canonical augmentation


def _pair_dsu(pairs, gens):
    """Union-find over vertex pairs identified by the permutations."""
    index = {p: i for i, p in enumerate(pairs)}
    parent = list(range(len(pairs)))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    for perm in gens:
        for i, (u, v) in enumerate(pairs):
            a, b = perm[u], perm[v]
            if a > b:
                a, b = b, a
            j = index[(a, b)]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[rj] = ri
    return index, find


def _pair_orbit_reps(pairs, gens):
    if not gens or len(pairs) <= 1:
        return list(pairs)
    _, find = _pair_dsu(pairs, gens)
    reps = []
    seen = set()
    for i, p in enumerate(pairs):
        r = find(i)
        if r not in seen:
            seen.add(r)
            reps.append(p)
    return reps


def _same_pair_orbit(pairs, p1, p2, gens) -> bool:
    if p1 == p2:
        return True
    if not gens:
        return False
    index, find = _pair_dsu(pairs, gens)
    return find(index[p1]) == find(index[p2])


def _augmentations(parent: Graph):
    """Children of `parent` accepted by the canonical augmentation rule."""
    n = parent.n
    _, _, pgens = canonical_data(parent)
    nonedges = [
        (u, v)
        for u in range(n)
        for v in range(u + 1, n)
        if not parent.has_edge(u, v)
    ]
    for u, v in _pair_orbit_reps(nonedges, pgens):
        child = parent.with_edge(u, v)
        _, cperm, cgens = canonical_data(child)
        inv = [0] * n
        for x in range(n):
            inv[cperm[x]] = x
        best = None
        for a, b in child.edges():
            p = (cperm[a], cperm[b])
            if p[0] > p[1]:
                p = (p[1], p[0])
            if best is None or p > best:
                best = p
        designated = tuple(sorted((inv[best[0]], inv[best[1]])))
        if _same_pair_orbit(child.edges(), (u, v), designated, cgens):
            yield child


_LEVELS: dict[tuple[int, int], tuple[Graph, ...]] = {}


def graph_classes(n: int, m: int) -> tuple[Graph, ...]:
    """One representative per isomorphism class of (n, m)-graphs.

    Dense levels are answered by complementing the sparse ones. The middle
    levels of n = 9, 10 are out of practical reach; the package only ever
    needs small m (or small co-m) there.
    """
    if n < 0 or m < 0:
        return ()
    if n > GENERATOR_MAX_N:
        raise SizeLimitExceeded(
            f"built-in generation is capped at n <= {GENERATOR_MAX_N}; "
            "stream larger orders from a graph6 file instead"
        )
    total = n * (n - 1) // 2
    if m > total:
        return ()
    if m > total - m:
        return tuple(g.complement() for g in graph_classes(n, total - m))
    key = (n, m)
    hit = _LEVELS.get(key)
    if hit is not None:
        return hit
    if m == 0:
        level: tuple[Graph, ...] = (empty_graph(n),)
    else:
        out = []
        for parent in graph_classes(n, m - 1):
            out.extend(_augmentations(parent))
        level = tuple(out)
    _LEVELS[key] = level
    return level


def connected_graphs(n: int, m: int, *, from_file: str | None = None):
    """Stream one representative per isomorphism class of connected (n, m)-graphs."""
    if from_file is not None:
        with open(from_file, "r", encoding="ascii") as fh:
            text = fh.read()
        seen: set[str] = set()
        for g in iter_graph6(text):
            if g.n != n or g.m != m or not g.is_connected():
                continue
            key = canonical_graph6(g)
            if key in seen:
                continue
            seen.add(key)
            yield g
        return
    for g in graph_classes(n, m):
        if g.is_connected():
            yield g


# ---------------------------------------------------------------------------
# edge-maximal search


@dataclass(frozen=True)
class SearchEntry:
    n: int
    m: int
    generated: int  # connected candidates examined at this level
    survivors: int  # of those, how many have planar token graphs


@dataclass(frozen=True)
class SearchReport:
    k: int
    entries: tuple[SearchEntry, ...]
    maximal: tuple[str, ...]  # canonical graph6, sorted
    stopped_at: dict[int, int]  # n -> first m with no connected survivor
    elapsed_secs: float
    mode: str  # "pruned" | "verbatim" | "file"
    partial: bool  # true when the wall-clock budget cut the run short

    def to_json(self) -> dict:
        return {
            "k": self.k,
            "entries": [
                {
                    "n": e.n,
                    "m": e.m,
                    "generated": e.generated,
                    "survivors": e.survivors,
                }
                for e in self.entries
            ],
            "maximal": list(self.maximal),
            "stopped_at": {str(n): m for n, m in sorted(self.stopped_at.items())},
            "elapsed_secs": round(self.elapsed_secs, 3),
            "mode": self.mode,
            "partial": self.partial,
        }


def verify_maximality(g: Graph, k: int) -> bool:
    """True iff F_k(g) is planar and every single-edge addition breaks that."""
    n = g.n
    if not 2 <= k <= n - 2:
        raise BadK(f"maximality check needs 2 <= k <= n-2, got k={k}, n={n}")
    if not is_planar(build_token_graph(g, k).graph).planar:
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if g.has_edge(u, v):
                continue
            if is_planar(build_token_graph(g.with_edge(u, v), k).graph).planar:
                return False
    return True


def _token_planar(g: Graph, k: int) -> bool:
    return is_planar(build_token_graph(g, k).graph).planar


def _candidate_pipeline(args: tuple[str, int]) -> tuple[bool, bool]:
    """Worker: (graph6, k) -> (token graph planar, certified edge-maximal)."""
    g6, k = args
    g = decode_graph6(g6)
    planar = _token_planar(g, k)
    maximal = planar and g.is_connected() and verify_maximality(g, k)
    return planar, maximal


class _Budget:
    def __init__(self, budget_secs: float | None):
        if budget_secs is None:
            env = os.environ.get(BUDGET_ENV_VAR)
            try:
                budget_secs = float(env) if env else None
            except ValueError:
                budget_secs = None  # an unreadable env budget means no budget
        self.start = time.monotonic()
        self.deadline = None if budget_secs is None else self.start + budget_secs

    def exhausted(self) -> bool:
        return self.deadline is not None and time.monotonic() > self.deadline

    def elapsed(self) -> float:
        return time.monotonic() - self.start


def _run_level(candidates, k, pool):
    """Test every candidate; returns (planar graphs, connected count, maximal list)."""
    cands = list(candidates)
    if pool is not None:
        results = list(pool.map(_candidate_pipeline, [(encode_graph6(g), k) for g in cands]))
    else:
        results = [
            (_token_planar(g, k), False) for g in cands
        ]
        # fill in maximality serially, only where it matters
        for i, g in enumerate(cands):
            if results[i][0] and g.is_connected():
                results[i] = (True, verify_maximality(g, k))
    planar_graphs = [g for g, (p, _) in zip(cands, results) if p]
    connected_total = sum(1 for g in cands if g.is_connected())
    maximal = [
        g for g, (p, mx) in zip(cands, results) if p and mx
    ]
    return planar_graphs, connected_total, maximal


def _dedup_by_canon(graphs) -> list[Graph]:
    seen: set[str] = set()
    out = []
    for g in graphs:
        key = canonical_graph6(g)
        if key not in seen:
            seen.add(key)
            out.append(g)
    return out


def _pruned_candidates(frontier) -> list[Graph]:
    out = []
    for g in frontier:
        for u in range(g.n):
            for v in range(u + 1, g.n):
                if not g.has_edge(u, v):
                    out.append(g.with_edge(u, v))
    return _dedup_by_canon(out)


def edge_maximal_search(
    k: int,
    n_range,
    *,
    jobs: int | None = None,
    budget_secs: float | None = None,
    prune: bool = True,
    from_file: str | None = None,
) -> SearchReport:
    """Find all connected graphs with planar k-token graphs that are edge-maximal.

    Follows the ascending (n, m) protocol; see the module docstring for the
    pruned/verbatim distinction. A wall-clock budget (argument or the
    TOKENS_BUDGET_SECS environment variable) turns the report partial rather
    than raising.
    """
    if k < 2:
        raise BadK(f"the search is defined for k >= 2, got k={k}")
    ns = sorted(set(int(n) for n in n_range))
    for n in ns:
        if n < 2 * k:
            raise BadK(
                f"n={n} is below 2k={2 * k}; orders under 2k are answered by "
                "the complement symmetry, not searched"
            )
        if n > GENERATOR_MAX_N and from_file is None:
            raise SizeLimitExceeded(
                f"built-in generation is capped at n <= {GENERATOR_MAX_N}; "
                "pass from_file=... to search larger orders"
            )
    mode = "file" if from_file is not None else ("pruned" if prune else "verbatim")
    budget = _Budget(budget_secs)
    entries: list[SearchEntry] = []
    maximal: list[str] = []
    stopped_at: dict[int, int] = {}
    partial = False
    pool = ProcessPoolExecutor(max_workers=jobs) if jobs and jobs > 1 else None
    try:
        for n in ns:
            if partial:
                break
            if mode == "pruned":
                partial = _search_pruned(
                    n, k, pool, budget, entries, maximal, stopped_at
                )
            else:
                partial = _search_enumerated(
                    n, k, pool, budget, entries, maximal, stopped_at, from_file
                )
    finally:
        if pool is not None:
            pool.shutdown()
    return SearchReport(
        k=k,
        entries=tuple(entries),
        maximal=tuple(sorted(dict.fromkeys(maximal))),
        stopped_at=stopped_at,
        elapsed_secs=budget.elapsed(),
        mode=mode,
        partial=partial,
    )


def _search_pruned(n, k, pool, budget, entries, maximal, stopped_at) -> bool:
    """One order in pruned mode. Returns True when the budget ran out."""
    frontier: list[Graph] = [empty_graph(n)]
    top = n * (n - 1) // 2
    for m in range(1, top + 2):
        if budget.exhausted():
            return True
        candidates = _pruned_candidates(frontier)
        planar_graphs, connected_total, level_maximal = _run_level(
            candidates, k, pool
        )
        frontier = planar_graphs
        survivors = sum(1 for g in planar_graphs if g.is_connected())
        if m >= n - 1:
            entries.append(SearchEntry(n, m, connected_total, survivors))
            maximal.extend(canonical_graph6(g) for g in level_maximal)
            if survivors == 0:
                stopped_at[n] = m
                return False
        if not frontier:
            # the planar class died before the first reported level; the
            # protocol's answer at m = n-1 is then an empty level
            entries.append(SearchEntry(n, n - 1, 0, 0))
            stopped_at[n] = n - 1
            return False
    stopped_at[n] = top + 1
    return False


def _search_enumerated(
    n, k, pool, budget, entries, maximal, stopped_at, from_file
) -> bool:
    """One order in verbatim/file mode. Returns True when the budget ran out."""
    top = n * (n - 1) // 2
    for m in range(n - 1, top + 2):
        if budget.exhausted():
            return True
        candidates = list(connected_graphs(n, m, from_file=from_file))
        planar_graphs, connected_total, level_maximal = _run_level(
            candidates, k, pool
        )
        survivors = len(planar_graphs)
        entries.append(SearchEntry(n, m, connected_total, survivors))
        maximal.extend(canonical_graph6(g) for g in level_maximal)
        if survivors == 0:
            stopped_at[n] = m
            return False
    stopped_at[n] = top + 1
    return False
