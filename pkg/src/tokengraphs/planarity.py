"""Planarity testing.

`is_planar` is the production path: split into connected components, reject a
component outright when it exceeds the 3n - 6 edge bound, and otherwise run
the left-right test (Brandes). Both DFS passes are iterative because token
graphs routinely reach several hundred vertices.

`planarity_oracle` is a deliberately independent cross-check for small graphs:
planarity is decided by exhaustively searching for a K5 or K3,3 minor through
contraction sequences, with degree-<=2 simplification and a global memo keyed
on canonical form. The two implementations share no logic, so agreement
between them is meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .canon import canonical_graph6
from .errors import SizeLimitExceeded
from .graphs import Graph, _bits

ORACLE_MAX_N = 10


@dataclass(frozen=True)
class PlanarityVerdict:
    """Outcome plus which stage decided it.

    method is "euler-bound" when the edge-count bound rejected a dense
    component, "left-right" when the LR test ran on a single component, and
    "component-split" when the answer was aggregated over several components.
    """

    planar: bool
    method: str

    def __bool__(self) -> bool:
        return self.planar


class _Interval:
    __slots__ = ("low", "high")

    def __init__(self, low=None, high=None):
        self.low = low
        self.high = high

    def empty(self) -> bool:
        return self.low is None and self.high is None


class _Pair:
    __slots__ = ("left", "right")

    def __init__(self, left=None, right=None):
        self.left = left if left is not None else _Interval()
        self.right = right if right is not None else _Interval()

    def swap(self) -> None:
        self.left, self.right = self.right, self.left


class _LeftRight:
    """Left-right planarity test on one graph (any number of components)."""

    def __init__(self, g: Graph):
        self.n = g.n
        self.adj = [list(_bits(mask)) for mask in g._adj]
        self.height: list = [None] * g.n
        self.parent_edge: dict = {v: None for v in range(g.n)}
        self.lowpt: dict = {}
        self.lowpt2: dict = {}
        self.nesting_depth: dict = {}
        self.out: list[list[int]] = [[] for _ in range(g.n)]
        self.ordered: list[list[int]] = [[] for _ in range(g.n)]
        # testing state
        self.S: list[_Pair] = []
        self.bottom: dict = {}
        self.lowpt_edge: dict = {}
        self.ref: dict = {}
        self.side: dict = {}

    def run(self) -> bool:
        roots = []
        for v in range(self.n):
            if self.height[v] is None:
                self.height[v] = 0
                roots.append(v)
                self._orient(v)
        for v in range(self.n):
            self.ordered[v] = sorted(
                self.out[v], key=lambda w: self.nesting_depth[(v, w)]
            )
        for root in roots:
            if not self._test(root):
                return False
        return True

    # -- pass 1: orientation, lowpoints, nesting depth -------------------

    def _orient(self, root: int) -> None:
        oriented = set()
        stack = [(root, iter(self.adj[root]))]
        while stack:
            v, it = stack[-1]
            descended = False
            for w in it:
                key = (v, w) if v < w else (w, v)
                if key in oriented:
                    continue
                oriented.add(key)
                ei = (v, w)
                self.out[v].append(w)
                self.lowpt[ei] = self.height[v]
                self.lowpt2[ei] = self.height[v]
                if self.height[w] is None:  # tree edge
                    self.parent_edge[w] = ei
                    self.height[w] = self.height[v] + 1
                    stack.append((w, iter(self.adj[w])))
                    descended = True
                    break
                self.lowpt[ei] = self.height[w]  # back edge
                self._finish_edge(ei)
            if descended:
                continue
            stack.pop()
            pe = self.parent_edge[v]
            if pe is not None:
                self._finish_edge(pe)

    def _finish_edge(self, ei) -> None:
        v = ei[0]
        self.nesting_depth[ei] = 2 * self.lowpt[ei] + (
            1 if self.lowpt2[ei] < self.height[v] else 0
        )
        e = self.parent_edge[v]
        if e is None:
            return
        if self.lowpt[ei] < self.lowpt[e]:
            self.lowpt2[e] = min(self.lowpt[e], self.lowpt2[ei])
            self.lowpt[e] = self.lowpt[ei]
        elif self.lowpt[ei] > self.lowpt[e]:
            self.lowpt2[e] = min(self.lowpt2[e], self.lowpt[ei])
        else:
            self.lowpt2[e] = min(self.lowpt2[e], self.lowpt2[ei])

    # -- pass 2: constraint testing --------------------------------------

    def _test(self, root: int) -> bool:
        stack = [(root, 0)]
        while stack:
            v, i = stack[-1]
            adjs = self.ordered[v]
            if i < len(adjs):
                stack[-1] = (v, i + 1)
                w = adjs[i]
                ei = (v, w)
                self.bottom[ei] = len(self.S)
                if ei == self.parent_edge[w]:  # tree edge: descend first
                    stack.append((w, 0))
                    continue
                self.lowpt_edge[ei] = ei  # back edge
                self.S.append(_Pair(right=_Interval(ei, ei)))
                if not self._after_edge(v, w, i):
                    return False
                continue
            stack.pop()
            e = self.parent_edge[v]
            if e is None:
                continue
            u = e[0]
            self._trim_back_edges(u)
            if self.lowpt[e] < self.height[u]:
                # the side of e is the side of a highest return edge
                top = self.S[-1]
                hl, hr = top.left.high, top.right.high
                if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                    self.ref[e] = hl
                else:
                    self.ref[e] = hr
            if not self._after_edge(u, v, stack[-1][1] - 1):
                return False
        return True

    def _after_edge(self, v: int, w: int, idx: int) -> bool:
        ei = (v, w)
        if self.lowpt[ei] >= self.height[v]:
            return True  # no return edge
        if idx == 0:
            self.lowpt_edge[self.parent_edge[v]] = self.lowpt_edge[ei]
            return True
        return self._add_constraints(ei, self.parent_edge[v])

    def _conflicting(self, interval: _Interval, b) -> bool:
        return interval.high is not None and self.lowpt[interval.high] > self.lowpt[b]

    def _lowest(self, pair: _Pair) -> int:
        if pair.left.empty():
            return self.lowpt[pair.right.low]
        if pair.right.empty():
            return self.lowpt[pair.left.low]
        return min(self.lowpt[pair.left.low], self.lowpt[pair.right.low])

    def _add_constraints(self, ei, e) -> bool:
        P = _Pair()
        # merge return edges of ei into P.right
        while True:
            Q = self.S.pop()
            if not Q.left.empty():
                Q.swap()
            if not Q.left.empty():
                return False
            if self.lowpt[Q.right.low] > self.lowpt[e]:
                if P.right.empty():
                    P.right.high = Q.right.high
                else:
                    self.ref[P.right.low] = Q.right.high
                P.right.low = Q.right.low
            else:
                self.ref[Q.right.low] = self.lowpt_edge[e]
            if len(self.S) <= self.bottom[ei]:
                break
        # merge conflicting return edges of earlier siblings into P.left
        while self.S and (
            self._conflicting(self.S[-1].left, ei)
            or self._conflicting(self.S[-1].right, ei)
        ):
            Q = self.S.pop()
            if self._conflicting(Q.right, ei):
                Q.swap()
            if self._conflicting(Q.right, ei):
                return False
            self.ref[P.right.low] = Q.right.high
            if Q.right.low is not None:
                P.right.low = Q.right.low
            if P.left.empty():
                P.left.high = Q.left.high
            else:
                self.ref[P.left.low] = Q.left.high
            P.left.low = Q.left.low
        if not (P.left.empty() and P.right.empty()):
            self.S.append(P)
        return True

    def _trim_back_edges(self, u: int) -> None:
        # drop entire conflict pairs that return to u
        while self.S and self._lowest(self.S[-1]) == self.height[u]:
            P = self.S.pop()
            if P.left.low is not None:
                self.side[P.left.low] = -1
        if not self.S:
            return
        # trim one more pair's intervals
        P = self.S.pop()
        while P.left.high is not None and P.left.high[1] == u:
            P.left.high = self.ref.get(P.left.high)
        if P.left.high is None and P.left.low is not None:
            self.ref[P.left.low] = P.right.low
            self.side[P.left.low] = -1
            P.left.low = None
        while P.right.high is not None and P.right.high[1] == u:
            P.right.high = self.ref.get(P.right.high)
        if P.right.high is None and P.right.low is not None:
            self.ref[P.right.low] = P.left.low
            self.side[P.right.low] = -1
            P.right.low = None
        self.S.append(P)


def _component_verdict(g: Graph) -> PlanarityVerdict:
    if g.n >= 5 and g.m > 3 * g.n - 6:
        return PlanarityVerdict(False, "euler-bound")
    return PlanarityVerdict(_LeftRight(g).run(), "left-right")


def is_planar(g: Graph) -> PlanarityVerdict:
    """Planarity of g; disconnected graphs are tested component by component."""
    comps = g.connected_components()
    if len(comps) <= 1:
        return _component_verdict(g)
    for mask in comps:
        if not _component_verdict(g.induced_subgraph(_bits(mask))).planar:
            return PlanarityVerdict(False, "component-split")
    return PlanarityVerdict(True, "component-split")


# ---------------------------------------------------------------------------
# independent oracle for small graphs


_MINOR_MEMO: dict[str, bool] = {}


def _simplify(g: Graph) -> Graph:
    """Strip degree-<=1 vertices and suppress degree-2 vertices.

    Both reductions preserve the presence of minors with minimum degree >= 3,
    which covers K5 and K3,3.
    """
    while True:
        drop = [v for v in range(g.n) if g.degree(v) <= 1]
        if drop:
            g = g.induced_subgraph(v for v in range(g.n) if v not in set(drop))
            continue
        two = next((v for v in range(g.n) if g.degree(v) == 2), None)
        if two is None:
            return g
        u = next(_bits(g._adj[two]))
        g = g.contract_edge(two, u)


def _has_clique5(g: Graph) -> bool:
    adj = g._adj
    cand = [v for v in range(g.n) if adj[v].bit_count() >= 4]
    for quint in combinations(cand, 5):
        mask = 0
        for v in quint:
            mask |= 1 << v
        if all((adj[v] & mask).bit_count() == 4 for v in quint):
            return True
    return False


def _has_k33_subgraph(g: Graph) -> bool:
    adj = g._adj
    for a, b, c in combinations(range(g.n), 3):
        trip = (1 << a) | (1 << b) | (1 << c)
        common = adj[a] & adj[b] & adj[c] & ~trip
        if common.bit_count() >= 3:
            return True
    return False


def _has_kuratowski_minor(g: Graph) -> bool:
    g = _simplify(g)
    if g.n < 5 or g.m < 9:
        return False
    key = canonical_graph6(g)
    hit = _MINOR_MEMO.get(key)
    if hit is not None:
        return hit
    if _has_clique5(g) or _has_k33_subgraph(g):
        _MINOR_MEMO[key] = True
        return True
    found = False
    for u, v in g.edges():
        if _has_kuratowski_minor(g.contract_edge(u, v)):
            found = True
            break
    _MINOR_MEMO[key] = found
    return found


def planarity_oracle(g: Graph) -> bool:
    """Exhaustive minor search: planar iff no K5 and no K3,3 minor.

    Exponential by design; capped at n <= ORACLE_MAX_N.
    """
    if g.n > ORACLE_MAX_N:
        raise SizeLimitExceeded(
            f"planarity oracle is capped at n <= {ORACLE_MAX_N}, got n={g.n}"
        )
    return not _has_kuratowski_minor(g)
