"""Token graph construction.

The k-token graph of g has one vertex per k-subset of V(g); two subsets are
adjacent when their symmetric difference is an edge of g (slide one token
along that edge). Vertex ids are colex ranks from SubsetCodec, so the
layout is deterministic and cheap to invert.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import BadK, BudgetExceeded, TokenGraphError
from .graphs import Graph, complete_graph
from .subsets import KSubset, SubsetCodec

DEFAULT_VERTEX_BUDGET = 10**6


@dataclass(frozen=True)
class TokenGraph:
    """A built token graph together with its base graph and subset codec."""

    base: Graph
    k: int
    graph: Graph
    codec: SubsetCodec

    def subset_of(self, r: int) -> KSubset:
        """The k-subset behind token vertex r."""
        return self.codec.unrank(r)

    def vertex_of(self, s) -> int:
        """The token vertex id of a k-subset."""
        return self.codec.rank(s)

    def vertex_labels(self) -> list[str]:
        """Human-readable subset labels, e.g. '{1,3}', indexed by vertex id."""
        return [
            "{" + ",".join(str(v) for v in self.codec.unrank(r).members) + "}"
            for r in range(self.codec.size)
        ]


def _check_k(n: int, k: int) -> None:
    if not 1 <= k < n:
        raise BadK(f"need 1 <= k < n, got k={k} for n={n}")


def build_token_graph(
    g: Graph, k: int, *, vertex_budget: int = DEFAULT_VERTEX_BUDGET
) -> TokenGraph:
    """Build the k-token graph of g.

    Raises BadK unless 1 <= k < n, BudgetExceeded when C(n, k) would pass
    `vertex_budget`.
    """
    n = g.n
    _check_k(n, k)
    codec = SubsetCodec(n, k)
    size = codec.size
    if size > vertex_budget:
        raise BudgetExceeded(
            f"C({n},{k}) = {size} token vertices exceed the budget {vertex_budget}"
        )
    masks = [codec.unrank_mask(r) for r in range(size)]
    rank_of = {mask: r for r, mask in enumerate(masks)}
    base_edges = g.edges()
    adj = [0] * size
    for r, amask in enumerate(masks):
        for u, v in base_edges:
            bu = 1 << u
            bv = 1 << v
            # exactly one endpoint inside the subset: the token can slide
            if bool(amask & bu) != bool(amask & bv):
                s = rank_of[amask ^ (bu | bv)]
                if r < s:
                    adj[r] |= 1 << s
                    adj[s] |= 1 << r
    token = Graph._from_adj(adj)
    # A connected base must give a connected token graph; check, don't assume.
    if size and g.is_connected() and not token.is_connected():
        raise TokenGraphError("internal error: token graph of a connected base is disconnected")
    return TokenGraph(base=g, k=k, graph=token, codec=codec)


def token_degree(g: Graph, subset) -> int:
    """Degree of the token vertex `subset` in F_k(g), without building it.

    This is the size of the edge cut between the subset and its complement.
    """
    amask = subset.mask if isinstance(subset, KSubset) else 0
    if not isinstance(subset, KSubset):
        for v in subset:
            amask |= 1 << v
    total = 0
    mask = amask
    while mask:
        lsb = mask & -mask
        total += (g._adj[lsb.bit_length() - 1] & ~amask).bit_count()
        mask ^= lsb
    return total


def johnson(n: int, k: int, *, vertex_budget: int = DEFAULT_VERTEX_BUDGET) -> TokenGraph:
    """The Johnson graph J(n, k) = k-token graph of the complete graph."""
    return build_token_graph(complete_graph(n), k, vertex_budget=vertex_budget)


def johnson_complement(tg: TokenGraph) -> TokenGraph:
    """Token graph of the complemented base, via edge complement inside J(n,k).

    The token graphs of g and of its complement partition the Johnson graph's
    edges: the result holds exactly the J(n,k) edges missing from tg.
    """
    jg = johnson(tg.base.n, tg.k)
    tadj = tg.graph._adj
    adj = [jg.graph._adj[r] & ~tadj[r] for r in range(tg.codec.size)]
    return TokenGraph(
        base=tg.base.complement(), k=tg.k, graph=Graph._from_adj(adj), codec=tg.codec
    )


def _mask_bits(mask: int):
    while mask:
        lsb = mask & -mask
        yield lsb.bit_length() - 1
        mask ^= lsb


def complement_isomorphism_check(g: Graph, k: int) -> bool:
    """Verify F_k(g) equals F_{n-k}(g) under the subset-complement relabeling."""
    n = g.n
    _check_k(n, k)
    _check_k(n, n - k)
    fk = build_token_graph(g, k)
    fnk = build_token_graph(g, n - k)
    co = fnk.codec
    # map: rank r of a k-subset -> rank of its complement as an (n-k)-subset
    full = (1 << n) - 1
    to_co = [co.rank_mask(full ^ fk.codec.unrank_mask(r)) for r in range(fk.codec.size)]
    for r in range(fk.codec.size):
        image = 0
        for s in _mask_bits(fk.graph._adj[r]):
            image |= 1 << to_co[s]
        if image != fnk.graph._adj[to_co[r]]:
            return False
    return True
