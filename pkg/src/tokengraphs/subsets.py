"""Colex ranking between k-subsets of {0..n-1} and dense integer ids.

The rank of a subset with members s_0 < s_1 < ... < s_{k-1} is
sum(C(s_i, i+1)), the standard combinatorial number system in
colexicographic order. Ranks are the vertex ids of token graphs.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .errors import IndexOutOfRange, SizeLimitExceeded

CODEC_MAX_N = 64


@dataclass(frozen=True)
class KSubset:
    """A k-subset of {0..n-1}, stored as a strictly increasing tuple."""

    members: tuple[int, ...]
    n: int

    def __post_init__(self):
        ms = self.members
        if any(ms[i] >= ms[i + 1] for i in range(len(ms) - 1)):
            raise ValueError(f"members must be strictly increasing, got {ms}")
        if ms and (ms[0] < 0 or ms[-1] >= self.n):
            raise ValueError(f"members {ms} outside 0..{self.n - 1}")

    @property
    def k(self) -> int:
        return len(self.members)

    @property
    def mask(self) -> int:
        out = 0
        for v in self.members:
            out |= 1 << v
        return out

    def complement(self) -> "KSubset":
        inside = set(self.members)
        return KSubset(tuple(v for v in range(self.n) if v not in inside), self.n)

    def __contains__(self, v: int) -> bool:
        return v in self.members

    def __iter__(self):
        return iter(self.members)


def complement_subset(s: KSubset) -> KSubset:
    """The (n-k)-subset V minus s, over the same ground set."""
    return s.complement()


class SubsetCodec:
    """Bijective rank/unrank for the k-subsets of {0..n-1} in colex order."""

    __slots__ = ("n", "k", "size", "_comb")

    def __init__(self, n: int, k: int):
        if n < 0 or not 0 <= k <= n:
            raise ValueError(f"need 0 <= k <= n, got n={n}, k={k}")
        if n > CODEC_MAX_N:
            raise SizeLimitExceeded(f"codec capped at n <= {CODEC_MAX_N}, got {n}")
        self.n = n
        self.k = k
        self.size = comb(n, k)
        # _comb[c][i] = C(c, i) for 0 <= c <= n, 0 <= i <= k
        self._comb = [[comb(c, i) for i in range(k + 1)] for c in range(n + 1)]

    def rank(self, s) -> int:
        """Colex rank of a KSubset or iterable of members."""
        members = s.members if isinstance(s, KSubset) else tuple(sorted(s))
        if len(members) != self.k:
            raise ValueError(f"expected a {self.k}-subset, got {members}")
        cmb = self._comb
        return sum(cmb[c][i + 1] for i, c in enumerate(members))

    def rank_mask(self, mask: int) -> int:
        """Colex rank of a subset given as a bitmask."""
        total = 0
        i = 1
        cmb = self._comb
        while mask:
            lsb = mask & -mask
            total += cmb[lsb.bit_length() - 1][i]
            i += 1
            mask ^= lsb
        return total

    def unrank(self, r: int) -> KSubset:
        if not 0 <= r < self.size:
            raise IndexOutOfRange(f"rank {r} outside 0..{self.size - 1}")
        cmb = self._comb
        members = [0] * self.k
        c = self.n
        for i in range(self.k, 0, -1):
            c -= 1
            while cmb[c][i] > r:
                c -= 1
            members[i - 1] = c
            r -= cmb[c][i]
        return KSubset(tuple(members), self.n)

    def unrank_mask(self, r: int) -> int:
        if not 0 <= r < self.size:
            raise IndexOutOfRange(f"rank {r} outside 0..{self.size - 1}")
        cmb = self._comb
        mask = 0
        c = self.n
        for i in range(self.k, 0, -1):
            c -= 1
            while cmb[c][i] > r:
                c -= 1
            mask |= 1 << c
            r -= cmb[c][i]
        return mask

    def subsets(self):
        """All k-subsets in colex (= rank) order."""
        for r in range(self.size):
            yield self.unrank(r)

    def complement_codec(self) -> "SubsetCodec":
        return SubsetCodec(self.n, self.n - self.k)
