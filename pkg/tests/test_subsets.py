import random
from itertools import combinations
from math import comb

import pytest

from tokengraphs import IndexOutOfRange, KSubset, SizeLimitExceeded, SubsetCodec, complement_subset


def colex_sorted(n, k):
    """Ground truth: k-subsets ordered by their reversed tuples."""
    return sorted(combinations(range(n), k), key=lambda t: t[::-1])


def test_codec_matches_colex_enumeration():
    for n in range(0, 9):
        for k in range(0, n + 1):
            codec = SubsetCodec(n, k)
            assert codec.size == comb(n, k)
            subsets = [codec.unrank(r).members for r in range(codec.size)]
            assert subsets == colex_sorted(n, k)


def test_rank_is_the_inverse_of_unrank():
    rng = random.Random(31)
    for _ in range(200):
        n = rng.randint(1, 20)
        k = rng.randint(0, n)
        codec = SubsetCodec(n, k)
        r = rng.randrange(codec.size)
        s = codec.unrank(r)
        assert codec.rank(s) == r
        assert codec.rank(s.members) == r
        assert codec.rank_mask(s.mask) == r
        assert codec.unrank_mask(r) == s.mask


def test_rank_accepts_unsorted_iterables():
    codec = SubsetCodec(6, 3)
    assert codec.rank([4, 0, 2]) == codec.rank((0, 2, 4))


def test_unrank_bounds():
    codec = SubsetCodec(5, 2)
    with pytest.raises(IndexOutOfRange):
        codec.unrank(10)
    with pytest.raises(IndexOutOfRange):
        codec.unrank(-1)
    with pytest.raises(IndexOutOfRange):
        codec.unrank_mask(10)


def test_codec_argument_validation():
    with pytest.raises(ValueError):
        SubsetCodec(4, 5)
    with pytest.raises(ValueError):
        SubsetCodec(-1, 0)
    with pytest.raises(SizeLimitExceeded):
        SubsetCodec(65, 2)


def test_ksubset_validation():
    s = KSubset((1, 3, 4), 6)
    assert s.k == 3
    assert s.mask == 0b011010
    assert 3 in s and 2 not in s
    assert list(s) == [1, 3, 4]
    with pytest.raises(ValueError):
        KSubset((3, 1), 6)
    with pytest.raises(ValueError):
        KSubset((1, 1), 6)
    with pytest.raises(ValueError):
        KSubset((0, 6), 6)


def test_complement_subset_reverses_colex_order():
    """Complementation maps rank r in (n,k) to rank C(n,k)-1-r in (n,n-k)."""
    for n in range(1, 9):
        for k in range(0, n + 1):
            codec = SubsetCodec(n, k)
            cocodec = SubsetCodec(n, n - k)
            for r in range(codec.size):
                s = codec.unrank(r)
                t = complement_subset(s)
                assert set(t.members) == set(range(n)) - set(s.members)
                assert cocodec.rank(t) == codec.size - 1 - r
