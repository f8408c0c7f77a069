from math import comb

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from permcensus.core.enumeration import iter_permutations, permutation_array
from permcensus.core.errors import UnsupportedPattern
from permcensus.core.kernels import (
    PrefixRankProfile,
    count_occurrences,
    count_occurrences_fast,
    count_vectors,
)
from permcensus.core.patterns import count_occurrences_naive, parse_pattern
from permcensus.core.types import Pattern, Permutation

SHORT_PATTERNS = [parse_pattern(t) for t in ("12", "21", "123", "132", "213", "231", "312", "321")]


def middle_scan_counts(values: np.ndarray) -> dict:
    """
    Independent O(n^2) count of every length-3 pattern from, for each
    position, how many smaller/larger values lie before/after it.
    """
    v = np.asarray(values, dtype=np.int64)
    n = v.size
    smaller = v[None, :] < v[:, None]
    before = np.tri(n, n, -1, dtype=bool)
    after = before.T
    lb = (smaller & before).sum(axis=1)
    la = (smaller & after).sum(axis=1)
    gb = (~smaller & before).sum(axis=1)
    ga = (~smaller & after).sum(axis=1)
    c123 = int((lb * ga).sum())
    c321 = int((gb * la).sum())
    max_middle = int((lb * la).sum())    # 132 + 231
    min_middle = int((gb * ga).sum())    # 213 + 312
    min_first = int((ga * (ga - 1) // 2).sum())   # 123 + 132
    mid_first = int((la * ga).sum())     # 213 + 231
    c132 = min_first - c123
    c231 = max_middle - c132
    c213 = mid_first - c231
    c312 = min_middle - c213
    return {"123": c123, "132": c132, "213": c213, "231": c231, "312": c312, "321": c321}


def test_fast_examples():
    assert count_occurrences_fast(Permutation.of(2, 3, 1, 4), Pattern.of(1, 2, 3)) == 1
    assert count_occurrences_fast(Permutation.of(3, 2, 1), Pattern.of(1, 2)) == 0
    increasing = Permutation(tuple(range(1, 201)))
    assert count_occurrences_fast(increasing, Pattern.of(1, 2, 3)) == comb(200, 3) == 1313400


def test_fast_rejects_long_patterns():
    with pytest.raises(UnsupportedPattern):
        count_occurrences_fast(Permutation.of(1, 2, 3, 4), Pattern.of(1, 2, 3, 4))
    with pytest.raises(UnsupportedPattern):
        PrefixRankProfile(np.array([[1, 2, 3, 4]])).count(Pattern.of(2, 1, 4, 3))


def test_long_patterns_fall_back_to_naive():
    perm = Permutation.of(2, 4, 1, 3, 5)
    pattern = Pattern.of(2, 4, 1, 3)
    assert count_occurrences(perm, pattern) == count_occurrences_naive(perm, pattern) == 1


def test_fast_equals_naive_exhaustively_up_to_seven():
    checked = 0
    for n in range(1, 8):
        for perm in iter_permutations(n):
            for pattern in SHORT_PATTERNS:
                assert count_occurrences_fast(perm, pattern) == count_occurrences_naive(perm, pattern)
            checked += 1
    assert checked == 5913


@pytest.mark.parametrize("n", range(1, 8))
def test_block_counts_equal_naive(n):
    block = permutation_array(n)
    vectors = count_vectors(block, SHORT_PATTERNS)
    for row, counts in zip(block.tolist(), vectors.tolist()):
        perm = Permutation(tuple(row))
        assert counts == [count_occurrences_naive(perm, p) for p in SHORT_PATTERNS]


def test_fast_equals_independent_scan_on_long_random_permutations():
    rng = np.random.default_rng(20240601)
    for _ in range(1000):
        values = rng.permutation(200) + 1
        expected = middle_scan_counts(values)
        profile = PrefixRankProfile(values.reshape(1, 200))
        for text, count in expected.items():
            assert int(profile.count(parse_pattern(text))[0]) == count
        ascents = int(profile.count(Pattern.of(1, 2))[0])
        assert ascents + int(profile.count(Pattern.of(2, 1))[0]) == comb(200, 2)


@settings(max_examples=25, deadline=None)
@given(st.permutations(list(range(1, 31))))
def test_fast_equals_naive_on_random_length_thirty(values):
    perm = Permutation(tuple(values))
    for pattern in SHORT_PATTERNS:
        assert count_occurrences_fast(perm, pattern) == count_occurrences_naive(perm, pattern)


def test_count_vectors_mixes_lengths():
    block = np.array([[2, 4, 1, 3], [1, 2, 3, 4]])
    patterns = [Pattern.of(1), Pattern.of(1, 2, 3), Pattern.of(2, 4, 1, 3)]
    assert count_vectors(block, patterns).tolist() == [[4, 0, 1], [4, 4, 0]]


def test_patterns_longer_than_block_count_zero():
    block = np.array([[1, 2], [2, 1]])
    assert count_vectors(block, [Pattern.of(1, 2, 3)]).tolist() == [[0], [0]]


@pytest.mark.parametrize("n", range(1, 8))
def test_length_three_counts_sum_to_binomial(n):
    length_three = [p for p in SHORT_PATTERNS if p.k == 3]
    vectors = count_vectors(permutation_array(n), length_three)
    assert vectors.shape == (len(permutation_array(n)), 6)
    assert (vectors.sum(axis=1) == comb(n, 3)).all()
