from typing import Dict, List, Optional, Sequence as SequenceT

import numpy as np

from permcensus.core.errors import UnsupportedPattern
from permcensus.core.patterns import count_occurrences_naive
from permcensus.core.types import Pattern, Permutation

FAST_MAX_LENGTH = 3


class PrefixRankProfile:
    """
    Occurrence counts of every pattern of length <= 3 over a block of
    permutations of equal length.

    The profile is built once per block from the prefix-rank table

        less_before[b, j, v] = #{i < j : block[b, i] < v}

    and then, for every position pair j < k, the number of earlier positions
    whose value lies below, between, or above the pair. A length-3 pattern
    (p1, p2, p3) is the sum, over pairs whose relative order matches (p2, p3),
    of the region selected by p1. Both steps are O(n^2) per row.
    """

    def __init__(self, block: np.ndarray) -> None:
        """
        Args:
            block: Integer array of shape (rows, n); each row a permutation
                   of 1..n in one-line notation.
        """
        block = np.asarray(block)
        if block.ndim != 2:
            raise ValueError(f"Expected a 2-d block, got shape {block.shape}.")
        self.block = block.astype(np.int64, copy=False)
        self.rows, self.n = self.block.shape
        self._ascending: Optional[np.ndarray] = None
        self._regions: Dict[int, np.ndarray] = {}

    def _build(self) -> None:
        n = self.n
        width = n + 2
        pairs_j, pairs_k = np.triu_indices(n, 1)

        thresholds = np.arange(width)
        below = self.block[:, :, None] < thresholds[None, None, :]
        running = np.cumsum(below, axis=1, dtype=np.int16)
        less_before = np.zeros_like(running)
        less_before[:, 1:, :] = running[:, :-1, :]
        flat = less_before.reshape(self.rows, n * width)

        first = self.block[:, pairs_j]
        second = self.block[:, pairs_k]
        low = np.minimum(first, second)
        high = np.maximum(first, second)

        under_low = np.take_along_axis(flat, pairs_j * width + low, axis=1).astype(np.int64)
        under_high = np.take_along_axis(flat, pairs_j * width + high, axis=1).astype(np.int64)

        self._ascending = first < second
        self._regions = {
            1: under_low,
            2: under_high - under_low,
            # pairs_j earlier positions in total, none of them equal to `high`
            3: pairs_j[None, :] - under_high,
        }

    def count(self, pattern: Pattern) -> np.ndarray:
        """
        Occurrence count of the pattern in every row of the block.

        Returns:
            np.ndarray: int64 array of shape (rows,).

        Raises:
            UnsupportedPattern: If the pattern is longer than 3.
        """
        k = pattern.k
        if k > FAST_MAX_LENGTH:
            raise UnsupportedPattern(f"No optimized kernel for pattern {pattern} (k={k}).")
        if k > self.n:
            return np.zeros(self.rows, dtype=np.int64)
        if k == 1:
            return np.full(self.rows, self.n, dtype=np.int64)

        if self._ascending is None:
            self._build()
        ascending = self._ascending
        assert ascending is not None

        if k == 2:
            pair_mask = ascending if pattern.values == (1, 2) else ~ascending
            return pair_mask.sum(axis=1, dtype=np.int64)

        p1, p2, p3 = pattern.values
        pair_mask = ascending if p2 < p3 else ~ascending
        region = self._regions[p1]
        return np.where(pair_mask, region, 0).sum(axis=1, dtype=np.int64)


def count_occurrences_fast(perm: Permutation, pattern: Pattern) -> int:
    """
    Counts occurrences of a pattern of length <= 3 in O(n^2) time.

    Always equal to count_occurrences_naive.

    Raises:
        UnsupportedPattern: If the pattern is longer than 3.
    """
    if pattern.k > FAST_MAX_LENGTH:
        raise UnsupportedPattern(f"No optimized kernel for pattern {pattern} (k={pattern.k}).")
    block = np.asarray(perm.values, dtype=np.int64).reshape(1, perm.n)
    return int(PrefixRankProfile(block).count(pattern)[0])


def count_occurrences(perm: Permutation, pattern: Pattern) -> int:
    """Fast kernel when available, naive oracle otherwise."""
    if pattern.k <= FAST_MAX_LENGTH:
        return count_occurrences_fast(perm, pattern)
    return count_occurrences_naive(perm, pattern)


def count_vectors(block: np.ndarray, patterns: SequenceT[Pattern]) -> np.ndarray:
    """
    Joint occurrence counts for a block of permutations.

    Args:
        block: Array of shape (rows, n), one permutation per row.
        patterns: Patterns to count; long patterns fall back to the naive
                  counter row by row.

    Returns:
        np.ndarray: int64 array of shape (rows, len(patterns)).
    """
    block = np.asarray(block)
    rows = block.shape[0]
    profile = PrefixRankProfile(block)
    columns: List[np.ndarray] = []
    for pattern in patterns:
        if pattern.k <= FAST_MAX_LENGTH:
            columns.append(profile.count(pattern))
        else:
            columns.append(np.fromiter(
                (count_occurrences_naive(Permutation(tuple(row)), pattern) for row in block.tolist()),
                dtype=np.int64,
                count=rows,
            ))
    if not columns:
        return np.zeros((rows, 0), dtype=np.int64)
    return np.stack(columns, axis=1)
