"""
Enumeration of S_n: a lexicographic successor stream, numpy blocks for the
census kernels, and the two structural generators that build a class
directly instead of filtering S_n.
"""
from functools import lru_cache
from typing import Iterator, List

import numpy as np

from permcensus.core.types import Permutation


def next_permutation(values: List[int]) -> bool:
    """
    Advances `values` in place to its lexicographic successor.

    Returns:
        bool: False (leaving `values` untouched) when it is already the last
              permutation in lexicographic order.

    Time Complexity: O(n) worst case, O(1) amortized.
    """
    pivot = len(values) - 2
    while pivot >= 0 and values[pivot] >= values[pivot + 1]:
        pivot -= 1
    if pivot < 0:
        return False
    successor = len(values) - 1
    while values[successor] <= values[pivot]:
        successor -= 1
    values[pivot], values[successor] = values[successor], values[pivot]
    values[pivot + 1:] = reversed(values[pivot + 1:])
    return True


def iter_permutations(n: int) -> Iterator[Permutation]:
    """
    Yields each permutation of length n exactly once in lexicographic order.

    n = 0 yields the single empty permutation.
    """
    if n < 0:
        raise ValueError("n must be nonnegative.")
    values = list(range(1, n + 1))
    while True:
        yield Permutation(tuple(values))
        if not next_permutation(values):
            return


@lru_cache(maxsize=2)
def permutation_array(m: int) -> np.ndarray:
    """
    All permutations of 1..m as rows of an int8 array, lexicographic order.

    The returned array is read-only (it is cached).
    """
    if m < 0:
        raise ValueError("m must be nonnegative.")
    if m == 0:
        table = np.zeros((1, 0), dtype=np.int8)
    else:
        table = np.ones((1, 1), dtype=np.int8)
        for size in range(2, m + 1):
            parts = []
            for first in range(1, size + 1):
                # Lift the (size-1)-tables to the values 1..size without `first`
                rest = table + (table >= first)
                lead = np.full((rest.shape[0], 1), first, dtype=np.int8)
                parts.append(np.hstack([lead, rest.astype(np.int8)]))
            table = np.vstack(parts)
    table.setflags(write=False)
    return table


def permutation_block(n: int, first: int) -> np.ndarray:
    """
    All permutations of length n starting with `first`, lexicographic order.

    Args:
        n: Permutation length, at least 1.
        first: Leading value, 1 <= first <= n.

    Returns:
        np.ndarray: int8 array of shape ((n-1)!, n).
    """
    if not 1 <= first <= n:
        raise ValueError(f"first must lie in 1..{n}, got {first}.")
    rest = permutation_array(n - 1)
    lifted = (rest + (rest >= first)).astype(np.int8)
    lead = np.full((lifted.shape[0], 1), first, dtype=np.int8)
    return np.hstack([lead, lifted])


def iter_blocks(n: int, first: int, block_size: int) -> Iterator[np.ndarray]:
    """Splits permutation_block(n, first) into row chunks of at most block_size."""
    if block_size < 1:
        raise ValueError("block_size must be positive.")
    block = permutation_block(n, first)
    for start in range(0, block.shape[0], block_size):
        yield block[start:start + block_size]


def generate_double_avoiders(n: int) -> List[Permutation]:
    """
    Builds every permutation of length n avoiding both 123 and 132.

    Inserting n at position i forces the i-1 entries before it to be
    decreasing and larger than everything after it; the suffix is again a
    double avoider, on the values 1..n-i. No filtering is involved and the
    result has exactly 2^(n-1) members, ordered by the position of n.
    """
    if n < 1:
        raise ValueError("n must be at least 1.")

    def build(size: int) -> List[tuple]:
        if size == 0:
            return [()]
        out = []
        for position in range(1, size + 1):
            prefix = tuple(range(size - 1, size - position, -1))
            for suffix in build(size - position):
                out.append(prefix + (size,) + suffix)
        return out

    return [Permutation(values) for values in build(n)]


def generate_single_ascent(n: int) -> List[Permutation]:
    """
    Builds the n-1 permutations of length n with exactly one 12-pattern.

    Either n comes first and the rest is such a permutation of 1..n-1, or
    the permutation opens with n-1, n and then decreases.
    """
    if n < 2:
        raise ValueError("n must be at least 2.")
    if n == 2:
        return [Permutation((1, 2))]
    led = [Permutation((n,) + p.values) for p in generate_single_ascent(n - 1)]
    tail = tuple(range(n - 2, 0, -1))
    return led + [Permutation((n - 1, n) + tail)]
