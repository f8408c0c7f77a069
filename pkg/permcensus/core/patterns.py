"""
Pattern containment primitives.

Everything here is a pure function of immutable inputs. The naive counter is
the reference oracle; the optimized kernels live in permcensus.core.kernels.
"""
from itertools import combinations
from typing import Iterator, List, Optional, Sequence as SequenceT, Tuple

from permcensus.core.errors import InvalidPattern, InvalidPermutation, InvalidWindow
from permcensus.core.types import Occurrence, Pattern, Permutation


def standardize(window: SequenceT[int]) -> Pattern:
    """
    Replaces every entry of the window by its rank (1 = smallest).

    Args:
        window: Distinct integers, at least one.

    Returns:
        Pattern: The rank sequence, e.g. (5, 2, 9) -> (2, 1, 3).

    Raises:
        InvalidWindow: If the window is empty or has repeated entries.
    """
    if len(window) == 0:
        raise InvalidWindow("Cannot standardize an empty window.")
    order = sorted(range(len(window)), key=window.__getitem__)
    ranks = [0] * len(window)
    for rank, index in enumerate(order, start=1):
        ranks[index] = rank
    if any(window[a] == window[b] for a, b in zip(order, order[1:])):
        raise InvalidWindow(f"Window {tuple(window)} has repeated entries.")
    return Pattern(tuple(ranks))


def _iter_occurrences(perm: Permutation, pattern: Pattern) -> Iterator[Tuple[int, ...]]:
    # Positions are yielded 0-based in lexicographic order.
    target = pattern.values
    values = perm.values
    for positions in combinations(range(perm.n), pattern.k):
        window = [values[p] for p in positions]
        if standardize(window).values == target:
            yield positions


def count_occurrences_naive(perm: Permutation, pattern: Pattern) -> int:
    """
    Counts occurrences by scanning all C(n, k) position subsets.

    Returns 0 when the pattern is longer than the permutation.

    Time Complexity: O(C(n, k) * k log k).
    """
    if pattern.k > perm.n:
        return 0
    return sum(1 for _ in _iter_occurrences(perm, pattern))


def find_occurrences(
    perm: Permutation, pattern: Pattern, limit: Optional[int] = None
) -> List[Occurrence]:
    """
    Lists occurrences in lexicographic order of their position lists.

    Args:
        perm: Host permutation.
        pattern: Pattern to locate.
        limit: Stop after this many occurrences; None means all of them.

    Returns:
        List[Occurrence]: 1-based occurrences.
    """
    if limit is not None and limit < 1:
        raise ValueError("limit must be positive.")
    found: List[Occurrence] = []
    if pattern.k > perm.n:
        return found
    for positions in _iter_occurrences(perm, pattern):
        found.append(Occurrence(tuple(p + 1 for p in positions)))
        if limit is not None and len(found) >= limit:
            break
    return found


def avoids(perm: Permutation, pattern: Pattern) -> bool:
    """True iff the permutation has no occurrence of the pattern."""
    return not find_occurrences(perm, pattern, limit=1)


def complement(perm: Permutation) -> Permutation:
    n = perm.n
    return Permutation(tuple(n + 1 - v for v in perm.values))


def reverse(perm: Permutation) -> Permutation:
    return Permutation(tuple(reversed(perm.values)))


def inverse(perm: Permutation) -> Permutation:
    result = [0] * perm.n
    for position, value in enumerate(perm.values, start=1):
        result[value - 1] = position
    return Permutation(tuple(result))


def complement_pattern(pattern: Pattern) -> Pattern:
    k = pattern.k
    return Pattern(tuple(k + 1 - v for v in pattern.values))


def _split_values(text: str) -> Tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        return tuple(int(part) for part in text.split(","))
    if text.isdigit() and len(text) <= 9:
        # Compact digit form: "132" -> (1, 3, 2)
        return tuple(int(ch) for ch in text)
    return (int(text),)


def parse_permutation(text: str) -> Permutation:
    """
    Parses "2,3,1,4" or, for lengths <= 9, the compact form "2314".

    Raises:
        InvalidPermutation: On malformed text or a non-permutation.
    """
    try:
        values = _split_values(text)
    except ValueError as e:
        raise InvalidPermutation(f"Cannot parse permutation {text!r}: {e}") from e
    return Permutation(values)


def parse_pattern(text: str) -> Pattern:
    """
    Parses "1,3,2" or, for lengths <= 9, the compact form "132".

    Raises:
        InvalidPattern: On malformed text or a non-pattern.
    """
    try:
        values = _split_values(text)
    except ValueError as e:
        raise InvalidPattern(f"Cannot parse pattern {text!r}: {e}") from e
    return Pattern(values)


def parse_patterns(text: str) -> List[Pattern]:
    """
    Parses a comma separated list of compact patterns, e.g. "123,132".
    Patterns longer than 9 are given in comma form separated by ';'.
    """
    separator = ";" if ";" in text else ","
    parts = [part.strip() for part in text.split(separator) if part.strip()]
    if not parts:
        raise InvalidPattern("At least one pattern is required.")
    return [parse_pattern(part) for part in parts]


def format_pattern(pattern: Pattern) -> str:
    return str(pattern)
