import pytest
from hypothesis import given
from hypothesis import strategies as st

from permcensus.core.enumeration import iter_permutations
from permcensus.core.errors import InvalidPattern, InvalidPermutation, InvalidWindow
from permcensus.core.patterns import (
    avoids,
    complement,
    complement_pattern,
    count_occurrences_naive,
    find_occurrences,
    format_pattern,
    inverse,
    parse_pattern,
    parse_patterns,
    parse_permutation,
    reverse,
    standardize,
)
from permcensus.core.types import Occurrence, Pattern, Permutation


def perms(max_n: int = 8, min_n: int = 0):
    return st.integers(min_value=min_n, max_value=max_n).flatmap(
        lambda n: st.permutations(list(range(1, n + 1)))
    ).map(lambda values: Permutation(tuple(values)))


@pytest.mark.parametrize(
    "window, expected",
    [((5, 2, 9), (2, 1, 3)), ((1, 2, 3), (1, 2, 3)), ((7, 3), (2, 1)), ((-4,), (1,))],
)
def test_standardize_ranks(window, expected):
    assert standardize(window).values == expected


@pytest.mark.parametrize("window", [(), (3, 1, 3)])
def test_standardize_rejects_bad_windows(window):
    with pytest.raises(InvalidWindow):
        standardize(window)


@given(st.lists(st.integers(-1000, 1000), min_size=1, max_size=9, unique=True))
def test_standardize_preserves_relative_order(window):
    ranks = standardize(window).values
    assert sorted(ranks) == list(range(1, len(window) + 1))
    for i in range(len(window)):
        for j in range(len(window)):
            assert (window[i] < window[j]) == (ranks[i] < ranks[j])


@pytest.mark.parametrize(
    "perm, pattern, expected",
    [
        ((1, 3, 2), (1, 3, 2), 1),
        ((1, 2, 3, 4, 5, 6), (1, 2, 3), 20),
        ((2, 3, 1, 4), (1, 2, 3), 1),
        ((4, 1, 2, 3), (1, 3, 2), 0),
        ((3, 2, 1), (1, 2), 0),
        ((1, 2), (1, 2, 3), 0),
    ],
)
def test_count_occurrences_naive_examples(perm, pattern, expected):
    assert count_occurrences_naive(Permutation(perm), Pattern(pattern)) == expected


@pytest.mark.parametrize(
    "perm, pattern, expected",
    [
        ((2, 3, 1, 4), (1, 3, 2), True),
        ((1, 3, 2, 4), (1, 3, 2), False),
        ((3, 2, 1), (1, 2), True),
    ],
)
def test_avoids_examples(perm, pattern, expected):
    assert avoids(Permutation(perm), Pattern(pattern)) is expected


def test_find_occurrences_examples():
    assert find_occurrences(Permutation.of(1, 2, 3), Pattern.of(1, 2, 3)) == [Occurrence((1, 2, 3))]
    assert find_occurrences(Permutation.of(2, 3, 1, 4), Pattern.of(1, 2, 3)) == [Occurrence((1, 2, 4))]
    assert find_occurrences(Permutation.of(3, 2, 1), Pattern.of(1, 2, 3)) == []


def test_find_occurrences_limit_stops_early():
    found = find_occurrences(Permutation.of(1, 2, 3, 4), Pattern.of(1, 2, 3), limit=2)
    assert [o.positions for o in found] == [(1, 2, 3), (1, 2, 4)]
    with pytest.raises(ValueError):
        find_occurrences(Permutation.of(1, 2), Pattern.of(1, 2), limit=0)


@given(perms(8), st.sampled_from(["12", "21", "123", "132", "213", "231", "312", "321"]))
def test_occurrence_list_matches_count(perm, text):
    pattern = parse_pattern(text)
    found = find_occurrences(perm, pattern)
    assert len(found) == count_occurrences_naive(perm, pattern)
    assert [o.positions for o in found] == sorted(o.positions for o in found)
    for occurrence in found:
        assert standardize(occurrence.values_in(perm)) == pattern


@given(perms(8), st.sampled_from(["12", "123", "132", "1342", "2413"]))
def test_complement_maps_occurrences(perm, text):
    pattern = parse_pattern(text)
    assert count_occurrences_naive(perm, pattern) == count_occurrences_naive(
        complement(perm), complement_pattern(pattern)
    )


@given(perms(9))
def test_symmetries_are_involutions(perm):
    assert complement(complement(perm)) == perm
    assert reverse(reverse(perm)) == perm
    assert inverse(inverse(perm)) == perm


def test_inverse_example():
    assert inverse(Permutation.of(2, 3, 1, 4)) == Permutation.of(3, 1, 2, 4)


@pytest.mark.parametrize("text", ["2,3,1,4", "2314", " 2, 3, 1, 4 "])
def test_parse_permutation_forms(text):
    assert parse_permutation(text) == Permutation.of(2, 3, 1, 4)


def test_parse_permutation_long_comma_form():
    text = ",".join(str(v) for v in range(12, 0, -1))
    assert parse_permutation(text).n == 12


@pytest.mark.parametrize("text", ["1,1,2", "0,1", "1,x", "1,,2", "2"])
def test_parse_permutation_rejects_malformed(text):
    with pytest.raises(InvalidPermutation):
        parse_permutation(text)


@pytest.mark.parametrize("text", ["", "113", "a"])
def test_parse_pattern_rejects_malformed(text):
    with pytest.raises(InvalidPattern):
        parse_pattern(text)


def test_parse_patterns_separators():
    assert parse_patterns("123,132") == [Pattern.of(1, 2, 3), Pattern.of(1, 3, 2)]
    assert parse_patterns("1,2,3;1,3,2") == [Pattern.of(1, 2, 3), Pattern.of(1, 3, 2)]
    with pytest.raises(InvalidPattern):
        parse_patterns(" , ")


def test_format_pattern():
    assert format_pattern(Pattern.of(1, 3, 2)) == "132"
    ten = Pattern(tuple(range(10, 0, -1)))
    assert format_pattern(ten) == "10,9,8,7,6,5,4,3,2,1"


SMALL_PATTERNS = [parse_pattern(t) for t in ("1", "12", "21", "123", "132", "231", "2413")]


def test_standardize_is_idempotent_up_to_seven():
    for n in range(1, 8):
        for perm in iter_permutations(n):
            spread = tuple(v * v + 5 for v in perm.values)
            ranked = standardize(spread)
            assert ranked.values == perm.values
            assert standardize(ranked.values) == ranked
            prefix = standardize(spread[: n - 1]) if n > 1 else ranked
            assert standardize(prefix.values) == prefix


def test_avoids_find_and_count_agree_up_to_seven():
    for n in range(0, 8):
        for perm in iter_permutations(n):
            for pattern in SMALL_PATTERNS:
                if pattern.k > n:
                    continue
                count = count_occurrences_naive(perm, pattern)
                first = find_occurrences(perm, pattern, limit=1)
                assert avoids(perm, pattern) == (first == []) == (count == 0)


def test_complement_symmetry_up_to_seven():
    for n in range(1, 8):
        for perm in iter_permutations(n):
            mirrored = complement(perm)
            for pattern in SMALL_PATTERNS:
                if pattern.k > n:
                    continue
                assert count_occurrences_naive(perm, pattern) == count_occurrences_naive(
                    mirrored, complement_pattern(pattern)
                )
