"""
Exact evaluators for the closed forms and recurrences counting the 123/132
classes, plus the single-pattern formulas used as independent cross-checks.

All arithmetic is on Python integers; nothing here touches floating point.
"""
from math import gcd
from typing import Callable, Dict, List, Tuple

from permcensus.core.errors import DomainError, InternalError
from permcensus.core.types import Sequence


def binomial(n: int, k: int) -> int:
    """
    C(n, k) by the multiplicative formula.

    Each partial product C(n-k+i, i) is an integer, so every step divides
    exactly; the running factor is reduced by its gcd with the divisor first
    to keep intermediates small.
    """
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    result = 1
    for i in range(1, k + 1):
        factor = n - k + i
        shared = gcd(factor, i)
        result = (result // (i // shared)) * (factor // shared)
    return result


def _require(n: int, minimum: int, name: str) -> None:
    if n < minimum:
        raise DomainError(f"{name} is stated for n >= {minimum}, got n={n}.")


def lemma1(n: int) -> int:
    """Permutations of length n with exactly one 12-pattern: n - 1."""
    _require(n, 2, "lemma1")
    return n - 1


def lemma2(n: int) -> int:
    """Permutations of length n avoiding both 123 and 132: 2^(n-1)."""
    _require(n, 1, "lemma2")
    return 1 << (n - 1)


def lemma2_recurrence(n_max: int) -> Sequence:
    """
    f_1..f_{n_max} from f_n = sum_{i=1..n} f_{n-i} + 1 with f_0 = 0.
    """
    _require(n_max, 1, "lemma2_recurrence")
    f = [0]
    for n in range(1, n_max + 1):
        f.append(sum(f[n - i] for i in range(1, n + 1)) + 1)
    return Sequence(1, tuple(f[1:]))


def theorem1_closed(n: int) -> int:
    """Exactly one 123 and no 132: (n-2) 2^(n-3)."""
    _require(n, 3, "thm1")
    return (n - 2) << (n - 3)


def theorem1_recurrence(n_max: int) -> Sequence:
    """
    g_0..g_{n_max} from the insertion recurrence

        g_n = sum_{i=1..n} g_{n-i} + sum_{i=3..n-1} (i-2) 2^(n-i-1) + n - 2

    with g_0 = g_1 = g_2 = 0. The returned sequence starts at index 0.
    """
    _require(n_max, 3, "theorem1_recurrence")
    g = [0, 0, 0]
    for n in range(3, n_max + 1):
        case_one = sum(g[n - i] for i in range(1, n + 1))
        case_two = sum((i - 2) << (n - i - 1) for i in range(3, n)) + n - 2
        g.append(case_one + case_two)
    return Sequence(0, tuple(g))


def theorem1_findrec(n_max: int) -> Sequence:
    """
    h_0..h_{n_max}: h_0 = h_1 = h_2 = 0, h_3 = 1, h_4 = 4 and
    h_n = 4 (h_{n-1} - h_{n-2}) for n >= 5.
    """
    _require(n_max, 4, "theorem1_findrec")
    h = [0, 0, 0, 1, 4]
    for n in range(5, n_max + 1):
        h.append(4 * (h[n - 1] - h[n - 2]))
    return Sequence(0, tuple(h))


def theorem2_closed(n: int) -> int:
    """Exactly one 132 and no 123; equinumerous with the theorem 1 class."""
    _require(n, 3, "thm2")
    return (n - 2) << (n - 3)


def theorem3_closed(n: int) -> int:
    """Exactly one 123 and exactly one 132: (n-3)(n-4) 2^(n-5)."""
    _require(n, 5, "thm3")
    return ((n - 3) * (n - 4)) << (n - 5)


def theorem3_recurrence_printed(n_max: int) -> Sequence:
    """
    g_0..g_{n_max} from the combined recurrence exactly as published:

        g_n = sum_{i=1..n} g_{n-i} + sum_{i=1..n-4} (2i(n-i-4) + n - 3) 2^(n-i-4)

    with g_0 = g_1 = g_2 = g_3 = g_4 = 0. Agrees with theorem3_closed at n = 5
    and gives 15 instead of 12 at n = 6; kept to document that erratum.
    """
    _require(n_max, 5, "theorem3_recurrence_printed")
    g = [0, 0, 0, 0, 0]
    for n in range(5, n_max + 1):
        earlier = sum(g[n - i] for i in range(1, n + 1))
        inserted = sum(
            (2 * i * (n - i - 4) + n - 3) << (n - i - 4) for i in range(1, n - 3)
        )
        g.append(earlier + inserted)
    return Sequence(0, tuple(g))


def _subcase_terms(g: List[int], n: int) -> Tuple[int, int, int, int]:
    # I-A: the 123 and the 132 both follow n.
    first_a = sum(g[n - i] for i in range(1, n + 1))
    # I-B: one 12 in the i-1 entries before n (i-2 choices) times one 132 and
    # no 123 in the n-i entries after it ((n-i-2) 2^(n-i-3) choices). The
    # published (i-2)(n-i-3) 2^(n-i-2) does not match this count.
    first_b = sum((i - 2) * (n - i - 2) << (n - i - 3) for i in range(3, n - 2))
    # II-A: forced prefix with one 12, double avoider after n.
    second_a = sum((i - 3) << (n - i - 1) for i in range(4, n))
    # II-B: decreasing prefix, one 123 and no 132 after n.
    second_b = sum((n - i - 2) << (n - i - 3) for i in range(2, n - 2))
    return first_a, first_b, second_a, second_b


def theorem3_subcase_terms(n: int) -> Tuple[int, int, int, int]:
    """
    The four subcase contributions (I-A, I-B, II-A, II-B) to g_n, with the
    corrected I-B term. Earlier g values come from the same recurrence.
    """
    _require(n, 5, "theorem3_subcase_terms")
    g = list(theorem3_recurrence_subcases(max(n - 1, 5)).terms)[:n]
    return _subcase_terms(g, n)


def theorem3_recurrence_subcases(n_max: int) -> Sequence:
    """
    g_0..g_{n_max} as the sum of the four subcase contributions, using the
    corrected I-B term (i-2)(n-i-2) 2^(n-i-3). Equals theorem3_closed for
    every n >= 5.
    """
    _require(n_max, 5, "theorem3_recurrence_subcases")
    g = [0, 0, 0, 0, 0]
    for n in range(5, n_max + 1):
        g.append(sum(_subcase_terms(g, n)))
    return Sequence(0, tuple(g))


def theorem3_reindexed(n_max: int) -> Sequence:
    """
    f_1..f_{n_max} with f_1 = 2 and n f_{n+1} = 2 (n+2) f_n; f_m = g_{m+4}.
    """
    _require(n_max, 1, "theorem3_reindexed")
    f = [2]
    for n in range(1, n_max):
        numerator = 2 * (n + 2) * f[-1]
        quotient, remainder = divmod(numerator, n)
        if remainder:
            raise InternalError(f"f_{n + 1} is not an integer.")
        f.append(quotient)
    return Sequence(1, tuple(f))


def noonan(n: int) -> int:
    """Exactly one 123-pattern: (3/n) C(2n, n+3)."""
    _require(n, 3, "noonan")
    quotient, remainder = divmod(3 * binomial(2 * n, n + 3), n)
    if remainder:
        raise InternalError(f"3 C({2 * n}, {n + 3}) is not divisible by {n}.")
    return quotient


def bona(n: int) -> int:
    """Exactly one 132-pattern: C(2n-3, n-3)."""
    _require(n, 3, "bona")
    return binomial(2 * n - 3, n - 3)


def _printed_value(n: int) -> int:
    return int(theorem3_recurrence_printed(max(n, 5)).terms[n])


FORMULAS: Dict[str, Callable[[int], int]] = {
    "lemma1": lemma1,
    "lemma2": lemma2,
    "thm1": theorem1_closed,
    "thm2": theorem2_closed,
    "thm3": theorem3_closed,
    "thm3-printed": _printed_value,
    "noonan": noonan,
    "bona": bona,
}

MINIMUM_N: Dict[str, int] = {
    "lemma1": 2,
    "lemma2": 1,
    "thm1": 3,
    "thm2": 3,
    "thm3": 5,
    "thm3-printed": 5,
    "noonan": 3,
    "bona": 3,
}


def evaluate(identifier: str, n: int) -> int:
    """
    Evaluates a formula by its stable identifier.

    Raises:
        KeyError: For an unknown identifier.
        DomainError: Below the formula's stated range.
    """
    formula = FORMULAS[identifier]
    _require(n, MINIMUM_N[identifier], identifier)
    return formula(n)


def minimum_n(identifier: str) -> int:
    return MINIMUM_N[identifier]
