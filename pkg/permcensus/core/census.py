"""
Exhaustive censuses of S_n.

A census is the joint distribution of occurrence counts of a fixed list of
patterns over all n! permutations. Counting classes such as "avoid 132 and
contain exactly one 123" reduces to reading rows of a census.
"""
from dataclasses import dataclass, field
from math import comb, factorial
from typing import Callable, Dict, List, Optional, Sequence as SequenceT, Tuple

import numpy as np

from permcensus.core.config import DEFAULT_BLOCK_SIZE, DEFAULT_CENSUS_BUDGET
from permcensus.core.enumeration import iter_blocks
from permcensus.core.errors import BudgetExceeded
from permcensus.core.kernels import count_vectors
from permcensus.core.patterns import parse_pattern
from permcensus.core.types import ClassConstraint, Pattern

CountVector = Tuple[int, ...]


@dataclass
class CensusTable:
    """
    Sparse map from joint count vectors to class cardinalities.

    Only realized vectors appear as rows. For a complete census the
    cardinalities sum to n!.
    """
    n: int
    patterns: Tuple[Pattern, ...]
    rows: Dict[CountVector, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        self.patterns = tuple(self.patterns)

    def add(self, counts: CountVector, cardinality: int) -> None:
        if cardinality:
            self.rows[counts] = self.rows.get(counts, 0) + cardinality

    def merge(self, other: "CensusTable") -> "CensusTable":
        """Pointwise addition of two tables over the same n and patterns."""
        if other.n != self.n or other.patterns != self.patterns:
            raise ValueError("Cannot merge censuses of different shapes.")
        merged = CensusTable(self.n, self.patterns, dict(self.rows))
        for counts, cardinality in other.rows.items():
            merged.add(counts, cardinality)
        return merged

    def __add__(self, other: "CensusTable") -> "CensusTable":
        return self.merge(other)

    @property
    def total(self) -> int:
        return sum(self.rows.values())

    def cardinality(self, counts: CountVector) -> int:
        return self.rows.get(tuple(counts), 0)

    def sorted_rows(self) -> List[Tuple[CountVector, int]]:
        """Rows in lexicographic order of their count vectors."""
        return sorted(self.rows.items())

    def count_where(self, predicate: Callable[[CountVector], bool]) -> int:
        return sum(c for counts, c in self.rows.items() if predicate(counts))

    def max_counts(self) -> Tuple[int, ...]:
        """Upper bound C(n, k_j) for each pattern's count."""
        return tuple(comb(self.n, p.k) for p in self.patterns)


def check_budget(n: int, budget: int = DEFAULT_CENSUS_BUDGET) -> None:
    if n > budget:
        raise BudgetExceeded(n, budget)


def _validate(n: int, patterns: SequenceT[Pattern]) -> Tuple[Pattern, ...]:
    if n < 0:
        raise ValueError("n must be nonnegative.")
    if not patterns:
        raise ValueError("At least one pattern is required.")
    for pattern in patterns:
        if pattern.k > n:
            raise ValueError(f"Pattern {pattern} is longer than n={n}.")
    return tuple(patterns)


def tabulate_block(table: CensusTable, block: np.ndarray) -> None:
    """Adds the count vectors of every row of `block` to `table`."""
    if block.shape[0] == 0:
        return
    vectors = count_vectors(block, table.patterns)
    unique, multiplicity = np.unique(vectors, axis=0, return_counts=True)
    for counts, cardinality in zip(unique.tolist(), multiplicity.tolist()):
        table.add(tuple(int(c) for c in counts), int(cardinality))


def census_shard(
    n: int,
    patterns: SequenceT[Pattern],
    first: int,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> CensusTable:
    """
    Census of the permutations of length n whose first entry is `first`.

    Shards for first = 1..n partition S_n; merging them gives the full census.
    """
    table = CensusTable(n, tuple(patterns))
    for block in iter_blocks(n, first, block_size):
        tabulate_block(table, block)
    return table


def joint_census(
    n: int,
    patterns: SequenceT[Pattern],
    budget: int = DEFAULT_CENSUS_BUDGET,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> CensusTable:
    """
    Joint occurrence census of the patterns over S_n, evaluated serially.

    Args:
        n: Permutation length.
        patterns: At least one pattern, none longer than n.
        budget: Largest n accepted.
        block_size: Rows handed to the numpy kernels at a time.

    Returns:
        CensusTable: Total mass n!.

    Raises:
        BudgetExceeded: If n > budget.
    """
    patterns = _validate(n, patterns)
    check_budget(n, budget)
    table = CensusTable(n, patterns)
    for first in range(1, n + 1):
        table = table.merge(census_shard(n, patterns, first, block_size))
    return table


def class_predicate(
    constraints: SequenceT[ClassConstraint],
) -> Callable[[CountVector], bool]:
    def admits(counts: CountVector) -> bool:
        return all(rule.admits(c) for rule, c in zip(constraints, counts))
    return admits


def fitting_constraints(
    n: int,
    constraints: SequenceT[Tuple[Pattern, ClassConstraint]],
) -> Optional[List[Tuple[Pattern, ClassConstraint]]]:
    """
    The constraints whose pattern fits in length n, or None when a longer
    pattern is required to occur (the class is then empty).

    A pattern longer than n has no occurrence, so it only admits Avoid,
    Exactly(0) and Any.
    """
    if not constraints:
        raise ValueError("At least one constraint is required.")
    fitting = []
    for pattern, rule in constraints:
        if pattern.k <= n:
            fitting.append((pattern, rule))
        elif not rule.admits(0):
            return None
    return fitting


def count_in_table(
    table: CensusTable, rules: SequenceT[ClassConstraint]
) -> int:
    return table.count_where(class_predicate(rules))


def count_class(
    n: int,
    constraints: SequenceT[Tuple[Pattern, ClassConstraint]],
    budget: int = DEFAULT_CENSUS_BUDGET,
    block_size: int = DEFAULT_BLOCK_SIZE,
) -> int:
    """
    Number of permutations of length n meeting every constraint at once.

    Raises:
        BudgetExceeded: If n > budget.
    """
    check_budget(n, budget)
    fitting = fitting_constraints(n, constraints)
    if fitting is None:
        return 0
    if not fitting:
        return factorial(n)
    table = joint_census(n, [p for p, _ in fitting], budget, block_size)
    return count_in_table(table, [rule for _, rule in fitting])


def binary_decomposition(value: int) -> List[int]:
    """Powers of two summing to value, largest first (greedy)."""
    if value < 0:
        raise ValueError("value must be nonnegative.")
    return [1 << bit for bit in range(value.bit_length() - 1, -1, -1) if value >> bit & 1]


@dataclass(frozen=True)
class ConjectureRow:
    n: int
    r: int
    cardinality: int
    decomposition: Tuple[int, ...]
    # All 132-avoiders of length n, whatever their 123 count (a Catalan number).
    avoiders: int


CONJECTURE_AVOIDED = parse_pattern("132")
CONJECTURE_COUNTED = parse_pattern("123")


def conjecture_rows(table: CensusTable, r_max: int) -> List[ConjectureRow]:
    """
    Rows (n, r, count of 132-avoiders with exactly r 123s) for r <= r_max,
    read from a census of (132, 123). Each row also carries the number of
    132-avoiders of length n; r = 0 alone is the double-avoider class.
    """
    avoiders = table.count_where(lambda counts: counts[0] == 0)
    rows = []
    for r in range(r_max + 1):
        cardinality = table.cardinality((0, r))
        rows.append(ConjectureRow(
            table.n, r, cardinality, tuple(binary_decomposition(cardinality)), avoiders
        ))
    return rows


def conjecture_report(
    n_max: int,
    r_max: int,
    budget: int = DEFAULT_CENSUS_BUDGET,
    block_size: int = DEFAULT_BLOCK_SIZE,
    n_min: int = 1,
) -> List[ConjectureRow]:
    """
    For every n_min <= n <= n_max and r <= r_max, the number of 132-avoiding
    permutations with exactly r occurrences of 123, with a greedy binary
    decomposition of each count. Makes no claim about the decompositions.
    """
    if r_max < 0:
        raise ValueError("r_max must be nonnegative.")
    check_budget(n_max, budget)
    report: List[ConjectureRow] = []
    for n in range(max(n_min, 1), n_max + 1):
        report.extend(conjecture_rows(conjecture_table(n, budget, block_size), r_max))
    return report


def conjecture_table(
    n: int, budget: int = DEFAULT_CENSUS_BUDGET, block_size: int = DEFAULT_BLOCK_SIZE
) -> CensusTable:
    if n < 3:
        # No length-3 occurrences exist: all n! permutations sit in row (0, 0).
        table = CensusTable(n, (CONJECTURE_AVOIDED, CONJECTURE_COUNTED))
        table.add((0, 0), factorial(n))
        return table
    return joint_census(n, [CONJECTURE_AVOIDED, CONJECTURE_COUNTED], budget, block_size)
