from enum import Enum
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Tuple, Union

from permcensus.core.errors import InvalidPattern, InvalidPermutation

Term = Union[int, Fraction]


def _is_rearrangement(values: Tuple[int, ...]) -> bool:
    return sorted(values) == list(range(1, len(values) + 1))


@dataclass(frozen=True)
class Permutation:
    """
    A permutation in one-line notation: values[i-1] is the image of position i.

    Values and positions are 1-based. The empty permutation is allowed.
    """
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not _is_rearrangement(values):
            raise InvalidPermutation(
                f"{values} is not a rearrangement of 1..{len(values)}."
            )

    @classmethod
    def of(cls, *values: int) -> "Permutation":
        return cls(tuple(values))

    @property
    def n(self) -> int:
        return len(self.values)

    def at(self, position: int) -> int:
        """Value at a 1-based position."""
        return self.values[position - 1]

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class Pattern:
    """
    A short permutation used as a containment template. Length k >= 1.
    """
    values: Tuple[int, ...]

    def __post_init__(self) -> None:
        values = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", values)
        if not values:
            raise InvalidPattern("Patterns must have length at least 1.")
        if not _is_rearrangement(values):
            raise InvalidPattern(
                f"{values} is not a rearrangement of 1..{len(values)}."
            )

    @classmethod
    def of(cls, *values: int) -> "Pattern":
        return cls(tuple(values))

    @property
    def k(self) -> int:
        return len(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __iter__(self) -> Iterator[int]:
        return iter(self.values)

    def __str__(self) -> str:
        if self.k <= 9:
            return "".join(str(v) for v in self.values)
        return ",".join(str(v) for v in self.values)


@dataclass(frozen=True)
class Occurrence:
    """
    Strictly increasing 1-based positions witnessing a pattern in a host.
    """
    positions: Tuple[int, ...]

    def __post_init__(self) -> None:
        positions = tuple(self.positions)
        object.__setattr__(self, "positions", positions)
        if any(a >= b for a, b in zip(positions, positions[1:])):
            raise ValueError(f"Occurrence positions {positions} are not increasing.")
        if positions and positions[0] < 1:
            raise ValueError("Occurrence positions are 1-based.")

    def values_in(self, perm: Permutation) -> Tuple[int, ...]:
        return tuple(perm.at(p) for p in self.positions)


class ConstraintKind(str, Enum):
    """
    Per-pattern rule of a permutation class.
    """
    AVOID = "avoid"
    EXACTLY = "exactly"
    ANY = "any"


@dataclass(frozen=True)
class ClassConstraint:
    kind: ConstraintKind
    r: int = 0

    def __post_init__(self) -> None:
        if self.r < 0:
            raise ValueError("Occurrence counts are nonnegative.")
        if self.kind is not ConstraintKind.EXACTLY and self.r != 0:
            raise ValueError(f"{self.kind.value} takes no count.")

    @classmethod
    def avoid(cls) -> "ClassConstraint":
        return cls(ConstraintKind.AVOID)

    @classmethod
    def exactly(cls, r: int) -> "ClassConstraint":
        return cls(ConstraintKind.EXACTLY, r)

    @classmethod
    def any(cls) -> "ClassConstraint":
        return cls(ConstraintKind.ANY)

    @property
    def target(self) -> Optional[int]:
        """Required count, None when unconstrained. Avoid is Exactly(0)."""
        if self.kind is ConstraintKind.ANY:
            return None
        return self.r

    def admits(self, count: int) -> bool:
        target = self.target
        return target is None or count == target


@dataclass(frozen=True)
class Sequence:
    """
    Integer (or rational) sequence with an explicit start index.

    terms[t] is the term at index start_index + t.
    """
    start_index: int
    terms: Tuple[Term, ...] = field(default_factory=tuple)

    def __post_init__(self) -> None:
        object.__setattr__(self, "terms", tuple(self.terms))

    @classmethod
    def from_terms(cls, start_index: int, terms: Iterable[Term]) -> "Sequence":
        return cls(start_index, tuple(terms))

    @property
    def end_index(self) -> int:
        """Index of the last term (start_index - 1 when empty)."""
        return self.start_index + len(self.terms) - 1

    def __len__(self) -> int:
        return len(self.terms)

    def __getitem__(self, index: int) -> Term:
        """Term at a sequence index (not a list offset)."""
        offset = index - self.start_index
        if offset < 0 or offset >= len(self.terms):
            raise IndexError(f"Index {index} outside {self.start_index}..{self.end_index}.")
        return self.terms[offset]

    def indices(self) -> range:
        return range(self.start_index, self.end_index + 1)

    def items(self) -> Iterator[Tuple[int, Term]]:
        return zip(self.indices(), self.terms)
