"""
The map phi between

    S = {exactly one 123, no 132}   and   T = {exactly one 132, no 123},

which swaps the values b and c of the unique occurrence abc, and its
exhaustive verification.
"""
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set, Tuple

from permcensus.core.config import DEFAULT_BLOCK_SIZE
from permcensus.core.enumeration import iter_blocks
from permcensus.core.errors import AmbiguousOccurrence, NoOccurrence, NotInDomain
from permcensus.core.kernels import count_vectors
from permcensus.core.patterns import avoids, find_occurrences, parse_pattern
from permcensus.core.types import Occurrence, Pattern, Permutation

INCREASING = parse_pattern("123")
PEAK = parse_pattern("132")


@dataclass(frozen=True)
class PatternTriple:
    """
    Values a, b, c of a length-3 occurrence, in host order, and its positions.
    """
    a: int
    b: int
    c: int
    occurrence: Occurrence

    @property
    def positions(self) -> Tuple[int, ...]:
        return self.occurrence.positions


def locate_unique(perm: Permutation, pattern: Pattern) -> PatternTriple:
    """
    Returns the occurrence of a length-3 pattern when it is the only one.

    Raises:
        NoOccurrence: If the pattern does not occur.
        AmbiguousOccurrence: If it occurs twice or more; carries the first
                             two witnesses.
    """
    if pattern.k != 3:
        raise ValueError(f"locate_unique expects a length-3 pattern, got {pattern}.")
    check = f"exactly one {pattern}"
    found = find_occurrences(perm, pattern, limit=2)
    if not found:
        raise NoOccurrence(check, f"{perm} contains no {pattern}.")
    if len(found) > 1:
        raise AmbiguousOccurrence(check, [o.positions for o in found])
    occurrence = found[0]
    a, b, c = occurrence.values_in(perm)
    return PatternTriple(a, b, c, occurrence)


def _swap_middle_and_last(perm: Permutation, triple: PatternTriple) -> Permutation:
    values = list(perm.values)
    _, second, third = triple.positions
    values[second - 1], values[third - 1] = values[third - 1], values[second - 1]
    return Permutation(tuple(values))


def _map(perm: Permutation, avoided: Pattern, unique: Pattern) -> Permutation:
    if not avoids(perm, avoided):
        raise NotInDomain(f"avoids {avoided}", f"{perm} contains {avoided}.")
    return _swap_middle_and_last(perm, locate_unique(perm, unique))


def phi(s: Permutation) -> Permutation:
    """
    Maps s in S to T: b and c of the unique 123-occurrence switch places.

    Raises:
        NotInDomain: If s contains 132 or does not have exactly one 123
                     (NoOccurrence / AmbiguousOccurrence are NotInDomain).
    """
    return _map(s, PEAK, INCREASING)


def phi_inverse(t: Permutation) -> Permutation:
    """
    Maps t in T back to S: b and c of the unique 132-occurrence switch places.

    Raises:
        NotInDomain: If t contains 123 or does not have exactly one 132.
    """
    return _map(t, INCREASING, PEAK)


@dataclass
class BijectionFailure:
    permutation: Optional[Permutation]
    reason: str


@dataclass
class BijectionReport:
    n: int
    size_s: int
    size_t: int
    expected: int
    failures: List[BijectionFailure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def class_members(n: int, block_size: int = DEFAULT_BLOCK_SIZE) -> Tuple[List[Permutation], List[Permutation]]:
    """
    S and T of length n, obtained by filtering S_n with the census kernel.
    """
    s_members: List[Permutation] = []
    t_members: List[Permutation] = []
    if n < 3:
        return s_members, t_members
    for first in range(1, n + 1):
        for block in iter_blocks(n, first, block_size):
            counts = count_vectors(block, (INCREASING, PEAK))
            in_s = (counts[:, 0] == 1) & (counts[:, 1] == 0)
            in_t = (counts[:, 0] == 0) & (counts[:, 1] == 1)
            s_members.extend(Permutation(tuple(row)) for row in block[in_s].tolist())
            t_members.extend(Permutation(tuple(row)) for row in block[in_t].tolist())
    return s_members, t_members


def verify_bijection(n: int, block_size: int = DEFAULT_BLOCK_SIZE) -> BijectionReport:
    """
    Checks phi exhaustively on length n: phi(S) lies in T, phi is injective,
    both compositions with phi_inverse are identities, and
    |S| = |T| = (n-2) 2^(n-3). Failures are reported, never raised.
    """
    s_members, t_members = class_members(n, block_size)
    expected = (n - 2) << (n - 3) if n >= 3 else 0
    report = BijectionReport(n, len(s_members), len(t_members), expected)
    t_set: Set[Permutation] = set(t_members)
    images: Dict[Permutation, Permutation] = {}

    for s in s_members:
        try:
            image = phi(s)
        except NotInDomain as e:
            report.failures.append(BijectionFailure(s, f"phi rejected a member of S: {e}"))
            continue
        if image not in t_set:
            report.failures.append(BijectionFailure(s, f"phi(s) = {image} is not in T"))
        if image in images:
            report.failures.append(BijectionFailure(
                s, f"phi(s) = {image} = phi({images[image]})"
            ))
        images[image] = s
        try:
            back = phi_inverse(image)
        except NotInDomain as e:
            report.failures.append(BijectionFailure(s, f"phi_inverse rejected phi(s): {e}"))
            continue
        if back != s:
            report.failures.append(BijectionFailure(s, f"phi_inverse(phi(s)) = {back}"))

    for t in t_members:
        try:
            round_trip = phi(phi_inverse(t))
        except NotInDomain as e:
            report.failures.append(BijectionFailure(t, f"round trip from T failed: {e}"))
            continue
        if round_trip != t:
            report.failures.append(BijectionFailure(t, f"phi(phi_inverse(t)) = {round_trip}"))

    if not (report.size_s == report.size_t == expected):
        report.failures.append(BijectionFailure(
            None,
            f"|S| = {report.size_s}, |T| = {report.size_t}, expected {expected}",
        ))
    return report
