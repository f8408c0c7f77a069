"""
Recovery of linear recurrences with polynomial coefficients from the first
terms of a sequence.

A recurrence of order r and degree d is stored in operator form,

    sum_{t=0..r} c_t(m) a(m+t) = 0,

so h_n = 4(h_{n-1} - h_{n-2}) is stored as 4 a(m) - 4 a(m+1) + a(m+2) = 0.
Candidate shapes are tried by increasing order, then degree; each shape is an
exact homogeneous linear system over the rationals in the (r+1)(d+1) unknown
polynomial coefficients, one equation per index where all terms exist.
"""
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Any, Dict, List, Optional, Sequence as SequenceT, Tuple

import structlog

from permcensus.core.config import DEFAULT_GUARD
from permcensus.core.errors import (
    InsufficientData,
    NonIntegralTerm,
    SingularLeadingCoefficient,
)
from permcensus.core.types import Sequence, Term

logger = structlog.get_logger(__name__)

Polynomial = Tuple[int, ...]


def eval_poly(poly: SequenceT[int], m: int) -> int:
    """Horner evaluation; coefficients are listed constant term first."""
    value = 0
    for coefficient in reversed(poly):
        value = value * m + coefficient
    return value


def _trim(poly: SequenceT[int]) -> Polynomial:
    coefficients = list(poly)
    while len(coefficients) > 1 and coefficients[-1] == 0:
        coefficients.pop()
    return tuple(coefficients) if coefficients else (0,)


def _leading(poly: Polynomial) -> int:
    return _trim(poly)[-1]


def _format_poly(poly: Polynomial) -> str:
    parts: List[str] = []
    for exponent in range(len(poly) - 1, -1, -1):
        coefficient = poly[exponent]
        if coefficient == 0:
            continue
        monomial = "" if exponent == 0 else ("m" if exponent == 1 else f"m^{exponent}")
        magnitude = abs(coefficient)
        body = monomial if monomial and magnitude == 1 else f"{magnitude}{monomial}"
        if not parts:
            parts.append(body if coefficient > 0 else f"-{body}")
        else:
            parts.append(f"+{body}" if coefficient > 0 else f"-{body}")
    return "".join(parts) or "0"


def _shift_label(t: int) -> str:
    return "a(m)" if t == 0 else f"a(m+{t})"


@dataclass(frozen=True)
class PolyRecurrence:
    """
    sum_{t=0..r} c_t(m) a(m+t) = 0 with integer polynomial coefficients.

    Normalized: c_r is nonzero with positive leading coefficient and the
    integer coefficients across all c_t have gcd 1.
    """
    coefficients: Tuple[Polynomial, ...]

    def __post_init__(self) -> None:
        trimmed = tuple(_trim(c) for c in self.coefficients)
        object.__setattr__(self, "coefficients", trimmed)
        if len(trimmed) < 2:
            raise ValueError("A recurrence needs order at least 1.")
        if trimmed[-1] == (0,):
            raise ValueError("The top coefficient c_r must not be the zero polynomial.")

    @classmethod
    def normalized(cls, coefficients: SequenceT[SequenceT[Fraction]]) -> "PolyRecurrence":
        """Scales rational coefficients to the canonical integer form."""
        flat = [Fraction(x) for poly in coefficients for x in poly]
        scale = lcm(*(x.denominator for x in flat)) if flat else 1
        integers = [[int(Fraction(x) * scale) for x in poly] for poly in coefficients]
        divisor = 0
        for poly in integers:
            for x in poly:
                divisor = gcd(divisor, x)
        divisor = divisor or 1
        integers = [[x // divisor for x in poly] for poly in integers]
        if _leading(tuple(integers[-1])) < 0:
            integers = [[-x for x in poly] for poly in integers]
        return cls(tuple(tuple(poly) for poly in integers))

    @property
    def order(self) -> int:
        return len(self.coefficients) - 1

    @property
    def degree(self) -> int:
        return max(len(c) - 1 for c in self.coefficients)

    def residual(self, m: int, terms: SequenceT[Term]) -> Term:
        """sum_t c_t(m) terms[t], where terms holds a(m)..a(m+r)."""
        return sum(eval_poly(c, m) * terms[t] for t, c in enumerate(self.coefficients))

    def evaluate(self, m: int, seq: Sequence) -> Term:
        """Residual of the relation at index m of seq."""
        return self.residual(m, [seq[m + t] for t in range(self.order + 1)])

    def describe(self) -> str:
        """
        Human form, e.g. "(m) a(m+1) - (2m+4) a(m) = 0".

        The term whose coefficient has the fewest monomials opens the
        equation with a positive sign (ties go to the smaller shift); the
        others follow in cyclic shift order.
        """
        nonzero = [(t, poly) for t, poly in enumerate(self.coefficients) if poly != (0,)]
        start = min(
            range(len(nonzero)),
            key=lambda i: (sum(1 for x in nonzero[i][1] if x), i),
        )
        sign = 1 if _leading(nonzero[start][1]) > 0 else -1
        terms: List[Tuple[bool, str]] = []
        for t, poly in nonzero[start:] + nonzero[:start]:
            signed = tuple(sign * x for x in poly)
            negative = _leading(signed) < 0
            magnitude = tuple(-x for x in signed) if negative else signed
            label = _shift_label(t)
            if len(magnitude) > 1:
                body = f"({_format_poly(magnitude)}) {label}"
            elif magnitude[0] == 1:
                body = label
            else:
                body = f"{magnitude[0]} {label}"
            terms.append((negative, body))
        text = terms[0][1]
        for negative, body in terms[1:]:
            text += f" - {body}" if negative else f" + {body}"
        return f"{text} = 0"

    def to_json(self) -> Dict[str, Any]:
        return {
            "order": self.order,
            "degree": self.degree,
            "coefficients": [list(c) for c in self.coefficients],
        }

    def __str__(self) -> str:
        return self.describe()


def minimum_terms(order: int, degree: int, guard: int) -> int:
    """Terms needed to attempt a shape: unknowns + order + guard."""
    return (order + 1) * (degree + 1) + order + guard


def _null_space(rows: List[List[Fraction]], width: int) -> List[List[Fraction]]:
    """
    Basis of the null space by Gauss-Jordan elimination over Fraction,
    one vector per free column, in column order.
    """
    matrix = [row[:] for row in rows]
    pivots: List[int] = []
    rank = 0
    for col in range(width):
        if rank == len(matrix):
            break
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col] != 0), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        lead = matrix[rank][col]
        matrix[rank] = [x / lead for x in matrix[rank]]
        for i in range(len(matrix)):
            if i != rank and matrix[i][col] != 0:
                factor = matrix[i][col]
                matrix[i] = [a - factor * b for a, b in zip(matrix[i], matrix[rank])]
        pivots.append(col)
        rank += 1

    basis: List[List[Fraction]] = []
    pivot_set = set(pivots)
    for free in (c for c in range(width) if c not in pivot_set):
        vector = [Fraction(0)] * width
        vector[free] = Fraction(1)
        for row_index, col in enumerate(pivots):
            vector[col] = -matrix[row_index][free]
        basis.append(vector)
    return basis


def _system(seq: Sequence, order: int, degree: int) -> List[List[Fraction]]:
    rows = []
    for m in range(seq.start_index, seq.end_index - order + 1):
        row = []
        for t in range(order + 1):
            term = Fraction(seq[m + t])
            row.extend(term * m ** e for e in range(degree + 1))
        rows.append(row)
    return rows


def _try_shape(seq: Sequence, order: int, degree: int) -> Optional[PolyRecurrence]:
    width = (order + 1) * (degree + 1)
    basis = _null_space(_system(seq, order, degree), width)
    if not basis:
        logger.debug("recfit.shape.rejected", order=order, degree=degree, reason="trivial null space")
        return None
    # Prefer the vector with the fewest trailing zeros: the last free column.
    for vector in reversed(basis):
        polys = [vector[t * (degree + 1):(t + 1) * (degree + 1)] for t in range(order + 1)]
        if any(x != 0 for x in polys[-1]):
            return PolyRecurrence.normalized(polys)
    logger.debug("recfit.shape.rejected", order=order, degree=degree, reason="vanishing top coefficient")
    return None


def fit(
    seq: Sequence,
    max_order: int,
    max_degree: int,
    guard: int = DEFAULT_GUARD,
) -> Optional[PolyRecurrence]:
    """
    Finds a recurrence annihilating every term of seq.

    Shapes are searched by ascending order r <= max_order, then ascending
    degree d <= max_degree. A shape is only attempted when seq has at least
    (r+1)(d+1) + r + guard terms, so every accepted solution also satisfies
    `guard` equations beyond the unknown count.

    Args:
        seq: Terms with their start index.
        max_order: Largest order r to try (>= 1).
        max_degree: Largest coefficient degree d to try (>= 0).
        guard: Extra equations required beyond the unknowns.

    Returns:
        Optional[PolyRecurrence]: The normalized recurrence of the first shape
                                  admitting a nonzero solution, or None.

    Raises:
        InsufficientData: If seq is too short even for order 1, degree 0.
    """
    if max_order < 1 or max_degree < 0 or guard < 0:
        raise ValueError("Need max_order >= 1, max_degree >= 0 and guard >= 0.")
    needed = minimum_terms(1, 0, guard)
    if len(seq) < needed:
        raise InsufficientData(
            f"{len(seq)} terms given; the smallest shape needs {needed} (guard={guard})."
        )
    for order in range(1, max_order + 1):
        for degree in range(max_degree + 1):
            if len(seq) < minimum_terms(order, degree, guard):
                logger.debug("recfit.shape.rejected", order=order, degree=degree, reason="too few terms")
                continue
            found = _try_shape(seq, order, degree)
            if found is not None:
                logger.debug("recfit.shape.accepted", order=order, degree=degree)
                return found
    return None


def apply(
    rec: PolyRecurrence,
    seed: Sequence,
    n_target: int,
    integral: bool = False,
) -> Sequence:
    """
    Extends seed with the recurrence up to index n_target (inclusive).

    Args:
        rec: Recurrence to unroll.
        seed: At least `rec.order` consecutive terms.
        n_target: Last index of the result.
        integral: Raise instead of producing a non-integral term.

    Raises:
        InsufficientData: If the seed is shorter than the order.
        SingularLeadingCoefficient: If c_r(m) = 0 where a(m+r) is needed.
        NonIntegralTerm: If integral is set and a term is not an integer.
    """
    order = rec.order
    if len(seed) < order:
        raise InsufficientData(f"Order {order} needs {order} seed terms, got {len(seed)}.")
    start = seed.start_index
    if n_target <= seed.end_index:
        return Sequence(start, seed.terms[:max(0, n_target - start + 1)])

    terms: List[Term] = list(seed.terms)
    top = rec.coefficients[-1]
    while start + len(terms) - 1 < n_target:
        index = start + len(terms)
        m = index - order
        pivot = eval_poly(top, m)
        if pivot == 0:
            raise SingularLeadingCoefficient(m)
        partial = sum(
            eval_poly(rec.coefficients[t], m) * terms[m - start + t] for t in range(order)
        )
        value = Fraction(-partial) / pivot
        if value.denominator == 1:
            terms.append(value.numerator)
        elif integral:
            raise NonIntegralTerm(index)
        else:
            terms.append(value)
    return Sequence(start, tuple(terms))


def verify(rec: PolyRecurrence, seq: Sequence) -> bool:
    """
    True iff the relation holds at every index where all needed terms exist.

    Raises:
        InsufficientData: If seq has fewer than order + 1 terms.
    """
    if len(seq) < rec.order + 1:
        raise InsufficientData(f"Need {rec.order + 1} terms to check order {rec.order}.")
    return all(
        rec.evaluate(m, seq) == 0
        for m in range(seq.start_index, seq.end_index - rec.order + 1)
    )
