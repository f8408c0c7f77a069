from typing import Optional, Sequence, Tuple


class PermCensusError(Exception):
    """
    Root of every error raised by permcensus.
    """


class InvalidWindow(PermCensusError, ValueError):
    pass


class InvalidPermutation(PermCensusError, ValueError):
    pass


class InvalidPattern(PermCensusError, ValueError):
    pass


class UnsupportedPattern(PermCensusError, ValueError):
    """
    Raised by the optimized kernels for patterns they do not handle.
    Callers fall back to the naive counter.
    """


class BudgetExceeded(PermCensusError):
    def __init__(self, n: int, limit: int) -> None:
        super().__init__(
            f"Census of S_{n} exceeds the configured budget (n <= {limit})."
        )
        self.n = n
        self.limit = limit


class DomainError(PermCensusError, ValueError):
    pass


class InternalError(PermCensusError, RuntimeError):
    pass


class NotInDomain(PermCensusError, ValueError):
    """
    A map was applied outside the set it is defined on.
    `check` names the precondition that failed.
    """

    def __init__(self, check: str, message: Optional[str] = None) -> None:
        super().__init__(message or f"Precondition failed: {check}")
        self.check = check


class NoOccurrence(NotInDomain):
    pass


class AmbiguousOccurrence(NotInDomain):
    def __init__(self, check: str, witnesses: Sequence[Tuple[int, ...]]) -> None:
        shown = ", ".join(str(w) for w in witnesses)
        super().__init__(check, f"Precondition failed: {check}; witnesses {shown}")
        self.witnesses = tuple(witnesses)


class InsufficientData(PermCensusError, ValueError):
    pass


class SingularLeadingCoefficient(PermCensusError, ArithmeticError):
    def __init__(self, index: int) -> None:
        super().__init__(f"Top coefficient of the recurrence vanishes at m={index}.")
        self.index = index


class NonIntegralTerm(PermCensusError, ArithmeticError):
    def __init__(self, index: int) -> None:
        super().__init__(f"Extended term at index {index} is not an integer.")
        self.index = index
