# src/core/errors.py
from typing import Optional


class DucciError(ValueError):
    """Base class for every domain error raised by the library."""


class InvalidDimensions(DucciError):
    """n < 2, m < 2, or a size limit was exceeded."""


class ShapeMismatch(DucciError):
    """Two operands disagree on length or modulus."""


class OddLength(DucciError):
    """An operation that needs even n was given odd n."""


class NoPredecessor(DucciError):
    """The tuple's alternating sum is nonzero, so nothing maps onto it."""


class NotPrime(DucciError):
    """A modulus that must be prime is not."""


class PreconditionViolated(DucciError):
    """A lemma or fact was asked about parameters outside its hypotheses."""


class UnsupportedOddN(DucciError):
    """No closed form is available for odd n with odd m."""


class OutputUnwritable(DucciError):
    """A result file could not be created or appended to."""


class TupleParseError(DucciError):
    """Tuple text could not be parsed or holds an entry outside [0, m)."""


class BudgetExceeded(DucciError):
    """The orbit did not close within the iteration or storage budget."""

    def __init__(self, message: str, steps_used: int, states_stored: Optional[int] = None):
        super().__init__(message)
        self.steps_used = steps_used
        self.states_stored = states_stored
