"""Exception taxonomy shared by every hypermat module."""

from __future__ import annotations


class HypermatError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatch(HypermatError):
    """Operands do not have compatible orders."""


class SingularMatrix(HypermatError):
    """A matrix that must be inverted is singular to working precision."""


class SingularShift(SingularMatrix):
    """An integer shift of a parameter matrix is singular.

    Carries the offending shift index so callers can report which factor
    of an inverse Pochhammer chain (or which C - kI) failed.
    """

    def __init__(self, message: str, shift: int):
        super().__init__(message)
        self.shift = shift


class NonConvergent(HypermatError):
    """An iterative linear-algebra routine exceeded its iteration budget
    or overflowed (matrix exponential, eigenvalue iteration)."""


class Overflow(HypermatError):
    """A scaled accumulation left the representable range."""


class NotConverged(HypermatError):
    """A truncated series hit max_degree before the stopping rule fired.

    The partial result is attached as ``report`` (converged flag False).
    """

    def __init__(self, message: str, report=None):
        super().__init__(message)
        self.report = report


class DomainViolation(HypermatError):
    """Evaluation point lies outside the convergence region."""


class HypothesisViolated(HypermatError):
    """Identity hypotheses (commutation or invertibility) do not hold."""


class GenerationFailed(HypermatError):
    """Random input generation exhausted its retry budget."""


class UnknownIdentity(HypermatError):
    """An identity id that is not in the catalog."""


class ParseError(HypermatError):
    """An input document failed validation.

    ``location`` is a dotted/indexed path such as ``matrices.A[1][0]``.
    """

    def __init__(self, location: str, message: str):
        super().__init__(f"{location}: {message}")
        self.location = location
