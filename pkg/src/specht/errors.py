"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SpechtError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(SpechtError, ValueError):
    """A text representation could not be parsed."""


class NotAPartition(SpechtError, ValueError):
    """A sequence of integers fails to be a partition."""


class DomainError(SpechtError, ValueError):
    """Arguments fall outside the documented domain of an operation."""


class GroupSizeError(SpechtError):
    """An explicit enumeration would exceed the configured size bound."""


class NotInSpechtLattice(SpechtError):
    """An element of the tabloid module does not lie in the Specht lattice."""


class RelationViolation(SpechtError):
    """A proposed generator image does not satisfy a defining relation."""

    def __init__(self, message: str, word=None):
        super().__init__(message)
        self.word = word


class DivisibilityFailure(SpechtError):
    """An integer combination expected to be divisible by a factor is not."""


class NonIntegralDivision(SpechtError):
    """An exact division produced a non-integral result."""


class OrderMismatch(SpechtError):
    """A constructed morphism does not have the predicted order."""


def exact_div(a: int, b: int) -> int:
    """Return ``a // b``, raising :class:`NonIntegralDivision` unless exact."""
    if b == 0:
        raise NonIntegralDivision(f"division of {a} by zero")
    q, r = divmod(a, b)
    if r:
        raise NonIntegralDivision(f"{a} is not divisible by {b}")
    return q
