"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class PineconeError(Exception):
    """Base class for all errors raised by this package."""


class InvalidArgument(PineconeError, ValueError):
    pass


class NotFound(PineconeError, KeyError):
    pass


class PreconditionViolation(PineconeError, ValueError):
    pass


class GuardrailExceeded(PineconeError, RuntimeError):
    """A desk-scale limit would be exceeded (e.g. too many matchings to list)."""


class IntegralityViolation(PineconeError, ArithmeticError):
    """An integer recurrence step left a nonzero remainder."""


class PolynomialityViolation(PineconeError, ArithmeticError):
    """A polynomial recurrence step was inexact or produced a negative coefficient."""


class InternalInvariantViolation(PineconeError, AssertionError):
    pass


class UnencodableGraph(PineconeError, ValueError):
    """The graph has an omission pattern with no letter in the X/A/V alphabet."""


class VaxParseError(PineconeError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class NoPerfectMatching(PineconeError, ValueError):
    pass
