"""Exceptions raised by the minor finder.

Every exception carries the CLI exit code it maps to.
"""

from fractions import Fraction

from .constants import EXIT_NOT_FOUND, EXIT_PRECONDITION


class MinorFinderError(Exception):
    exit_code = EXIT_NOT_FOUND


class InputError(MinorFinderError):
    exit_code = EXIT_PRECONDITION


class ParseError(InputError):
    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class ValidationError(MinorFinderError):
    exit_code = EXIT_PRECONDITION


class SizeLimit(MinorFinderError):
    exit_code = EXIT_PRECONDITION


class EmptyGraph(MinorFinderError):
    exit_code = EXIT_PRECONDITION


class StaleReference(MinorFinderError):
    pass


class NotAnEdge(MinorFinderError):
    pass


class InsufficientDensity(MinorFinderError):
    exit_code = EXIT_PRECONDITION

    def __init__(self, required: Fraction, actual: Fraction) -> None:
        self.required = required
        self.actual = actual
        super().__init__(
            f"average degree {actual} is below the required {required}"
        )


class GuardViolation(MinorFinderError):
    pass


class InternalInvariantViolation(MinorFinderError):
    pass


class NotFound(MinorFinderError):
    pass
