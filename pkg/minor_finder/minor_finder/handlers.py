from typing import NoReturn

from .exceptions import InternalInvariantViolation, MinorFinderError
from .logger import minor_logger


def throw(
    message: str, exc: type[MinorFinderError] = InternalInvariantViolation
) -> NoReturn:
    """Log and raise.

    Args:
        message (str): The error message
        exc (type[MinorFinderError], optional): The exception class to raise.
            Defaults to InternalInvariantViolation.
    """
    minor_logger.error(message)
    raise exc(message)


def check(condition: bool, message: str) -> None:
    """Raise InternalInvariantViolation when a proved property fails."""
    if not condition:
        throw(message, InternalInvariantViolation)


def handle_minor_error(error: MinorFinderError, command: str) -> int:
    """Log a failed command and return the exit code it maps to.

    Args:
        error (MinorFinderError): The raised error
        command (str): The CLI command that failed

    Returns:
        int: The process exit code
    """
    minor_logger.warning(
        f"Error in command: {command}\n{type(error).__name__}: {error}"
    )

    return error.exit_code
