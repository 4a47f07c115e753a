"""Utility functions"""

import math
from fractions import Fraction

from .exceptions import ParseError


def parse_rational(text: str) -> Fraction:
    """Parses "p/q" or an integer into an exact Fraction.

    Args:
        text (str): The value to parse

    Raises:
        ParseError: If text is not an integer or a p/q pair

    Returns:
        Fraction: The parsed value
    """
    value = text.strip()
    numerator, _, denominator = value.partition("/")

    try:
        if denominator:
            return Fraction(int(numerator), int(denominator))
        return Fraction(int(numerator))
    except (ValueError, ZeroDivisionError) as error:
        raise ParseError(f"not a rational number: {text!r}") from error


def ceil_fraction(value: Fraction) -> int:
    return math.ceil(value)


def format_fraction(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)

    return f"{value.numerator}/{value.denominator}"


def canonical_pair(x: int, y: int) -> tuple[int, int]:
    return (x, y) if x < y else (y, x)


def strip_comment(line: str, prefix: str = "#") -> str:
    return line.split(prefix, 1)[0].strip()
