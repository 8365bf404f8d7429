"""
Shared utilities.

Rational parsing/formatting used by the file formats and reports, and the
textual form of extremal primitive relations.
"""
from fractions import Fraction
from typing import Sequence, Union
import logging

logger = logging.getLogger(__name__)


def parse_rational(value: Union[int, str]) -> Fraction:
    """Parse an integer or a "p/q" string into an exact rational.

    Args:
        value: Integer, or string such as "3", "-1/2"

    Returns:
        Fraction with the parsed value

    Raises:
        ValueError: If the value is a float, a bool or a malformed string

    Examples:
        >>> parse_rational("-1/2")
        Fraction(-1, 2)

        >>> parse_rational(4)
        Fraction(4, 1)
    """
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"Expected an integer or 'p/q' string, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise ValueError(f"Expected an integer or 'p/q' string, got {value!r}")

    text = value.strip()
    numerator, _, denominator = text.partition("/")
    try:
        p = int(numerator)
        q = int(denominator) if denominator else 1
    except ValueError as e:
        logger.error(f"Invalid rational format: {value!r}")
        raise ValueError(f"Invalid rational format: {value!r}") from e
    if q == 0:
        raise ValueError(f"Zero denominator in {value!r}")
    return Fraction(p, q)


def format_rational(value: Fraction) -> str:
    """Inverse of parse_rational: "p" for integers, "p/q" otherwise."""
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def sign(value) -> int:
    return (value > 0) - (value < 0)


def _format_side(indices: Sequence[int], coefficients: Sequence[int]) -> str:
    if not indices:
        return "0"
    terms = []
    for index, coefficient in zip(indices, coefficients):
        terms.append(f"r{index}" if coefficient == 1 else f"{coefficient}*r{index}")
    return " + ".join(terms)


def format_relation(xs: Sequence[int], a: Sequence[int], ys: Sequence[int], b: Sequence[int]) -> str:
    """Render a1*x1 + ... = b1*y1 + ... with ray indices.

    Examples:
        >>> format_relation([0, 1], [1, 1], [3], [1])
        'r0 + r1 = r3'

        >>> format_relation([2, 3], [1, 1], [], [])
        'r2 + r3 = 0'
    """
    return f"{_format_side(xs, a)} = {_format_side(ys, b)}"
