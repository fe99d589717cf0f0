import re
from fractions import Fraction
from math import lcm
from typing import Iterable, Union

from src.errors import InvalidRational

RationalLike = Union[int, Fraction, str]

_RATIONAL = re.compile(r"^\s*([+-]?\d+)(?:\s*/\s*(\d+))?\s*$")


def parse_rational(value: RationalLike) -> Fraction:
    """
    Parse an exact rational from an int, a Fraction or a "p/q" / "n" string.
    Decimal and exponent notation is rejected.
    """
    if isinstance(value, bool):
        raise InvalidRational(f"Not a rational: {value!r}")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise InvalidRational(f"Not a rational: {value!r}")

    match = _RATIONAL.match(value)
    if match is None:
        raise InvalidRational(f"Expected 'p/q' or an integer, got {value!r}")
    numerator = int(match.group(1))
    denominator = int(match.group(2)) if match.group(2) is not None else 1
    if denominator == 0:
        raise InvalidRational(f"Zero denominator in {value!r}")
    return Fraction(numerator, denominator)


def format_rational(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_rational_list(text: str) -> list[Fraction]:
    return [parse_rational(part) for part in text.split(",") if part.strip()]


def common_denominator(values: Iterable[Fraction]) -> int:
    result = 1
    for value in values:
        result = lcm(result, Fraction(value).denominator)
    return result


def frac_mod1(value: Fraction) -> Fraction:
    return value - (value.numerator // value.denominator)
