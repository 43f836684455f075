"""Exact rational scalars. ``Fraction`` already keeps lowest terms with a positive denominator."""

from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Fraction

ScalarLike = Union[Fraction, int, str]

ZERO = Fraction(0)
ONE = Fraction(1)


def to_scalar(value: ScalarLike) -> Fraction:
    """Parse ints, Fractions and "p/q" strings. Floats are rejected: no rounding ever."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot read {value!r} as an exact rational")


def format_scalar(value: Fraction) -> str:
    return str(Fraction(value))
