"""Scalar coefficient handling.

Two scalar backends share every algorithm in this package through duck
typing: exact rationals (int / fractions.Fraction) and floats.  The
helpers here keep division exact on the rational backend (plain int/int
would silently produce a float) and convert between the two lanes.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Scalar = Union[int, Fraction, float]


def is_exact(x: Scalar) -> bool:
    """True for the exact backend (int or Fraction), False for floats."""
    return isinstance(x, (int, Fraction)) and not isinstance(x, bool)


def sdiv(x: Scalar, y: Scalar) -> Scalar:
    """Divide two scalars, staying exact when both operands are exact."""
    if is_exact(x) and is_exact(y):
        return Fraction(x) / Fraction(y)
    return x / y


def parse_scalar(text: str) -> Scalar:
    """Parse "p/q", integer, or decimal notation into an exact scalar."""
    return Fraction(text.strip())


def format_scalar(x: Scalar) -> Union[str, float]:
    """Exact scalars render as canonical rational strings, floats pass through."""
    if is_exact(x):
        return str(Fraction(x))
    return float(x)


def to_float(x: Scalar) -> float:
    return float(x)
