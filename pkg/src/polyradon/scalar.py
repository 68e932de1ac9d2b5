"""Scalar substrate: exact rationals or floats behind one sign/compare interface.

Exact mode uses :class:`fractions.Fraction` (always reduced, positive
denominator) and a zero tolerance, so every sign test is exact.  Float mode
uses plain ``float`` values and treats anything within ``eps_rel * scale**power``
of zero as zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Union

Scalar = Union[Fraction, float]

DEFAULT_EPS = 1e-9

NEGATIVE, ZERO, POSITIVE = -1, 0, 1
LESS, EQUAL, GREATER = -1, 0, 1


@dataclass(frozen=True)
class Tolerance:
    """Sign-test context.

    ``scale`` is the magnitude of a typical coordinate (the largest absolute
    vertex coordinate of the polygon in play).  Quantities that are products
    of ``power`` coordinates are compared against ``eps_rel * scale**power``.
    """

    eps_rel: float = 0.0
    scale: float = 1.0

    def __post_init__(self):
        if self.eps_rel < 0:
            raise ValueError("eps_rel must be nonnegative")
        if not self.scale > 0:
            raise ValueError("scale must be positive")

    @property
    def exact(self) -> bool:
        return self.eps_rel == 0

    def threshold(self, power: int = 1) -> float:
        return self.eps_rel * self.scale**power

    def sign(self, value: Scalar, power: int = 1) -> int:
        if self.eps_rel == 0:
            return (value > 0) - (value < 0)
        if abs(value) <= self.eps_rel * self.scale**power:
            return ZERO
        return POSITIVE if value > 0 else NEGATIVE

    def compare(self, a: Scalar, b: Scalar, power: int = 1) -> int:
        return self.sign(a - b, power)

    def is_zero(self, value: Scalar, power: int = 1) -> bool:
        return self.sign(value, power) == ZERO

    def coerce(self, value) -> Scalar:
        """Bring ``value`` into this context's number type."""
        if self.eps_rel == 0:
            if isinstance(value, float):
                raise TypeError(f"float {value!r} in exact mode")
            return Fraction(value)
        return float(value)


EXACT = Tolerance()


def sign(s: Scalar, ctx: Tolerance = EXACT, power: int = 1) -> int:
    return ctx.sign(s, power)


def compare(a: Scalar, b: Scalar, ctx: Tolerance = EXACT, power: int = 1) -> int:
    return ctx.sign(a - b, power)


def is_exact_number(value) -> bool:
    return isinstance(value, Rational) and not isinstance(value, bool)


def parse_scalar(text: str | int | float) -> Scalar:
    """Parse ``"p/q"``, an integer, or a decimal.

    Integers and ``p/q`` strings become exact fractions; anything with a
    decimal point or exponent becomes a float.
    """
    if isinstance(text, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(text, int):
        return Fraction(text)
    if isinstance(text, float):
        return text
    s = text.strip()
    if any(c in s for c in ".eE") or s.lower() in {"inf", "-inf", "nan"}:
        return float(s)
    return Fraction(s)


def format_scalar(value: Scalar) -> str | int | float:
    """Inverse of :func:`parse_scalar` for document output."""
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return value.numerator
        return f"{value.numerator}/{value.denominator}"
    return float(value)
