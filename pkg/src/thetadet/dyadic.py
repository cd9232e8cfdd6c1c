"""Exact dyadic rationals, numbers of the form ``n / 2**k``.

Edge weights produced by the graph transformations in this package are
always ``±1``, ``±1/2`` or ``±2`` (or plain integers), so a numerator and
a power-of-two exponent are enough to keep every computation exact.
"""

from __future__ import annotations

from fractions import Fraction
from functools import total_ordering
from numbers import Integral


@total_ordering
class Dyadic:
    """An immutable, normalized dyadic rational ``numerator / 2**exponent``.

    The representation is canonical: the numerator is odd unless the value
    is zero, and zero always has exponent 0. Equality is therefore plain
    tuple equality.
    """

    __slots__ = ("numerator", "exponent")

    def __init__(self, numerator: int = 0, exponent: int = 0):
        if not isinstance(numerator, Integral) or not isinstance(exponent, Integral):
            raise TypeError("Dyadic needs integer numerator and exponent")
        numerator, exponent = int(numerator), int(exponent)
        if numerator == 0:
            exponent = 0
        elif exponent < 0:
            numerator <<= -exponent
            exponent = 0
        else:
            twos = (numerator & -numerator).bit_length() - 1
            shift = min(twos, exponent)
            numerator >>= shift
            exponent -= shift
        object.__setattr__(self, "numerator", numerator)
        object.__setattr__(self, "exponent", exponent)

    def __setattr__(self, name, value):
        raise AttributeError("Dyadic is immutable")

    @classmethod
    def coerce(cls, value) -> "Dyadic":
        """Convert ints, Fractions, dyadic strings like ``"-1/2"`` or Dyadics."""
        if isinstance(value, Dyadic):
            return value
        if isinstance(value, bool):
            raise TypeError("refusing to treat a bool as a weight")
        if isinstance(value, Integral):
            return cls(int(value), 0)
        if isinstance(value, str):
            value = Fraction(value.strip().replace("−", "-"))
        if isinstance(value, Fraction):
            den = value.denominator
            if den & (den - 1):
                raise ValueError(f"{value} is not a dyadic rational")
            return cls(value.numerator, den.bit_length() - 1)
        raise TypeError(f"cannot convert {type(value).__name__} to Dyadic")

    def to_fraction(self) -> Fraction:
        return Fraction(self.numerator, 1 << self.exponent)

    def is_integer(self) -> bool:
        return self.exponent == 0

    def scaled(self, power: int) -> "Dyadic":
        """Multiply by ``2**power`` (``power`` may be negative)."""
        return Dyadic(self.numerator, self.exponent - power)

    def _align(self, other: "Dyadic") -> tuple[int, int, int]:
        e = max(self.exponent, other.exponent)
        return self.numerator << (e - self.exponent), other.numerator << (e - other.exponent), e

    def __add__(self, other):
        try:
            other = Dyadic.coerce(other)
        except TypeError:
            return NotImplemented
        a, b, e = self._align(other)
        return Dyadic(a + b, e)

    __radd__ = __add__

    def __neg__(self):
        return Dyadic(-self.numerator, self.exponent)

    def __pos__(self):
        return self

    def __abs__(self):
        return Dyadic(abs(self.numerator), self.exponent)

    def __sub__(self, other):
        try:
            other = Dyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return Dyadic.coerce(other) - self

    def __mul__(self, other):
        try:
            other = Dyadic.coerce(other)
        except TypeError:
            return NotImplemented
        return Dyadic(self.numerator * other.numerator, self.exponent + other.exponent)

    __rmul__ = __mul__

    def __eq__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.numerator == other.numerator and self.exponent == other.exponent

    def __lt__(self, other):
        try:
            other = Dyadic.coerce(other)
        except (TypeError, ValueError):
            return NotImplemented
        a, b, _ = self._align(other)
        return a < b

    def __hash__(self):
        if self.exponent == 0:
            return hash(self.numerator)
        return hash(self.to_fraction())

    def __bool__(self):
        return self.numerator != 0

    def __int__(self):
        if self.exponent:
            raise ValueError(f"{self} is not an integer")
        return self.numerator

    def __float__(self):
        return self.numerator / (1 << self.exponent)

    def __repr__(self):
        return f"Dyadic({self})"

    def __str__(self):
        if self.exponent == 0:
            return str(self.numerator)
        return f"{self.numerator}/{1 << self.exponent}"


ZERO = Dyadic(0)
ONE = Dyadic(1)
HALF = Dyadic(1, 1)
