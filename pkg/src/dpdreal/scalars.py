"""Exact rational and Gaussian-rational scalars.

Rationals are plain :class:`fractions.Fraction` values, which are always
stored reduced with a positive denominator.  :class:`Gauss` adds the
imaginary unit on top of them.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Union

Rational = Fraction
Scalar = Union[int, Fraction, "Gauss"]


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, Gauss):
        if x.im:
            raise ValueError(f"{x} is not real")
        return x.re
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to Fraction")


def rational_sign(x) -> int:
    x = as_fraction(x)
    return (x > 0) - (x < 0)


class Gauss:
    """An element ``re + im*i`` of Q(i)."""

    __slots__ = ("re", "im", "_hash")

    def __init__(self, re=0, im=0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)
        self._hash = None

    @classmethod
    def coerce(cls, x) -> "Gauss":
        if isinstance(x, Gauss):
            return x
        return cls(x, 0)

    # -- predicates -------------------------------------------------------
    def is_zero(self) -> bool:
        return not self.re and not self.im

    def is_real(self) -> bool:
        return not self.im

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic -------------------------------------------------------
    def __add__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return Gauss(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __neg__(self):
        return Gauss(-self.re, -self.im)

    def __pos__(self):
        return self

    def __sub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return Gauss(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Gauss(self.re * other, self.im * other)
        other = _lift(other)
        if other is NotImplemented:
            return other
        a, b, c, d = self.re, self.im, other.re, other.im
        if not b and not d:
            return Gauss(a * c, 0)
        return Gauss(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def inverse(self) -> "Gauss":
        n = self.re * self.re + self.im * self.im
        if not n:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return Gauss(self.re / n, -self.im / n)

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division by zero in Q(i)")
            return Gauss(self.re / other, self.im / other)
        other = _lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        other = _lift(other)
        if other is NotImplemented:
            return other
        return other * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate(self) -> "Gauss":
        return Gauss(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    # -- comparison / hashing --------------------------------------------
    def __eq__(self, other):
        if isinstance(other, Gauss):
            return self.re == other.re and self.im == other.im
        if isinstance(other, (int, Fraction)):
            return not self.im and self.re == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.re) if not self.im else hash((self.re, self.im))
        return self._hash

    def __repr__(self):
        return f"Gauss({format_gauss(self)!r})"

    def __str__(self):
        return format_gauss(self)


def _lift(x):
    if isinstance(x, Gauss):
        return x
    if isinstance(x, (int, Fraction)):
        return Gauss(x, 0)
    return NotImplemented


ZERO = Gauss(0)
ONE = Gauss(1)
I = Gauss(0, 1)


def gauss_conjugate(x: Gauss) -> Gauss:
    return Gauss.coerce(x).conjugate()


def gauss_norm(x: Gauss) -> Fraction:
    return Gauss.coerce(x).norm()


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def format_gauss(x: Gauss) -> str:
    """Literal syntax shared with the input language: ``2``, ``-1/2*i``, ``1 + 3/4*i``."""
    re, im = x.re, x.im
    if not im:
        return format_rational(re)
    if abs(im) == 1:
        im_part = "i"
    else:
        im_part = f"{format_rational(abs(im))}*i"
    if not re:
        return im_part if im > 0 else f"-{im_part}"
    sign = "+" if im > 0 else "-"
    return f"{format_rational(re)} {sign} {im_part}"
