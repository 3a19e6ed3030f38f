"""Exact complex numbers with rational real and imaginary parts."""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational

_RATIONAL = r"[+-]?\d+(?:/\d+)?"
_COMPLEX_RE = re.compile(
    rf"^\s*(?:(?P<re>{_RATIONAL})(?P<im1>[+-]\d+(?:/\d+)?)\*i|(?P<im2>{_RATIONAL})\*i|(?P<only>{_RATIONAL})|(?P<unit>[+-]?)i)\s*$"
)


def format_rational(q: Fraction) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse ``a`` or ``a/b``; floats are rejected on purpose."""
    text = text.strip()
    if not re.fullmatch(_RATIONAL, text):
        raise ValueError(f"not an exact rational: {text!r}")
    q = Fraction(text)
    return q


class GaussianRational:
    """``re + im*i`` with ``re``, ``im`` exact fractions.

    Fractions keep themselves in lowest terms with a positive denominator,
    so instances are canonical and can be hashed and compared directly.
    """

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = re if type(re) is Fraction else Fraction(re)
        self.im = im if type(im) is Fraction else Fraction(im)

    @classmethod
    def coerce(cls, value) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(Fraction(value))
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        raise TypeError(f"cannot coerce {type(value).__name__} to GaussianRational")

    @classmethod
    def parse(cls, text: str) -> "GaussianRational":
        m = _COMPLEX_RE.match(text)
        if not m:
            raise ValueError(f"not an exact Gaussian rational: {text!r}")
        if m["only"] is not None:
            return cls(Fraction(m["only"]))
        if m["im2"] is not None:
            return cls(0, Fraction(m["im2"]))
        if m["re"] is not None:
            return cls(Fraction(m["re"]), Fraction(m["im1"]))
        return cls(0, -1 if m["unit"] == "-" else 1)

    def __add__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __sub__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        if not self.im and not o.im:
            return GaussianRational(self.re * o.re)
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def norm2(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm2()
        if not n:
            raise ZeroDivisionError("division by zero Gaussian rational")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return GaussianRational.coerce(other) * self.inverse()

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** -n
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def is_real(self) -> bool:
        return self.im == 0

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        try:
            o = GaussianRational.coerce(other)
        except TypeError:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __repr__(self):
        return f"GaussianRational({self})"

    def __str__(self):
        if not self.im:
            return format_rational(self.re)
        im = format_rational(self.im) + "*i"
        if not self.re:
            return im
        sign = "" if self.im < 0 else "+"
        return f"{format_rational(self.re)}{sign}{im}"


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)
