"""Exact Gaussian rationals: complex numbers re + im*i with rational parts.

Rationals are ``gmpy2.mpq`` values, which are always stored in lowest terms
with a positive denominator, so equality between two scalars is structural.
"""

from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational as _RationalABC
from typing import Union

from gmpy2 import mpq

from .errors import DivisionByZero, ScalarParseError

Rational = type(mpq())

_UNSIGNED = r"[0-9]+(?:/[0-9]+)?"
_REAL_RE = re.compile(rf"-?{_UNSIGNED}")
_COMPLEX_RE = re.compile(
    rf"(?:(?P<re>-?{_UNSIGNED})(?P<op>[+-])|(?P<neg>-))?(?P<im>{_UNSIGNED})?i"
)


def rational(value) -> Rational:
    """Coerce an int, Fraction, mpq or rational string to ``mpq``."""
    if isinstance(value, Rational):
        return value
    if isinstance(value, bool):
        raise TypeError("bool is not a rational")
    if isinstance(value, int):
        return mpq(value)
    if isinstance(value, Fraction) or isinstance(value, _RationalABC):
        return mpq(value.numerator, value.denominator)
    if isinstance(value, str):
        return parse_rational(value)
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def parse_rational(text: str) -> Rational:
    if not _REAL_RE.fullmatch(text):
        raise ScalarParseError(f"not a rational: {text!r}")
    return _unsigned_or_signed(text)


def _unsigned_or_signed(text: str) -> Rational:
    num, _, den = text.partition("/")
    if den and int(den) == 0:
        raise ScalarParseError(f"zero denominator in {text!r}")
    return mpq(int(num), int(den) if den else 1)


def format_rational(q: Rational) -> str:
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


ScalarLike = Union["GaussianRational", int, Fraction, str]


class GaussianRational:
    """Immutable exact complex scalar ``re + im*i``."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        object.__setattr__(self, "re", rational(re))
        object.__setattr__(self, "im", rational(im))

    @classmethod
    def coerce(cls, value: ScalarLike) -> "GaussianRational":
        if isinstance(value, GaussianRational):
            return value
        if isinstance(value, str):
            return parse(value)
        if isinstance(value, complex):
            raise TypeError("floating-point complex values are not exact")
        return cls(value, 0)

    def __setattr__(self, name, value):
        raise AttributeError("GaussianRational is immutable")

    def __reduce__(self):
        return (parse, (format_scalar(self),))

    # arithmetic ----------------------------------------------------------
    def __add__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im,
                                self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return self * o.inv()

    def __rtruediv__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return o * self.inv()

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __pos__(self):
        return self

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Rational:
        """Squared modulus re^2 + im^2."""
        return self.re * self.re + self.im * self.im

    def inv(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise DivisionByZero("inverse of zero")
        return GaussianRational(self.re / n, -self.im / n)

    def is_real(self) -> bool:
        return self.im == 0

    # comparison ----------------------------------------------------------
    def __eq__(self, other):
        o = _maybe(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __repr__(self):
        return f"GaussianRational({format_scalar(self)!r})"

    def __str__(self):
        return format_scalar(self)


def _maybe(value) -> GaussianRational | None:
    if isinstance(value, GaussianRational):
        return value
    if isinstance(value, (int, Fraction, Rational)) and not isinstance(value, bool):
        return GaussianRational(value, 0)
    return None


ZERO = GaussianRational(0)
ONE = GaussianRational(1)
I = GaussianRational(0, 1)


def add(x: GaussianRational, y: GaussianRational) -> GaussianRational:
    return x + y


def mul(x: GaussianRational, y: GaussianRational) -> GaussianRational:
    return x * y


def conj(x: GaussianRational) -> GaussianRational:
    return x.conj()


def inv(x: GaussianRational) -> GaussianRational:
    return x.inv()


def parse(text: str) -> GaussianRational:
    """Parse the whitespace-free scalar grammar, e.g. ``"3/4-2/5i"``, ``"i"``, ``"-1/3"``."""
    if not isinstance(text, str):
        raise ScalarParseError(f"expected a string, got {type(text).__name__}")
    if _REAL_RE.fullmatch(text):
        return GaussianRational(_unsigned_or_signed(text), 0)
    m = _COMPLEX_RE.fullmatch(text)
    if m is None:
        raise ScalarParseError(f"not a Gaussian rational: {text!r}")
    im = _unsigned_or_signed(m["im"]) if m["im"] else mpq(1)
    re_part = mpq(0)
    if m["re"] is not None:
        re_part = _unsigned_or_signed(m["re"])
        if m["op"] == "-":
            im = -im
    elif m["neg"]:
        im = -im
    return GaussianRational(re_part, im)


def format_scalar(z: GaussianRational) -> str:
    if z.im == 0:
        return format_rational(z.re)
    mag = abs(z.im)
    coef = "" if mag == 1 else format_rational(mag)
    if z.re == 0:
        return f"{'-' if z.im < 0 else ''}{coef}i"
    return f"{format_rational(z.re)}{'-' if z.im < 0 else '+'}{coef}i"
