"""Exact scalars: rationals and Gaussian rationals.

Rationals are plain ``int`` / ``fractions.Fraction`` values (ints are kept as
ints so that group-like structure constants never pay for Fraction
arithmetic).  Gaussian rationals use :class:`Gaussian`, which collapses back
to a rational whenever the imaginary part vanishes, so equality is canonical.
"""
from __future__ import annotations

import re
from fractions import Fraction
from numbers import Rational
from typing import Union


class Gaussian:
    """``re + i*im`` with exact rational parts and ``im != 0``.

    Construct through :func:`gaussian`, which returns a plain rational when
    ``im == 0``.
    """

    __slots__ = ("re", "im")

    def __init__(self, re: Rational, im: Rational):
        object.__setattr__(self, "re", _norm_q(re))
        object.__setattr__(self, "im", _norm_q(im))

    def __setattr__(self, name, value):
        raise AttributeError("Gaussian is immutable")

    def __add__(self, other):
        if isinstance(other, Gaussian):
            return gaussian(self.re + other.re, self.im + other.im)
        if isinstance(other, (int, Fraction)):
            return gaussian(self.re + other, self.im)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self):
        return Gaussian(-self.re, -self.im)

    def __sub__(self, other):
        if isinstance(other, (Gaussian, int, Fraction)):
            return self + (-other)
        return NotImplemented

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, Gaussian):
            return gaussian(self.re * other.re - self.im * other.im,
                            self.re * other.im + self.im * other.re)
        if isinstance(other, (int, Fraction)):
            return gaussian(self.re * other, self.im * other)
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction, Gaussian)):
            return div(self, other)
        return NotImplemented

    def __rtruediv__(self, other):
        return div(other, self)

    def __eq__(self, other):
        if isinstance(other, Gaussian):
            return self.re == other.re and self.im == other.im
        # im != 0 by construction, so never equal to a rational
        return False

    def __hash__(self):
        return hash((self.re, self.im))

    def __bool__(self):
        return True

    def __repr__(self):
        return f"Gaussian({self.re!s}, {self.im!s})"

    def __str__(self):
        return format_scalar(self)


Scalar = Union[int, Fraction, Gaussian]


class DivisionByZero(ZeroDivisionError):
    pass


def _norm_q(x) -> Union[int, Fraction]:
    if isinstance(x, int):
        return x
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else x
    if isinstance(x, Rational):
        return _norm_q(Fraction(int(x.numerator), int(x.denominator)))
    raise TypeError(f"not an exact rational: {x!r}")


def gaussian(re, im=0) -> Scalar:
    """Canonical scalar ``re + i*im``."""
    if im == 0:
        return _norm_q(re)
    return Gaussian(re, im)


I = Gaussian(0, 1)


def canon(x) -> Scalar:
    if isinstance(x, Gaussian):
        return x
    return _norm_q(x)


def conj(x: Scalar) -> Scalar:
    if isinstance(x, Gaussian):
        return Gaussian(x.re, -x.im)
    return x


def real_part(x: Scalar):
    return x.re if isinstance(x, Gaussian) else x


def imag_part(x: Scalar):
    return x.im if isinstance(x, Gaussian) else 0


def div(x: Scalar, y: Scalar) -> Scalar:
    if y == 0:
        raise DivisionByZero(f"division of {format_scalar(x)} by zero")
    if isinstance(y, Gaussian):
        n = Fraction(y.re * y.re + y.im * y.im)
        num = x * conj(y)
        return gaussian(Fraction(real_part(num)) / n, Fraction(imag_part(num)) / n)
    y = Fraction(y)
    if isinstance(x, Gaussian):
        return gaussian(x.re / y, x.im / y)
    return _norm_q(Fraction(x) / y)


def inv(x: Scalar) -> Scalar:
    return div(1, x)


def arith(op: str, x: Scalar, y: Scalar) -> Scalar:
    """Field operation by name: ``add``, ``sub``, ``mul`` or ``div``."""
    if op == "add":
        return canon(x + y)
    if op == "sub":
        return canon(x - y)
    if op == "mul":
        return canon(x * y)
    if op == "div":
        return div(x, y)
    raise ValueError(f"unknown operation {op!r}")


def _fmt_q(q) -> str:
    q = _norm_q(q)
    if isinstance(q, int):
        return str(q)
    return f"{q.numerator}/{q.denominator}"


def format_scalar(x: Scalar) -> str:
    """Text form ``p/q`` or ``p/q+r/si`` (real part always written)."""
    if isinstance(x, Gaussian):
        im = x.im
        sign = "-" if im < 0 else "+"
        return f"{_fmt_q(x.re)}{sign}{_fmt_q(abs(im))}i"
    return _fmt_q(x)


_Q = r"[+-]?\d+(?:/\d+)?"
_RE_Q = re.compile(rf"^\s*({_Q})\s*$")
_RE_IM = re.compile(r"^\s*([+-]?)(\d+(?:/\d+)?)?\s*\*?\s*i\s*$")
_RE_Z = re.compile(rf"^\s*({_Q})\s*([+-])\s*(\d+(?:/\d+)?)?\s*\*?\s*i\s*$")


def parse_scalar(text) -> Scalar:
    """Parse ``"p/q"``, ``"p/q+r/si"``, ``"i"``, ``"-3/2i"`` (ints pass through)."""
    if isinstance(text, bool):
        raise ValueError(f"not a scalar: {text!r}")
    if isinstance(text, (int, Fraction, Gaussian)):
        return canon(text)
    if not isinstance(text, str):
        raise ValueError(f"not a scalar: {text!r}")
    m = _RE_Q.match(text)
    if m:
        return _norm_q(Fraction(m.group(1)))
    m = _RE_Z.match(text)
    if m:
        im = Fraction(m.group(3) or 1)
        return gaussian(Fraction(m.group(1)), -im if m.group(2) == "-" else im)
    m = _RE_IM.match(text)
    if m:
        im = Fraction(m.group(2) or 1)
        return gaussian(0, -im if m.group(1) == "-" else im)
    raise ValueError(f"not a scalar: {text!r}")


def is_scalar(x) -> bool:
    return isinstance(x, (int, Fraction, Gaussian)) and not isinstance(x, bool)
