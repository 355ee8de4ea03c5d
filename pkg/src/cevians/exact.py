"""Exact rational scalars.

``Rational`` is :class:`fractions.Fraction`: it is immutable, always stored
in lowest terms with a positive denominator, and zero is ``0/1``.  This
module adds the strict text form used on the command line and in JSON
configs, plus the one sanctioned exit to floating point (SVG coordinates).
"""

from __future__ import annotations

import operator
import re
from fractions import Fraction
from numbers import Rational as _RationalABC

from .errors import DivisionByZero, MalformedNumber, ZeroDenominator

Rational = Fraction

_RATIONAL_RE = re.compile(r"([+-]?\d+)(?:/(\d+))?")


def parse_rational(text: str) -> Fraction:
    """Parse ``"p"`` or ``"p/q"`` (optional sign, decimal digits only)."""
    if not isinstance(text, str):
        raise MalformedNumber(f"expected a string, got {type(text).__name__}")
    m = _RATIONAL_RE.fullmatch(text)
    if m is None:
        raise MalformedNumber(f"not a rational literal: {text!r}")
    num, den = m.groups()
    if den is not None and int(den) == 0:
        raise ZeroDenominator(f"zero denominator in {text!r}")
    return Fraction(int(num), int(den) if den is not None else 1)


def render(q: Fraction) -> str:
    """Canonical text form; integers render without ``/1``."""
    q = as_rational(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and literals to ``Fraction``; refuse floats."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return parse_rational(value)
    if isinstance(value, _RationalABC):
        return Fraction(value.numerator, value.denominator)
    raise TypeError(f"exact rational required, got {type(value).__name__}")


_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
}


def rational_arith(a, b, op: str):
    """Apply ``op`` in {add, sub, mul, div, cmp} to two rationals.

    ``cmp`` returns ``-1``, ``0`` or ``1`` (less, equal, greater).
    """
    a, b = as_rational(a), as_rational(b)
    if op in _OPS:
        return _OPS[op](a, b)
    if op == "div":
        if b == 0:
            raise DivisionByZero(f"{render(a)} / 0")
        return a / b
    if op == "cmp":
        return (a > b) - (a < b)
    raise ValueError(f"unknown operation {op!r}")


def to_decimal(q, places: int = 6) -> str:
    """Fixed-point decimal string with ``places`` digits, half-even rounding.

    Only used for drawing; never feed the result back into geometry.
    """
    scaled = round(as_rational(q) * 10**places)
    sign = "-" if scaled < 0 else ""
    digits = str(abs(scaled)).rjust(places + 1, "0")
    if places == 0:
        return sign + digits
    return f"{sign}{digits[:-places]}.{digits[-places:]}"
