"""Exact scalar arithmetic and combinatorial primitives.

All scalars are :class:`fractions.Fraction`, which already keeps values in
lowest terms with a positive denominator, so ``==`` is structural equality.
"""

from __future__ import annotations

import math
import re
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

from .errors import DomainError

Rational = Fraction
RationalLike = Union[int, Fraction]

_RATIONAL_RE = re.compile(r"^([+-]?\d+)(?:/(\d+))?$")


def binomial(n: int, k: int) -> int:
    """C(n, k) for natural n, k; zero when k > n."""
    if n < 0 or k < 0:
        raise DomainError(f"binomial needs natural arguments, got ({n}, {k})")
    return math.comb(n, k)


def pochhammer(a: RationalLike, k: int) -> Fraction:
    """Rising factorial a(a+1)...(a+k-1); the empty product is 1."""
    if k < 0:
        raise DomainError(f"pochhammer length must be natural, got {k}")
    a = Fraction(a)
    out = Fraction(1)
    for i in range(k):
        out *= a + i
    return out


def rational_pow(x: RationalLike, e: int) -> Fraction:
    x = Fraction(x)
    if x == 0 and e < 0:
        raise DomainError("zero base with negative exponent")
    return x**e


def is_integer(x: RationalLike) -> bool:
    return Fraction(x).denominator == 1


def is_nonpositive_integer(x: RationalLike) -> bool:
    x = Fraction(x)
    return x.denominator == 1 and x <= 0


def parse_rational(text: str) -> Fraction:
    """Parse ``"a/b"`` or ``"a"``; a sign is allowed on the numerator only."""
    match = _RATIONAL_RE.match(text.strip())
    if match is None:
        raise DomainError(f"malformed rational {text!r}")
    num, den = match.groups()
    den_value = int(den) if den is not None else 1
    if den_value == 0:
        raise DomainError(f"zero denominator in {text!r}")
    return Fraction(int(num), den_value)


def format_rational(x: RationalLike) -> str:
    x = Fraction(x)
    if x.denominator == 1:
        return str(x.numerator)
    return f"{x.numerator}/{x.denominator}"


def format_decimal(x: RationalLike, digits: int = 15) -> str:
    """Render with ``digits`` significant digits, without going through float."""
    x = Fraction(x)
    with localcontext() as ctx:
        ctx.prec = digits
        value = Decimal(x.numerator) / Decimal(x.denominator)
        return format(value, "g") if value != 0 else "0"
