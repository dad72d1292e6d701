"""Dense polynomials over the rationals, truncated series and recurring series.

The recurring-series part rebuilds de Moivre's argument constructively: a
power series whose coefficients obey a fixed linear recurrence of order p is
multiplied by its characteristic denominator, and whatever survives is read
off as numerator polynomials.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

from .errors import DomainError, PropertyFailure
from .exact import binomial, format_rational

Scalar = Union[int, Fraction]


def _strip(coeffs: Iterable[Scalar]) -> tuple[Fraction, ...]:
    out = [Fraction(c) for c in coeffs]
    while out and out[-1] == 0:
        out.pop()
    return tuple(out)


class Polynomial:
    """Immutable dense polynomial; ``coeffs[i]`` multiplies ``x**i``.

    The zero polynomial has no coefficients and degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    @classmethod
    def constant(cls, c: Scalar) -> "Polynomial":
        return cls([c])

    @classmethod
    def x(cls) -> "Polynomial":
        return cls([0, 1])

    @classmethod
    def monomial(cls, degree: int, c: Scalar = 1) -> "Polynomial":
        return cls([0] * degree + [c])

    @classmethod
    def one_minus_x(cls) -> "Polynomial":
        return cls([1, -1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Polynomial.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Polynomial({[format_rational(c) for c in self.coeffs]})"

    def __str__(self):
        return render(self)

    @staticmethod
    def _coerce(other) -> "Polynomial":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        n = max(len(self.coeffs), len(other.coeffs))
        return Polynomial(self.coeff(i) + other.coeff(i) for i in range(n))

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Polynomial(c * other for c in self.coeffs)
        if not isinstance(other, Polynomial):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, e: int):
        if e < 0:
            raise DomainError("negative polynomial power")
        result = Polynomial.constant(1)
        base = self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        """Horner evaluation; ``x`` may be a scalar or another Polynomial."""
        acc = Fraction(0) if not isinstance(x, Polynomial) else Polynomial()
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def divmod(self, divisor: "Polynomial") -> tuple["Polynomial", "Polynomial"]:
        if divisor.is_zero():
            raise DomainError("polynomial division by zero")
        rem = list(self.coeffs)
        dd = divisor.degree
        lead = divisor.coeffs[-1]
        quot = [Fraction(0)] * max(len(rem) - dd, 0)
        for i in range(len(rem) - dd - 1, -1, -1):
            q = rem[i + dd] / lead
            quot[i] = q
            if q:
                for j, d in enumerate(divisor.coeffs):
                    rem[i + j] -= q * d
        return Polynomial(quot), Polynomial(rem[:dd] if dd > 0 else [])

    def exact_div(self, divisor: "Polynomial") -> "Polynomial":
        """Quotient of a division that must leave no remainder."""
        quot, rem = self.divmod(divisor)
        if not rem.is_zero():
            raise PropertyFailure(f"{self} is not divisible by {divisor}")
        return quot

    def truncate(self, n: int) -> "Polynomial":
        """Keep the terms of degree < n."""
        return Polynomial(self.coeffs[:n])

    def shift(self, k: int) -> "Polynomial":
        """Multiply by x**k."""
        if self.is_zero():
            return self
        return Polynomial([0] * k + list(self.coeffs))

    def rebase(self) -> "Polynomial":
        """Compose with x -> 1 - x.

        The coefficients of the result are the coefficients of ``self``
        written in powers of (1 - x); applying it twice is the identity.
        """
        return self(Polynomial.one_minus_x())

    def valuation(self) -> int:
        """Order of vanishing at x = 0; -1 for the zero polynomial."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return i
        return -1


def render(poly: Polynomial, var: str = "x") -> str:
    """Text form ``c0 + c1*x + c2*x^2 ...`` with rationals as ``a/b``."""
    if poly.is_zero():
        return "0"
    parts = []
    for i, c in enumerate(poly.coeffs):
        if c == 0:
            continue
        if i == 0:
            term = format_rational(c)
        elif i == 1:
            term = f"{format_rational(c)}*{var}"
        else:
            term = f"{format_rational(c)}*{var}^{i}"
        parts.append(term)
    text = " + ".join(parts)
    return text.replace("+ -", "- ")


def truncated_geometric_power(m: int, n: int) -> Polynomial:
    """First ``n`` terms of the power series of (1-x)^(-m).

    >>> truncated_geometric_power(2, 3)
    Polynomial(['1', '2', '3'])
    """
    if m < 1 or n < 1:
        raise DomainError(f"need m, n >= 1, got m={m}, n={n}")
    return Polynomial(binomial(m + k - 1, k) for k in range(n))


DEMOIVRE = "deMoivre"
DICKSON = "Dickson"


def figurate(p: int, k: int, convention: str = DEMOIVRE) -> int:
    """k-th figurate number of order p.

    de Moivre counts orders from 1 and starts every sequence at unity, so
    order 3 gives the triangular numbers 1, 3, 6, 10, ...  Dickson counts
    orders from 0 and uses C(p+k-1, p).
    """
    if convention == DEMOIVRE:
        if p < 1:
            raise DomainError("de Moivre orders start at 1")
        return binomial(p + k - 1, k)
    if convention == DICKSON:
        if p + k - 1 < 0:
            return 0
        return binomial(p + k - 1, p)
    raise DomainError(f"unknown figurate convention {convention!r}")


def finite_difference_annihilates(p: int, k_max: int) -> bool:
    """Check that the p-th backward difference kills the order-p figurate numbers.

    Terms with negative index count as zero, which is exactly where these
    degree p-1 polynomials in k vanish.
    """
    if p < 1:
        raise DomainError("order must be >= 1")

    def c(j):
        return figurate(p, j) if j >= 0 else 0

    for k in range(1, k_max + 1):
        total = sum((-1) ** l * binomial(p, l) * c(k - l) for l in range(p + 1))
        if total != 0:
            return False
    return True


@dataclass(frozen=True)
class RecurrenceSpec:
    """c_k = a_1 c_{k-1} + ... + a_p c_{k-p}, seeded with c_0..c_{p-1}."""

    weights: tuple[Fraction, ...]
    seeds: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(Fraction(a) for a in self.weights))
        object.__setattr__(self, "seeds", tuple(Fraction(c) for c in self.seeds))
        if len(self.weights) < 1 or len(self.weights) != len(self.seeds):
            raise DomainError("need p >= 1 weights and exactly p seeds")

    @property
    def order(self) -> int:
        return len(self.weights)

    def terms(self, count: int) -> list[Fraction]:
        c = list(self.seeds[:count])
        while len(c) < count:
            k = len(c)
            c.append(sum(a * c[k - l] for l, a in enumerate(self.weights, 1)))
        return c

    def denominator(self) -> Polynomial:
        return Polynomial([1] + [-a for a in self.weights])

    @classmethod
    def figurate(cls, p: int) -> "RecurrenceSpec":
        """Order-p figurate numbers with weights a_l = (-1)^(l+1) C(p, l)."""
        weights = [(-1) ** (l + 1) * binomial(p, l) for l in range(1, p + 1)]
        seeds = [figurate(p, k) for k in range(p)]
        return cls(tuple(weights), tuple(seeds))

    @classmethod
    def geometric(cls) -> "RecurrenceSpec":
        return cls((Fraction(1),), (Fraction(1),))


def recurring_series_closed_form(spec: RecurrenceSpec) -> tuple[Polynomial, Polynomial]:
    """Return ``(q, denominator)`` with sum_k c_k x^k = q / denominator."""
    denom = spec.denominator()
    head = Polynomial(spec.terms(spec.order))
    return (head * denom).truncate(spec.order), denom


def finite_recurring_sum_split(spec: RecurrenceSpec, n: int) -> tuple[Polynomial, Polynomial]:
    """Split S_n * denominator into q + x^n r for S_n = sum_{k<n} c_k x^k.

    The recurrence makes every coefficient of degree p..n-1 cancel; this is
    checked rather than assumed.
    """
    p = spec.order
    if n < p:
        raise DomainError(f"split needs n >= p, got n={n}, p={p}")
    product = Polynomial(spec.terms(n)) * spec.denominator()
    for j in range(p, n):
        if product.coeff(j) != 0:
            raise PropertyFailure(f"coefficient of x^{j} survives in S_n*denominator")
    q = product.truncate(p)
    r = Polynomial(product.coeffs[n:])
    return q, r
