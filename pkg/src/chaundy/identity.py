"""The Chaundy-Bullard identity and its older equivalent forms.

    1 = (1-x)^(n+1) sum_{k<=m} C(n+k,k) x^k + x^(m+1) sum_{k<=n} C(m+k,k) (1-x)^k

Hering's version phrases it through truncated power series of (1-x)^(-m),
and de Moivre's canon sums the first n figurate numbers of order p.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError
from .exact import binomial
from .polyseries import Polynomial, figurate, truncated_geometric_power


@dataclass(frozen=True)
class CBParams:
    n: int
    m: int
    x: Fraction = Fraction(0)


@dataclass(frozen=True)
class CBSplit:
    first: Fraction
    second: Fraction

    @property
    def total(self) -> Fraction:
        return self.first + self.second


def cb_sum(n: int, m: int) -> Polynomial:
    """sum_{k=0}^{m} C(n+k, k) x^k."""
    return Polynomial(binomial(n + k, k) for k in range(m + 1))


def cb_split(n: int, m: int, x) -> CBSplit:
    x = Fraction(x)
    first = (1 - x) ** (n + 1) * cb_sum(n, m)(x)
    second = x ** (m + 1) * cb_sum(m, n)(1 - x)
    return CBSplit(first, second)


def cb_terms(n: int, m: int) -> tuple[Polynomial, Polynomial]:
    """Both halves of the identity as polynomials in x."""
    u = Polynomial.one_minus_x()
    first = u ** (n + 1) * cb_sum(n, m)
    second = Polynomial.monomial(m + 1) * cb_sum(m, n).rebase()
    return first, second


def cb_polynomial_identity(n: int, m: int) -> bool:
    first, second = cb_terms(n, m)
    return first + second == Polynomial.constant(1)


def hering_sides(m: int, n: int, x) -> tuple[Fraction, Fraction]:
    """Left and right sides of (1-x)_n^(-m) = (1-x)^(-m) - (1-x)^(-m) x^n (1-(1-x))_m^(-n)."""
    x = Fraction(x)
    if m < 1 or n < 1:
        raise DomainError("m and n must be >= 1")
    if x == 1:
        raise DomainError("x = 1 divides by zero")
    lhs = truncated_geometric_power(m, n)(x)
    inv = (1 - x) ** -m
    rhs = inv - inv * x**n * truncated_geometric_power(n, m)(1 - x)
    return lhs, rhs


def hering_identity_check(m: int, n: int, x) -> bool:
    lhs, rhs = hering_sides(m, n, x)
    return lhs == rhs


@dataclass(frozen=True)
class HeringTranslation:
    cb_n: int
    cb_m: int
    verified: bool


def hering_to_cb(m: int, n: int) -> HeringTranslation:
    """Index map turning Hering's form into the Chaundy-Bullard one.

    Clearing (1-x)^(-m) from Hering's identity gives
    (1-x)^m sum_{k<n} C(m-1+k,k) x^k + x^n sum_{k<m} C(n-1+k,k) (1-x)^k = 1,
    which is the identity with n -> m-1 and m -> n-1.  The map is confirmed by
    expanding Hering's cleared form on its own, not by calling cb_terms.
    """
    if m < 1 or n < 1:
        raise DomainError("m and n must be >= 1")
    u = Polynomial.one_minus_x()
    cleared = u**m * truncated_geometric_power(m, n) + Polynomial.monomial(
        n
    ) * truncated_geometric_power(n, m).rebase()
    cb_n, cb_m = m - 1, n - 1
    first, second = cb_terms(cb_n, cb_m)
    verified = cleared == Polynomial.constant(1) and cleared == first + second
    return HeringTranslation(cb_n, cb_m, verified)


@dataclass(frozen=True)
class CanonResult:
    """de Moivre's canon for p, n, cleared of the denominator (1-x)^p.

    ``numerator / denominator`` is the closed form of the truncated figurate
    series; ``coefficients[j]`` is C(n+j-1, j), the factor of the j-th
    subtracted term x^n / (1-x)^(p-j).
    """

    p: int
    n: int
    series: Polynomial
    numerator: Polynomial
    denominator: Polynomial
    coefficients: tuple[int, ...]
    check: bool


def demoivre_canon(p: int, n: int) -> CanonResult:
    """Build and verify de Moivre's canon for the sum of n figurate numbers of order p.

    The canon is taken term by term as printed, (1-x^n)/(1-x)^p followed by
    p-1 subtracted terms, with the missing x^n restored in the last one.
    It is then checked against both the direct sum and the compact form
    (1-x)^(-p) - (1-x)^(-p) x^n sum_{k<p} C(n+k-1,k) (1-x)^k.
    """
    if p < 1 or n < 1:
        raise DomainError("p and n must be >= 1")
    u = Polynomial.one_minus_x()
    xn = Polynomial.monomial(n)
    series = Polynomial(figurate(p, k) for k in range(n))
    coefficients = tuple(binomial(n + j - 1, j) for j in range(p))

    # Times (1-x)^p, the term x^n / (1-x)^(p-j) becomes x^n (1-x)^j.
    stated = 1 - xn
    for j in range(1, p):
        stated = stated - xn * u**j * coefficients[j]
    compact = 1 - xn * Polynomial(coefficients).rebase()

    denominator = u**p
    check = series * denominator == stated == compact
    return CanonResult(p, n, series, stated, denominator, coefficients, check)


MISPRINTED_CANON = (
    "(1-x^n)/(1-x)^p - n x^n/(1-x)^(p-1) - n(n+1) x^n/(1*2*(1-x)^(p-2)) - ... "
    "with the x^n dropped from the numerator of the final printed term"
)
