"""Terminating Gauss hypergeometric sums over exact rationals.

Besides plain evaluation this module checks Hering's derivation of the
truncated binomial series: reversing the order of summation, then the Pfaff
transformation, and finally the integer-m limit where a finite head is
joined to a convergent geometric-like tail.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import DomainError, PropertyFailure
from .exact import binomial, is_integer, is_nonpositive_integer, pochhammer
from .polyseries import Polynomial, truncated_geometric_power


@dataclass(frozen=True)
class Hyp2F1Spec:
    a: Fraction
    b: Fraction
    c: Fraction
    z: Fraction
    terms: Optional[int] = None

    def __post_init__(self):
        for name in ("a", "b", "c", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    def last_index(self) -> int:
        """Index K of the last retained term."""
        candidates = [int(-v) for v in (self.a, self.b) if is_nonpositive_integer(v)]
        if self.terms is not None:
            candidates.append(self.terms - 1)
        if not candidates:
            raise DomainError(
                "series does not terminate: neither a nor b is a non-positive "
                "integer and no truncation length was given"
            )
        return min(candidates)


def _series_terms(a, b, c, z, last):
    """Yield the terms (a)_k (b)_k / ((c)_k k!) z^k for k = 0..last.

    ``b`` and ``z`` may be Polynomials; ``a`` and ``c`` must be scalars.
    """
    term = Fraction(1) if not isinstance(b, Polynomial) else Polynomial.constant(1)
    yield term
    for k in range(last):
        if c + k == 0:
            raise DomainError(f"(c)_k vanishes at k={k + 1}: c={c} is a pole")
        term = term * (b + k) * z * (Fraction(a + k) / ((c + k) * (k + 1)))
        yield term


def hyp2f1_terminating(spec: Hyp2F1Spec) -> Fraction:
    return sum(_series_terms(spec.a, spec.b, spec.c, spec.z, spec.last_index()), Fraction(0))


def hyp2f1(a, b, c, z, terms: Optional[int] = None) -> Fraction:
    return hyp2f1_terminating(Hyp2F1Spec(a, b, c, z, terms))


def hyp2f1_polynomial(a: int, b: Polynomial, c, z) -> Polynomial:
    """Terminating 2F1 whose second parameter is a polynomial in some variable.

    Used to build Krawtchouk polynomials, where that parameter is -(x+N).
    """
    if not is_nonpositive_integer(a):
        raise DomainError("polynomial-valued 2F1 needs a non-positive integer a")
    c = Fraction(c)
    return sum(_series_terms(Fraction(a), b, c, Fraction(z), int(-a)), Polynomial())


def verify_pfaff(a, b, c, z) -> bool:
    """Exact check of 2F1(a,b;c;z) = (1-z)^(-a) 2F1(a, c-b; c; z/(z-1))."""
    a, b, c, z = (Fraction(v) for v in (a, b, c, z))
    if not is_nonpositive_integer(a):
        raise DomainError("Pfaff check needs a terminating (non-positive integer) a")
    if z == 1:
        raise DomainError("z = 1 makes z/(z-1) undefined")
    k_max = int(-a)
    lhs = hyp2f1(a, b, c, z, terms=k_max + 1)
    rhs = (1 - z) ** int(-a) * hyp2f1(a, c - b, c, z / (z - 1), terms=k_max + 1)
    return lhs == rhs


@dataclass(frozen=True)
class HeringChain:
    """The members of Hering's chain for one parameter set."""

    truncated_sum: Fraction
    reversed_form: Fraction
    pfaff_form: Fraction

    @property
    def consistent(self) -> bool:
        return self.truncated_sum == self.reversed_form == self.pfaff_form


def hering_chain(m, n: int, x) -> HeringChain:
    """Evaluate every member of Hering's chain at non-integer m.

    The first member is the truncated series sum_{k<n} (m)_k/k! x^k.  The
    second writes it backwards from its top term as a 2F1 in 1/x.  The third
    applies Pfaff to that terminating 2F1, landing on argument 1/(1-x).
    Pfaff on the non-terminating upper parameter 1 would reach the same
    argument but only as an infinite series, so it is not used here.
    """
    m, x = Fraction(m), Fraction(x)
    if n < 1:
        raise DomainError("n must be >= 1")
    if x in (0, 1):
        raise DomainError("x must avoid 0 and 1")
    if is_integer(m):
        raise DomainError("the chain is checked for non-integer m only")
    c = -m - n + 2
    lead = pochhammer(m, n - 1) / pochhammer(1, n - 1)

    direct = sum((pochhammer(m, k) / pochhammer(1, k) * x**k for k in range(n)), Fraction(0))
    reversed_form = lead * x ** (n - 1) * hyp2f1(-n + 1, 1, c, 1 / x)
    # Pfaff on a = -n+1, z = 1/x: (1-z)^(n-1) = ((x-1)/x)^(n-1), z/(z-1) = 1/(1-x)
    pfaff_form = (
        lead * x ** (n - 1) * ((x - 1) / x) ** (n - 1) * hyp2f1(-n + 1, c - 1, c, 1 / (1 - x))
    )
    return HeringChain(direct, reversed_form, pfaff_form)


def hering_chain_check(m, n: int, x) -> bool:
    return hering_chain(m, n, x).consistent


@dataclass(frozen=True)
class TailCheck:
    """Outcome of checking the integer-m limit of Hering's 2F1."""

    head: Fraction
    head_target: Fraction
    tail_partial: Fraction
    tail_target: Fraction
    residual: Fraction
    bound: Fraction

    @property
    def passed(self) -> bool:
        return self.head == self.head_target and self.residual <= self.bound


def hering_limit_tail_check(m: int, n: int, x, terms: int = 60) -> TailCheck:
    """Check the two-part form of Hering's 2F1 once m is a positive integer.

    After multiplying by C(m+n-2, n-1) x^n/(x-1), the finite head (m terms)
    must equal -(1-x)^(-m) x^n (1-(1-x))_m^(-n) exactly, and the infinite tail
    must sum to (1-x)^(-m).  The tail is summed to ``terms`` terms and the
    omitted part is bounded by a geometric majorant: past the cut the ratio of
    consecutive terms never exceeds rho = (terms+n)/(terms+1) * |1-x|^(-1),
    so the remainder is at most |first omitted term| / (1 - rho).
    """
    x = Fraction(x)
    if m < 1 or n < 1:
        raise DomainError("m and n must be >= 1")
    if abs(x - 1) <= 1:
        raise DomainError("outside region of convergence: need |x-1| > 1")
    if terms < 1:
        raise DomainError("need at least one tail term")
    u = 1 / (1 - x)
    scale = binomial(m + n - 2, n - 1) * x**n / (x - 1)
    c = -m - n + 2

    head = scale * sum(
        (pochhammer(-m + 1, k) / pochhammer(c, k) * u**k for k in range(m)), Fraction(0)
    )
    head_target = -((1 - x) ** -m) * x**n * truncated_geometric_power(n, m)(1 - x)

    norm = pochhammer(c, n - 1)

    def tail_term(k):
        return pochhammer(k - m - n + 2, n - 1) / norm * u**k

    start = m + n - 1
    tail_partial = scale * sum((tail_term(k) for k in range(start, start + terms)), Fraction(0))
    tail_target = (1 - x) ** -m

    rho = Fraction(terms + n, terms + 1) * abs(u)
    if rho >= 1:
        raise DomainError(f"{terms} terms are too few for a geometric tail bound here")
    bound = abs(scale * tail_term(start + terms)) / (1 - rho)
    residual = abs(tail_partial - tail_target)
    result = TailCheck(head, head_target, tail_partial, tail_target, residual, bound)
    if not result.passed:
        raise PropertyFailure(f"Hering limit check failed: {result}")
    return result
