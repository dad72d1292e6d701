"""Greville's maximally flat smoothing filter built from Krawtchouk polynomials.

The weight on x = -N..N is w(x) = C(2N, N+x), the symmetric binomial, whose
orthogonal polynomials are Krawtchouk polynomials with p = 1/2 shifted by N.
Filter weights are c(x) = K_2n(x, 0) w(x) with K the Christoffel-Darboux
kernel.  In the variable s = sin^2(w/2) the frequency response splits as
1 - s^(n+1) P(s) = (1-s)^(N-n) Q(s), where P and Q are exactly the two
truncated binomial sums of the Chaundy-Bullard identity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .errors import DomainError, PropertyFailure
from .exact import binomial
from .hypergeom import hyp2f1_polynomial
from .polyseries import Polynomial


@dataclass(frozen=True)
class FilterSpec:
    N: int  # half-width, support -N..N
    n: int  # kernel degree is 2n

    def __post_init__(self):
        if self.N < 1:
            raise DomainError("half-width N must be >= 1")
        if not 0 <= self.n < self.N:
            raise DomainError(f"need 0 <= n < N, got n={self.n}, N={self.N}")


def weight(N: int, x: int) -> int:
    return binomial(2 * N, N + x)


@dataclass(frozen=True)
class KrawtchoukBasis:
    N: int
    polys: tuple[Polynomial, ...]
    norms: tuple[Fraction, ...]

    @property
    def support(self) -> range:
        return range(-self.N, self.N + 1)

    def inner(self, a: int, b: int) -> Fraction:
        pa, pb = self.polys[a], self.polys[b]
        return sum((pa(x) * pb(x) * weight(self.N, x) for x in self.support), Fraction(0))


def krawtchouk_poly(a: int, N: int) -> Polynomial:
    """p_a(x) = 2F1(-a, -(x+N); -2N; 2) as a polynomial in x."""
    shifted = Polynomial([-N, -1])  # -(x+N)
    return hyp2f1_polynomial(-a, shifted, -2 * N, 2)


@lru_cache(maxsize=64)
def krawtchouk_basis(N: int) -> KrawtchoukBasis:
    if N < 1:
        raise DomainError("N must be >= 1")
    polys = tuple(krawtchouk_poly(a, N) for a in range(2 * N + 1))
    norms = tuple(Fraction(4**N, binomial(2 * N, a)) for a in range(2 * N + 1))
    return KrawtchoukBasis(N, polys, norms)


def kernel_values(spec: FilterSpec) -> list[Fraction]:
    """K_2n(x, 0) for x = -N..N, without the weight."""
    basis = krawtchouk_basis(spec.N)
    at_zero = [p(0) for p in basis.polys]
    return [
        sum(
            (basis.polys[k](x) * at_zero[k] / basis.norms[k] for k in range(2 * spec.n + 1)),
            Fraction(0),
        )
        for x in basis.support
    ]


def kernel_coefficients(spec: FilterSpec) -> list[Fraction]:
    """Filter weights c(x) = K_2n(x, 0) w(x), listed for x = -N..N."""
    return [
        k * weight(spec.N, x)
        for k, x in zip(kernel_values(spec), range(-spec.N, spec.N + 1))
    ]


def apply_filter(spec: FilterSpec, signal: Sequence) -> list[Fraction]:
    """g(y) = sum_x f(y-x) c(x) over the positions where the window fits."""
    width = 2 * spec.N + 1
    if len(signal) < width:
        raise DomainError(f"signal of length {len(signal)} is shorter than the window {width}")
    coeffs = kernel_coefficients(spec)
    f = [Fraction(v) for v in signal]
    N = spec.N
    out = []
    for y in range(N, len(f) - N):
        out.append(sum((f[y - x] * coeffs[x + N] for x in range(-N, N + 1)), Fraction(0)))
    return out


def _chebyshev_in_s(degree: int) -> list[Polynomial]:
    """cos(k w) as polynomials in s = sin^2(w/2), k = 0..degree."""
    t = Polynomial([1, -2])  # cos w = 1 - 2s
    out = [Polynomial.constant(1), t]
    while len(out) <= degree:
        out.append(2 * t * out[-1] - out[-2])
    return out[: degree + 1]


def cosine_sum_in_s(values: Sequence[Fraction]) -> Polynomial:
    """sum_x v(x) e^(-i w x) for an even sequence on -N..N, as a polynomial in s."""
    N = len(values) // 2
    cheb = _chebyshev_in_s(N)
    poly = Polynomial.constant(values[N])
    for x in range(1, N + 1):
        if values[N + x] != values[N - x]:
            raise PropertyFailure("coefficients are not symmetric")
        poly = poly + cheb[x] * (2 * values[N + x])
    return poly


def cb_P(spec: FilterSpec) -> Polynomial:
    """sum_{k<N-n} C(n+k, k) (1-s)^k."""
    return Polynomial(binomial(spec.n + k, k) for k in range(spec.N - spec.n)).rebase()


def cb_Q(spec: FilterSpec) -> Polynomial:
    """sum_{k<=n} C(N-n-1+k, k) s^k."""
    return Polynomial(binomial(spec.N - spec.n - 1 + k, k) for k in range(spec.n + 1))


@dataclass(frozen=True)
class TransferFunction:
    spec: FilterSpec
    s_poly: Polynomial
    P: Polynomial
    Q: Polynomial

    def __call__(self, s) -> Fraction:
        return self.s_poly(Fraction(s))

    def at_omega(self, omega: float) -> float:
        s = math.sin(omega / 2) ** 2
        return float(sum(float(c) * s**i for i, c in enumerate(self.s_poly.coeffs)))


def transfer_function(spec: FilterSpec) -> TransferFunction:
    """Exact frequency response and its two factorisations.

    Raises PropertyFailure if either division leaves a remainder or the
    quotients differ from the closed binomial sums, both of which would mean
    the kernel is wrong.
    """
    s_poly = cosine_sum_in_s(kernel_coefficients(spec))
    s = Polynomial.x()
    P = (1 - s_poly).exact_div(s ** (spec.n + 1))
    Q = s_poly.exact_div(Polynomial.one_minus_x() ** (spec.N - spec.n))
    if P != cb_P(spec):
        raise PropertyFailure(f"P = {P} differs from the closed form {cb_P(spec)}")
    if Q != cb_Q(spec):
        raise PropertyFailure(f"Q = {Q} differs from the closed form {cb_Q(spec)}")
    return TransferFunction(spec, s_poly, P, Q)


def transfer_function_unweighted(spec: FilterSpec) -> Polynomial:
    """sum_x K_2n(x, 0) e^(-i w x) with the weight w(x) left out.

    This is the response as literally printed for Greville's filter.  It is
    kept for comparison only: it is not 1 at w = 0 and does not factor.
    """
    return cosine_sum_in_s(kernel_values(spec))


def _zero_order_at_one(poly: Polynomial) -> int:
    order = 0
    u = Polynomial.one_minus_x()
    while not poly.is_zero():
        quot, rem = poly.divmod(u)
        if not rem.is_zero():
            break
        poly = quot
        order += 1
    return order


@dataclass(frozen=True)
class FlatnessReport:
    spec: FilterSpec
    grid: tuple[Fraction, ...]
    values: tuple[Fraction, ...]
    strictly_decreasing: bool
    endpoints_ok: bool
    order_at_zero: int  # zero order of 1 - phi at s = 0
    order_at_one: int  # zero order of phi at s = 1

    @property
    def maximally_flat(self) -> bool:
        return self.order_at_zero == self.spec.n + 1 and self.order_at_one == self.spec.N - self.spec.n

    @property
    def ok(self) -> bool:
        return self.strictly_decreasing and self.endpoints_ok and self.maximally_flat


def flatness_report(spec: FilterSpec, samples: int) -> FlatnessReport:
    """Evaluate phi on s = j/samples and read off its flatness at both ends."""
    if samples < 2:
        raise DomainError("need at least two samples")
    tf = transfer_function(spec)
    grid = tuple(Fraction(j, samples) for j in range(samples + 1))
    values = tuple(tf.s_poly(s) for s in grid)
    decreasing = all(a > b for a, b in zip(values, values[1:]))
    endpoints = values[0] == 1 and values[-1] == 0
    return FlatnessReport(
        spec,
        grid,
        values,
        decreasing,
        endpoints,
        (1 - tf.s_poly).valuation(),
        _zero_order_at_one(tf.s_poly),
    )
