"""Pepys' dice question and its generalisation to s-faced dice."""

from __future__ import annotations

from fractions import Fraction

from .errors import DomainError
from .exact import binomial


def _lower_tail(throws: int, below: int, face: Fraction) -> Fraction:
    """P(a given face shows fewer than ``below`` times in ``throws`` throws)."""
    other = 1 - face
    return sum(
        (binomial(throws, j) * face**j * other ** (throws - j) for j in range(below)),
        Fraction(0),
    )


def pepys_probability(k: int) -> Fraction:
    """Chance of at least k sixes among 6k fair dice."""
    if k < 1:
        raise DomainError("k must be >= 1")
    return 1 - _lower_tail(6 * k, k, Fraction(1, 6))


def g_chance(s: int, n: int) -> Fraction:
    """g(sn, n): a selected face of a fair s-faced die shows fewer than n times in sn throws."""
    if s < 2:
        raise DomainError("a die needs at least two faces")
    if n < 1:
        raise DomainError("n must be >= 1")
    return _lower_tail(s * n, n, Fraction(1, s))


def g_table(s: int, n_max: int) -> list[Fraction]:
    return [g_chance(s, n) for n in range(1, n_max + 1)]


def g_monotone_check(s: int, n_max: int) -> bool:
    """True iff g(sn, n) strictly increases over n = 1..n_max."""
    if n_max < 2:
        raise DomainError("n_max must be >= 2")
    values = g_table(s, n_max)
    return all(a < b for a, b in zip(values, values[1:]))


def g_as_points(s: int, n: int) -> tuple[int, int, Fraction]:
    """Problem-of-points position whose Bernoulli chance for Pierre equals g(sn, n).

    Paul plays the selected face (chance 1/s per throw) and must win n rounds;
    Pierre gets the other faces, and the total m+n-1 rounds has to be sn.
    """
    return (s - 1) * n + 1, n, Fraction(s - 1, s)
