from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from chaundy.errors import DomainError
from chaundy.exact import binomial
from chaundy.identity import (
    cb_polynomial_identity,
    cb_split,
    cb_terms,
    demoivre_canon,
    hering_identity_check,
    hering_sides,
    hering_to_cb,
)
from chaundy.polyseries import Polynomial

from conftest import rationals

F = Fraction
X = sp.Symbol("x")


def cb_sympy(n, m):
    first = (1 - X) ** (n + 1) * sum(sp.binomial(n + k, k) * X**k for k in range(m + 1))
    second = X ** (m + 1) * sum(sp.binomial(m + k, k) * (1 - X) ** k for k in range(n + 1))
    return sp.expand(first), sp.expand(second)


def test_split_trivial_case():
    x = F(2, 9)
    split = cb_split(0, 0, x)
    assert (split.first, split.second) == (1 - x, x)


def test_split_half():
    split = cb_split(1, 1, F(1, 2))
    assert (split.first, split.second) == (F(1, 2), F(1, 2))


def test_split_frozen_value():
    # independent evaluation through sympy at x = 2/7
    first, second = cb_sympy(3, 2)
    x = sp.Rational(2, 7)
    split = cb_split(3, 2, F(2, 7))
    assert split.first == F(str(first.subs(X, x)))
    assert split.second == F(str(second.subs(X, x)))
    assert split.total == 1


@given(st.integers(0, 15), st.integers(0, 15), rationals())
def test_split_sums_to_one(n, m, x):
    assert cb_split(n, m, x).total == 1


@given(st.integers(0, 12), st.integers(0, 12), rationals())
def test_symmetry(n, m, x):
    assert cb_split(n, m, x).first == cb_split(m, n, 1 - x).second


def test_polynomial_identity_small():
    assert cb_polynomial_identity(0, 0)
    assert cb_polynomial_identity(1, 1)


def test_terms_agree_with_sympy():
    for n in range(5):
        for m in range(5):
            first, second = cb_terms(n, m)
            f_ref, s_ref = cb_sympy(n, m)
            assert [sp.Rational(c.numerator, c.denominator) for c in first.coeffs] == sp.Poly(
                f_ref, X
            ).all_coeffs()[::-1]
            assert first + second == Polynomial([1])
            assert sp.expand(f_ref + s_ref) == 1


def test_polynomial_identity_sweep():
    assert all(cb_polynomial_identity(n, m) for n in range(13) for m in range(13))


def test_hering_examples():
    lhs, rhs = hering_sides(1, 2, F(1, 3))
    assert lhs == rhs == F(4, 3)
    assert hering_identity_check(1, 1, F(-5, 3))
    assert hering_identity_check(4, 6, F(-3, 5))


def test_hering_rejects_x_one():
    with pytest.raises(DomainError):
        hering_identity_check(2, 2, 1)


def test_hering_detects_swapped_indices():
    # Hering's right side with m and n swapped in the inner truncation is wrong
    from chaundy.polyseries import truncated_geometric_power

    m, n, x = 3, 2, F(1, 3)
    lhs = truncated_geometric_power(m, n)(x)
    wrong = (1 - x) ** -m * (1 - x**n * truncated_geometric_power(m, n)(1 - x))
    assert lhs != wrong


@pytest.mark.parametrize("m,n,cb", [(1, 1, (0, 0)), (3, 2, (2, 1)), (5, 4, (4, 3))])
def test_hering_to_cb(m, n, cb):
    tr = hering_to_cb(m, n)
    assert (tr.cb_n, tr.cb_m) == cb
    assert tr.verified


def test_canon_geometric():
    canon = demoivre_canon(1, 3)
    assert canon.series == Polynomial([1, 1, 1])
    assert canon.numerator == Polynomial([1, 0, 0, -1])
    assert canon.denominator == Polynomial([1, -1])
    assert canon.check


def test_canon_p2_n2():
    # 1 + 2x = (1 - x^2)/(1-x)^2 - 2x^2/(1-x)
    canon = demoivre_canon(2, 2)
    assert canon.series == Polynomial([1, 2])
    assert canon.coefficients == (1, 2)
    assert canon.check
    x = F(1, 5)
    assert 1 + 2 * x == (1 - x**2) / (1 - x) ** 2 - 2 * x**2 / (1 - x)


def test_canon_p3_n4():
    assert demoivre_canon(3, 4).check


def test_canon_printed_misprint_fails():
    # dropping x^n from the last subtracted term, as printed, breaks the canon
    p, n, x = 5, 3, F(1, 3)
    series = sum(binomial(p + k - 1, k) * x**k for k in range(n))
    terms = [binomial(n + j - 1, j) * x**n / (1 - x) ** (p - j) for j in range(1, p)]
    terms[-1] /= x**n
    assert series == (1 - x**n) / (1 - x) ** p - sum(terms[:-1]) - terms[-1] * x**n
    assert series != (1 - x**n) / (1 - x) ** p - sum(terms)


def test_forms_agree_under_translations():
    for p in range(1, 11):
        for n in range(1, 11):
            # de Moivre's (p, n) is Hering's (m=p, n) and CB's (n=p-1, m=n-1)
            assert demoivre_canon(p, n).check
            assert hering_identity_check(p, n, F(2, 7))
            assert cb_polynomial_identity(p - 1, n - 1)
            assert hering_to_cb(p, n).verified


@given(st.integers(1, 10), st.integers(1, 10), rationals().filter(lambda v: 0 < v < 1))
def test_probabilistic_form(n, m, p):
    lhs = p**n * sum(binomial(n + k - 1, k) * (1 - p) ** k for k in range(m)) + (1 - p) ** m * sum(
        binomial(m + k - 1, k) * p**k for k in range(n)
    )
    assert lhs == 1
    split = cb_split(n - 1, m - 1, 1 - p)
    assert split.first == p**n * sum(binomial(n + k - 1, k) * (1 - p) ** k for k in range(m))
