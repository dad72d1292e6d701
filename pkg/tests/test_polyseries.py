from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, settings, strategies as st

from chaundy.errors import DomainError
from chaundy.exact import binomial
from chaundy.polyseries import (
    DICKSON,
    Polynomial,
    RecurrenceSpec,
    figurate,
    finite_difference_annihilates,
    finite_recurring_sum_split,
    recurring_series_closed_form,
    render,
    truncated_geometric_power,
)

from conftest import rationals

X = sp.Symbol("x")


def to_sympy(poly):
    return sp.expand(sum(sp.Rational(c.numerator, c.denominator) * X**i for i, c in enumerate(poly.coeffs)))


polys = st.lists(rationals(), max_size=21).map(Polynomial)


def test_difference_of_squares():
    assert Polynomial([1, 1]) * Polynomial([1, -1]) == Polynomial([1, 0, -1])


def test_additive_identity():
    p = Polynomial([3, Fraction(1, 2), 7])
    assert p + Polynomial() == p
    assert Polynomial([0, 0, 0]).is_zero()
    assert Polynomial().degree == -1


def test_rebase_example():
    # 1 + 2x with x = 1 - u is 3 - 2u
    assert Polynomial([1, 2]).rebase() == Polynomial([3, -2])


@given(polys)
def test_rebase_is_involution(p):
    assert p.rebase().rebase() == p


@settings(max_examples=50)
@given(polys, polys)
def test_arithmetic_matches_sympy(a, b):
    assert to_sympy(a * b) == sp.expand(to_sympy(a) * to_sympy(b))
    assert to_sympy(a - b) == sp.expand(to_sympy(a) - to_sympy(b))
    assert to_sympy(a.rebase()) == sp.expand(to_sympy(a).subs(X, 1 - X))


@given(polys, st.lists(rationals(), min_size=1, max_size=6).filter(lambda c: c[-1] != 0))
def test_divmod_reconstructs(a, d):
    d = Polynomial(d)
    q, r = a.divmod(d)
    assert q * d + r == a
    assert r.degree < d.degree or r.is_zero()


def test_render():
    assert render(Polynomial([1, Fraction(-1, 2), 3])) == "1 - 1/2*x + 3*x^2"
    assert render(Polynomial()) == "0"


def test_truncated_geometric_power_examples():
    assert truncated_geometric_power(1, 2) == Polynomial([1, 1])
    assert truncated_geometric_power(2, 3) == Polynomial([1, 2, 3])
    for m in range(1, 6):
        assert truncated_geometric_power(m, 1) == Polynomial([1])


def test_truncated_geometric_power_matches_series_expansion():
    # the power series of (1-x)^-m, taken from sympy
    for m in range(1, 6):
        ser = sp.series((1 - X) ** (-m), X, 0, 8).removeO()
        for n in range(1, 9):
            expected = sum(ser.coeff(X, k) * X**k for k in range(n))
            assert to_sympy(truncated_geometric_power(m, n)) == sp.expand(expected)


def test_truncated_geometric_power_inverts_modulo_xn():
    for m in range(1, 16):
        for n in range(1, 16):
            prod = truncated_geometric_power(m, n) * Polynomial([1, -1]) ** m
            assert prod.truncate(n) == Polynomial([1])


def test_figurate_numbers():
    assert [figurate(3, k) for k in range(4)] == [1, 3, 6, 10]
    assert all(figurate(p, 0) == 1 for p in range(1, 10))
    assert figurate(2, 3, DICKSON) == binomial(4, 2) == 6
    # Dickson counts orders from 0 and starts one step later
    for p in range(0, 6):
        for k in range(1, 8):
            assert figurate(p, k, DICKSON) == figurate(p + 1, k - 1)
    # triangular numbers: order 3 for de Moivre, order 2 for Dickson
    assert [figurate(2, k, DICKSON) for k in range(1, 5)] == [1, 3, 6, 10]


def test_figurate_rejects_order_zero_for_demoivre():
    with pytest.raises(DomainError):
        figurate(0, 3)


@pytest.mark.parametrize("p,k_max", [(1, 10), (3, 20), (5, 50)])
def test_finite_difference_annihilates(p, k_max):
    assert finite_difference_annihilates(p, k_max)


def test_finite_difference_of_wrong_order_survives():
    # the (p-1)-th difference of degree p-1 polynomials is a nonzero constant
    def c(j, p):
        return figurate(p, j) if j >= 0 else 0

    p = 4
    total = sum((-1) ** l * binomial(p - 1, l) * c(5 - l, p) for l in range(p))
    assert total != 0


def test_closed_form_geometric():
    q, d = recurring_series_closed_form(RecurrenceSpec.geometric())
    assert q == Polynomial([1]) and d == Polynomial([1, -1])


def test_closed_form_order_two():
    spec = RecurrenceSpec((2, -1), (1, 2))
    q, d = recurring_series_closed_form(spec)
    assert q == Polynomial([1])
    assert d == Polynomial([1, -1]) ** 2
    assert spec.terms(6) == [1, 2, 3, 4, 5, 6]


@pytest.mark.parametrize("p", range(1, 9))
def test_closed_form_figurate(p):
    q, d = recurring_series_closed_form(RecurrenceSpec.figurate(p))
    assert q == Polynomial([1])
    assert d == Polynomial([1, -1]) ** p


def test_closed_form_matches_series_of_quotient():
    spec = RecurrenceSpec((Fraction(1, 2), 3, Fraction(-2, 5)), (1, -1, Fraction(2, 3)))
    q, d = recurring_series_closed_form(spec)
    expansion = sp.series(to_sympy(q) / to_sympy(d), X, 0, 12).removeO()
    for k, c in enumerate(spec.terms(12)):
        assert expansion.coeff(X, k) == sp.Rational(c.numerator, c.denominator)


def test_split_examples():
    q, r = finite_recurring_sum_split(RecurrenceSpec.geometric(), 3)
    assert (q, r) == (Polynomial([1]), Polynomial([-1]))
    q, r = finite_recurring_sum_split(RecurrenceSpec.figurate(2), 2)
    assert (q, r) == (Polynomial([1]), Polynomial([-3, 2]))


def test_split_needs_n_at_least_p():
    with pytest.raises(DomainError):
        finite_recurring_sum_split(RecurrenceSpec.figurate(4), 3)


@pytest.mark.parametrize("p", range(1, 7))
def test_split_reproduces_canon_coefficients(p):
    for n in range(p, 11):
        q, r = finite_recurring_sum_split(RecurrenceSpec.figurate(p), n)
        assert q == Polynomial([1])
        assert r.rebase() == Polynomial([-binomial(n + k - 1, k) for k in range(p)])


@settings(max_examples=60)
@given(
    st.integers(1, 5).flatmap(
        lambda p: st.tuples(
            st.lists(rationals(9, 5), min_size=p, max_size=p),
            st.lists(rationals(9, 5), min_size=p, max_size=p),
        )
    ),
    st.integers(0, 15),
)
def test_split_identity_random(spec_parts, extra):
    spec = RecurrenceSpec(tuple(spec_parts[0]), tuple(spec_parts[1]))
    n = spec.order + extra
    q, r = finite_recurring_sum_split(spec, n)
    assert q.degree <= spec.order - 1 and r.degree <= spec.order - 1
    assert q + r.shift(n) == Polynomial(spec.terms(n)) * spec.denominator()
