from fractions import Fraction

import pytest

from chaundy.dice import g_as_points, g_chance, g_monotone_check, pepys_probability
from chaundy.errors import DomainError
from chaundy.points import GamePosition, chance_bernoulli

F = Fraction


def count_distribution(throws, face):
    """Distribution of how often one face shows, built throw by throw."""
    dist = [F(1)]
    for _ in range(throws):
        nxt = [F(0)] * (len(dist) + 1)
        for i, v in enumerate(dist):
            nxt[i] += v * (1 - face)
            nxt[i + 1] += v * face
        dist = nxt
    return dist


def test_pepys_k1():
    assert pepys_probability(1) == 1 - F(5, 6) ** 6 == F(31031, 46656)


def test_pepys_frozen_values():
    # from the throw-by-throw distribution
    assert pepys_probability(2) == F(1346704211, 2176782336)
    assert pepys_probability(3) == F(15166600495229, 25389989167104)
    assert abs(float(pepys_probability(2)) - 0.61867) < 5e-6
    assert abs(float(pepys_probability(3)) - 0.59735) < 5e-6


def test_pepys_matches_distribution_oracle():
    for k in range(1, 7):
        assert pepys_probability(k) == sum(count_distribution(6 * k, F(1, 6))[k:])


def test_newton_ordering():
    values = [pepys_probability(k) for k in range(1, 7)]
    assert all(a > b for a, b in zip(values, values[1:]))


def test_g_zero_occurrences():
    for s in range(2, 9):
        assert g_chance(s, 1) == F(s - 1, s) ** s
    assert g_chance(6, 1) == F(15625, 46656)
    assert g_chance(2, 1) == F(1, 4)


def test_g_complements_pepys():
    for k in (1, 2, 3):
        assert g_chance(6, k) == 1 - pepys_probability(k)


def test_g_complement_identity():
    for s in range(2, 9):
        for n in range(1, 13):
            dist = count_distribution(s * n, F(1, s))
            assert g_chance(s, n) == sum(dist[:n])
            assert g_chance(s, n) + sum(dist[n:]) == 1


@pytest.mark.parametrize("s,n_max", [(6, 10), (2, 15), (3, 12)])
def test_monotone_examples(s, n_max):
    assert g_monotone_check(s, n_max)


def test_monotone_for_all_small_dice():
    assert all(g_monotone_check(s, 12) for s in range(2, 9))


def test_g_as_bernoulli_chance():
    for s in range(2, 7):
        for n in range(1, 7):
            pn, pm, p = g_as_points(s, n)
            assert pn + pm - 1 == s * n
            assert chance_bernoulli(GamePosition(pn, pm, p)).pierre == g_chance(s, n)


def test_domain():
    with pytest.raises(DomainError):
        g_chance(1, 3)
    with pytest.raises(DomainError):
        pepys_probability(0)
    with pytest.raises(DomainError):
        g_monotone_check(6, 1)
