"""The problem of points.

Two players, Pierre and Paul, win each round with chances p and 1-p.  Pierre
still needs ``n`` rounds and Paul ``m``.  Bernoulli imagines all m+n-1
remaining rounds being played; de Montmort stops at the deciding round.
Both give the same chances, and their summing to one is the identity in
probabilistic clothing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product

from .errors import DomainError, ResourceError
from .exact import binomial

ENUMERATION_LIMIT = 22
MULTI_ENUMERATION_LIMIT = 24


@dataclass(frozen=True)
class GamePosition:
    n: int  # rounds Pierre still needs
    m: int  # rounds Paul still needs
    p: Fraction  # Pierre's chance per round

    def __post_init__(self):
        object.__setattr__(self, "p", Fraction(self.p))
        if self.n < 1 or self.m < 1:
            raise DomainError("both players must still need at least one round")
        if not 0 <= self.p <= 1:
            raise DomainError(f"round probability {self.p} outside [0, 1]")

    @property
    def q(self) -> Fraction:
        return 1 - self.p


@dataclass(frozen=True)
class Chances:
    pierre: Fraction
    paul: Fraction

    @property
    def total(self) -> Fraction:
        return self.pierre + self.paul


def chance_bernoulli(pos: GamePosition) -> Chances:
    n, m, p, q = pos.n, pos.m, pos.p, pos.q
    rounds = m + n - 1
    pierre = sum(
        (binomial(rounds, k) * p ** (rounds - k) * q**k for k in range(m)), Fraction(0)
    )
    paul = sum((binomial(rounds, l) * p**l * q ** (rounds - l) for l in range(n)), Fraction(0))
    return Chances(pierre, paul)


def chance_montmort(pos: GamePosition) -> Chances:
    n, m, p, q = pos.n, pos.m, pos.p, pos.q
    pierre = p * sum(
        (binomial(n + k - 1, k) * p ** (n - 1) * q**k for k in range(m)), Fraction(0)
    )
    paul = q * sum(
        (binomial(m + k - 1, k) * p**k * q ** (m - 1) for k in range(n)), Fraction(0)
    )
    return Chances(pierre, paul)


def fair_division(pos: GamePosition, stake) -> tuple[Fraction, Fraction]:
    stake = Fraction(stake)
    if stake <= 0:
        raise DomainError("stake must be positive")
    chances = chance_montmort(pos)
    return stake * chances.pierre, stake * chances.paul


def enumeration_oracle(pos: GamePosition) -> Chances:
    """Weigh every win/loss string of length m+n-1 and count who prevails."""
    n, m, p, q = pos.n, pos.m, pos.p, pos.q
    if n + m > ENUMERATION_LIMIT:
        raise ResourceError(f"n+m={n + m} exceeds the enumeration limit {ENUMERATION_LIMIT}")
    rounds = n + m - 1
    weights = [p**w * q ** (rounds - w) for w in range(rounds + 1)]
    pierre = paul = Fraction(0)
    for outcome in product((True, False), repeat=rounds):
        wins = sum(outcome)
        weight = weights[wins]
        if wins >= n:
            pierre += weight
        else:
            paul += weight
    return Chances(pierre, paul)


@dataclass(frozen=True)
class MultiPosition:
    needs: tuple[int, ...]
    probs: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "needs", tuple(int(v) for v in self.needs))
        object.__setattr__(self, "probs", tuple(Fraction(v) for v in self.probs))
        if len(self.needs) < 2 or len(self.needs) != len(self.probs):
            raise DomainError("need at least two players and one probability per player")
        if any(v < 1 for v in self.needs):
            raise DomainError("every player must still need at least one round")
        if any(v < 0 for v in self.probs) or sum(self.probs) != 1:
            raise DomainError("probabilities must be non-negative and sum to 1")


def multi_player_chances(pos: MultiPosition) -> list[Fraction]:
    """Chance that each player is first to collect all their needed wins.

    Dynamic programming over remaining-needs vectors; the memo lives only for
    this call.
    """
    players = len(pos.needs)
    probs = pos.probs

    @lru_cache(maxsize=None)
    def value(needs: tuple[int, ...]) -> tuple[Fraction, ...]:
        for i, need in enumerate(needs):
            if need == 0:
                return tuple(Fraction(int(j == i)) for j in range(players))
        acc = [Fraction(0)] * players
        for j, pj in enumerate(probs):
            if pj == 0:
                continue
            child = value(needs[:j] + (needs[j] - 1,) + needs[j + 1 :])
            for i in range(players):
                acc[i] += pj * child[i]
        return tuple(acc)

    return list(value(pos.needs))


def multi_player_enumeration(pos: MultiPosition) -> list[Fraction]:
    """Independent oracle: weigh every full sequence of round winners.

    After sum(needs) - players + 1 rounds somebody must have finished, so
    each sequence of that length is scanned for the first player to finish.
    """
    players = len(pos.needs)
    rounds = sum(pos.needs) - players + 1
    if sum(pos.needs) > MULTI_ENUMERATION_LIMIT or players**rounds > 2_000_000:
        raise ResourceError("position too large to enumerate")
    chances = [Fraction(0)] * players
    for seq in product(range(players), repeat=rounds):
        weight = Fraction(1)
        for j in seq:
            weight *= pos.probs[j]
        if weight == 0:
            continue
        remaining = list(pos.needs)
        for j in seq:
            remaining[j] -= 1
            if remaining[j] == 0:
                chances[j] += weight
                break
    return chances
