"""Horse lotteries and their embedding into a gamble space.

A horse lottery assigns a probability mass over rewards to every state.
Dropping the worst reward's column turns it into a gamble on the product
space of states and remaining rewards; atoms of that space are named
``"state:reward"``, state major.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import NotInImage, SpaceMismatch
from .exactlp import format_rational, vector
from .gambles import Gamble, OptionSet, PossibilitySpace


@dataclass(frozen=True)
class RewardSet:
    rewards: tuple
    worst: str

    def __init__(self, rewards: Iterable[str], worst: str):
        rewards = tuple(str(r) for r in rewards)
        if len(rewards) < 2:
            raise ValueError("a reward set needs at least two rewards")
        if len(set(rewards)) != len(rewards):
            raise ValueError("reward names must be unique")
        if worst not in rewards:
            raise ValueError(f"worst reward {worst!r} is not among the rewards")
        object.__setattr__(self, "rewards", rewards)
        object.__setattr__(self, "worst", worst)

    @property
    def others(self) -> tuple:
        return tuple(r for r in self.rewards if r != self.worst)


def product_space(space: PossibilitySpace, rewards: RewardSet) -> PossibilitySpace:
    return PossibilitySpace(f"{x}:{s}" for x in space.atoms for s in rewards.others)


class HorseLottery:
    """A row-stochastic table: one mass function over rewards per state."""

    __slots__ = ("space", "rewards", "table")

    def __init__(self, space: PossibilitySpace, rewards: RewardSet, table: Sequence[Sequence]):
        rows = tuple(vector(r) for r in table)
        if len(rows) != space.n:
            raise ValueError(f"table has {len(rows)} rows for {space.n} states")
        for x, row in zip(space.atoms, rows):
            if len(row) != len(rewards.rewards):
                raise ValueError(f"row {x}: has {len(row)} entries for {len(rewards.rewards)} rewards")
            if any(p < 0 for p in row):
                raise ValueError(f"row {x}: negative probability")
            if sum(row) != 1:
                raise ValueError(f"row {x}: probabilities sum to {format_rational(sum(row))}, not 1")
        self.space = space
        self.rewards = rewards
        self.table = rows

    @classmethod
    def degenerate(cls, space: PossibilitySpace, rewards: RewardSet, reward: str) -> "HorseLottery":
        j = rewards.rewards.index(reward)
        row = [1 if k == j else 0 for k in range(len(rewards.rewards))]
        return cls(space, rewards, [row] * space.n)

    def __eq__(self, other) -> bool:
        return (isinstance(other, HorseLottery) and self.space == other.space
                and self.rewards == other.rewards and self.table == other.table)

    def __hash__(self) -> int:
        return hash(self.table)

    def __repr__(self) -> str:
        rows = "; ".join(",".join(map(format_rational, r)) for r in self.table)
        return f"HorseLottery[{rows}]"


def gamblify(p: HorseLottery) -> Gamble:
    """Delete the worst reward's column and flatten, state major."""
    worst = p.rewards.rewards.index(p.rewards.worst)
    values = [v for row in p.table for j, v in enumerate(row) if j != worst]
    return Gamble(product_space(p.space, p.rewards), values)


def ungamblify(g: Gamble, space: PossibilitySpace, rewards: RewardSet) -> HorseLottery:
    """Inverse of :func:`gamblify` on its image."""
    if g.space != product_space(space, rewards):
        raise SpaceMismatch("gamble does not live on the lottery product space")
    k = len(rewards.others)
    worst = rewards.rewards.index(rewards.worst)
    table = []
    for i, x in enumerate(space.atoms):
        part = list(g.values[i * k:(i + 1) * k])
        if any(v < 0 for v in part):
            raise NotInImage(f"state {x}: negative entry")
        rest = 1 - sum(part)
        if rest < 0:
            raise NotInImage(f"state {x}: entries sum to {format_rational(sum(part))} > 1")
        part.insert(worst, rest)
        table.append(part)
    return HorseLottery(space, rewards, table)


def embed_option_set(A: OptionSet, space: PossibilitySpace, rewards: RewardSet):
    """Shift and shrink an option set into the gamblifier's image.

    Returns ``(lam, g, lotteries)`` where ``g`` is the sum of the absolute
    values of the options, ``lam`` is one more than the largest per-state sum
    over ``A + g``, and ``lotteries`` are the preimages of ``(f + g) / lam``
    in the order of ``A``.
    """
    prod = product_space(space, rewards)
    if A.space != prod:
        raise SpaceMismatch("option set does not live on the lottery product space")
    g = Gamble(prod, [sum((abs(f.values[j]) for f in A), Fraction(0)) for j in range(prod.n)])
    k = len(rewards.others)
    shifted = [f + g for f in A]
    top = max(sum(h.values[i * k:(i + 1) * k]) for h in shifted for i in range(space.n))
    lam = top + 1
    lotteries = [ungamblify(h * (1 / lam), space, rewards) for h in shifted]
    return lam, g, lotteries


def lift_choice(C, lotteries: Sequence[HorseLottery]) -> list:
    """Apply a gamble-space rule to lotteries through the gamblifier."""
    lotteries = list(lotteries)
    if not lotteries:
        raise ValueError("at least one lottery is required")
    first = lotteries[0]
    if any(p.space != first.space or p.rewards != first.rewards for p in lotteries):
        raise SpaceMismatch("lotteries differ in states or rewards")
    images = [gamblify(p) for p in lotteries]
    chosen = C(OptionSet(images)).chosen_set
    return [p for p, g in zip(lotteries, images) if g in chosen]


def lifted_rule(C):
    """``lotteries -> chosen lotteries`` for the rule ``C``."""
    return lambda lotteries: lift_choice(C, lotteries)


def worst_reward_check(C, sample: Iterable[HorseLottery]) -> bool:
    """Does the lifted rule reject the sure worst reward next to every other
    sampled lottery?"""
    for p in sample:
        worst = HorseLottery.degenerate(p.space, p.rewards, p.rewards.worst)
        if p == worst:
            continue
        if worst in lift_choice(C, [p, worst]):
            return False
    return True
