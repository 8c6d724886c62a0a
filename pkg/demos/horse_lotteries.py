"""Choosing among horse lotteries by way of gambles.

A horse lottery gives, for every state, a probability over rewards.  Dropping
the worst reward's coordinate turns it into a gamble on state/reward pairs,
so any rule on gambles chooses between lotteries as well.  Coherent rules
never prefer the lottery that surely pays the worst reward.
"""

from fractions import Fraction as F

from lexchoice import GambleCone, PossibilitySpace, maximality
from lexchoice.horselot import (
    HorseLottery,
    RewardSet,
    gamblify,
    lift_choice,
    product_space,
    ungamblify,
    worst_reward_check,
)

states = PossibilitySpace(["rain", "sun"])
R = RewardSet(["win", "draw", "lose"], "lose")
P = product_space(states, R)
print("gambles live on", P.atoms)

safe = HorseLottery(states, R, [(0, 1, 0), (0, 1, 0)])
bet = HorseLottery(states, R, [(1, 0, 0), (0, 0, 1)])
hedge = HorseLottery(states, R, [(F(1, 2), 0, F(1, 2)), (F(1, 2), F(1, 2), 0)])
nothing = HorseLottery.degenerate(states, R, "lose")

for name, p in (("safe", safe), ("bet", bet), ("hedge", hedge), ("nothing", nothing)):
    g = gamblify(p)
    print(f"{name:8} -> {g!r}, back again: {ungamblify(g, states, R) == p}")

rule = maximality(GambleCone.vacuous(P))
kept = lift_choice(rule, [safe, bet, hedge, nothing])
names = {safe: "safe", bet: "bet", hedge: "hedge", nothing: "nothing"}
print("vacuous maximality keeps", [names[p] for p in kept])
print("worst reward never preferred:", worst_reward_check(rule, [safe, bet, hedge]))
