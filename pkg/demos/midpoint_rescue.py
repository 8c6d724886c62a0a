"""Maximality is not convex: adding a midpoint knocks out the status quo.

Two bets, each losing on one atom and winning twice as much on the other,
cannot beat doing nothing under the vacuous model.  Their average pays 1/2
for sure, and that one extra option is enough to reject 0.  The convex
rule sees through this already on the smaller set.
"""

from fractions import Fraction as F

from lexchoice import GambleCone, OptionSet, PossibilitySpace, choose_convex, choose_maximality
from lexchoice.cones import convexity_counterexample

X = PossibilitySpace(["a", "b"])
D = GambleCone.vacuous(X)

A = OptionSet([X.zero(), X.gamble((-1, 2)), X.gamble((2, -1))])
A1 = A | OptionSet([X.gamble((F(1, 2), F(1, 2)))])

for label, opts in (("A ", A), ("A1", A1)):
    res = choose_maximality(D, opts)
    print(f"maximality on {label}: chosen {list(res.chosen)}")
    for g, why in res.witnesses.items():
        print(f"    {g!r} rejected, beaten by {why!r}")

res = choose_convex(D, A)
print("convex rule on A: chosen", list(res.chosen))
for g, weights in res.witnesses.items():
    terms = " + ".join(f"{w}*({v!r} - {g!r})" for v, w in weights.items())
    print(f"    {g!r} rejected since {terms} is desirable")

# the same phenomenon found by search on a three-atom cone
Y = PossibilitySpace(["x", "y", "z"])
E = GambleCone(Y, [(-1, 2, 0), (0, -1, 3)])
B, B1 = convexity_counterexample(E)
print("search on a three-atom cone:")
print("    keeps 0 in", B)
print("    drops 0 in", B1)
