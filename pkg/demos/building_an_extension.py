"""Build a lexicographic model that keeps every listed gamble undesirable.

Starting from a cone of desirable gambles and a set A of gambles to avoid,
each round finds a functional that is positive on the cone and non-positive
on A, turns it into a probability mass, and recurses inside its kernel.
When no such model exists, a non-negative combination of A that the cone
already accepts is reported instead.
"""

from lexchoice import GambleCone, NotSeparable, OptionSet, PossibilitySpace, construct_extension

Y = PossibilitySpace(["x", "y", "z"])
D = GambleCone(Y, [(-1, 2, 0), (0, -1, 3)])
A = OptionSet([Y.gamble((1, -1, -1)), Y.gamble((-2, 1, 0))])

for strategy in ("eager", "lazy"):
    M, trace = construct_extension(D, A, strategy)
    print(f"{strategy} strategy, {len(M.layers)} layer(s):")
    for k, step in enumerate(trace.layers, 1):
        print(f"  layer {k}: on a {step.kernel.dim}-dim subspace, mass {tuple(map(str, step.mass))}")
    print("  generators desirable:", all(M.is_desirable(g) for g in D.all_generators))
    print("  avoided gambles desirable:", [M.is_desirable(a) for a in A])

# a sure gain can never be avoided
X = PossibilitySpace(["a", "b"])
try:
    construct_extension(GambleCone.vacuous(X), OptionSet([X.gamble((-1, 2)), X.gamble((2, -1))]))
except NotSeparable as exc:
    terms = " + ".join(f"{w}*{a!r}" for a, w in exc.combination.items())
    print(f"cannot avoid both bets: {terms} = {exc.gamble!r} is desirable")
