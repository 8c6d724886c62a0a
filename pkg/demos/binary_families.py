"""Every lexicographic model on two atoms falls into one of five families.

For each model we print its family and then probe a handful of gambles,
comparing the family's closed-form description with the layer-by-layer
expectation test.
"""

from fractions import Fraction as F
from itertools import product

from lexchoice import LexSystem, PossibilitySpace, classify_binary

X = PossibilitySpace(["a", "b"])
third = (F(1, 3), F(2, 3))

models = [
    [third],
    [third, (1, 0)],
    [third, (0, 1)],
    [(0, 1), (1, 0)],
    [(1, 0), (0, 1)],
    [third, third, (F(1, 2), F(1, 2))],  # redundant layers collapse
]

probes = [X.gamble(v) for v in product((-2, -1, 0, 1, 2), repeat=2)]

for layers in models:
    M = LexSystem(X, layers)
    fam = classify_binary(M)
    hits = [g for g in probes if M.is_desirable(g)]
    agree = all(fam.contains(g) == M.is_desirable(g) for g in probes)
    print(f"{str(fam):14} layers={[tuple(map(str, m)) for m in layers]}")
    print(f"{'':14} {len(hits)} of {len(probes)} probes desirable, formulas agree: {agree}")

# the two models that only differ past the first layer
Ma = LexSystem(X, [third, (1, 0)])
Mb = LexSystem(X, [third, (0, 1)])
g = X.gamble((2, -1))
ea = tuple(map(str, Ma.expectation_vector(g)))
eb = tuple(map(str, Mb.expectation_vector(g)))
print(f"{g!r}: expectations {ea} under D_rho_a, {eb} under D_rho_b")
