"""Audit three choice rules against the rationality axioms.

Every option set of up to three gambles from a 9-point grid is checked.
Maximality under the vacuous model breaks only the convexity axiom; the
lexicographic and convex rules pass all of them.
"""

from fractions import Fraction as F
from itertools import product

from lexchoice import GambleCone, LexSystem, PossibilitySpace, convex, lexicographic, maximality
from lexchoice.axioms import check_axioms

X = PossibilitySpace(["a", "b"])
grid = [X.gamble(v) for v in product((-1, 0, 2), repeat=2)]
D = GambleCone.vacuous(X)
M = LexSystem(X, [(F(1, 3), F(2, 3)), (1, 0)])

for rule in (maximality(D), lexicographic(M), convex(D)):
    report = check_axioms(rule, grid, 3)
    print(f"{rule.name}: {report.set_count} option sets")
    for line in report.lines():
        print("   ", line)
    for status in report.statuses.values():
        if not status.passed:
            print("    witness re-verifies:", status.witness.verify(rule))
