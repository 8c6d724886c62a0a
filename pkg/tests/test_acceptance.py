"""Acceptance battery: seven end-to-end criteria with runtime limits.

Each test records one PASS/FAIL line (with its wall time) that the
terminal summary prints after the run.
"""

from contextlib import contextmanager
from fractions import Fraction as F
from itertools import product
import random
import time

from lexchoice.axioms import ALL_AXIOMS, check_axioms
from lexchoice.choice import choose_convex, choose_maximality, convex, lexicographic, maximality
from lexchoice.cones import GambleCone, lower_prevision
from lexchoice.descent import construct_extension
from lexchoice.errors import NotSeparable
from lexchoice.exactlp import (
    FeasibleWitness,
    Subspace,
    cone_meet_subspace,
    cone_member,
    lp_feasible,
    verify_certificate,
)
from lexchoice.gambles import OptionSet, PossibilitySpace
from lexchoice.horselot import (
    HorseLottery,
    RewardSet,
    embed_option_set,
    gamblify,
    lift_choice,
    product_space,
    ungamblify,
    worst_reward_check,
)
from lexchoice.lexsys import LexSystem, classify_binary
from helpers import (
    brute_force_feasible,
    points_in_meet,
    rand_coherent_cone,
    rand_mass,
    rand_q,
    rand_vec,
    space,
)

RESULTS = []

X = PossibilitySpace(["a", "b"])
GRID = [X.gamble(v) for v in product((-1, 0, 2), repeat=2)]


@contextmanager
def criterion(number, title, limit):
    start = time.perf_counter()
    ok = False
    try:
        yield
        ok = True
    finally:
        elapsed = time.perf_counter() - start
        ok = ok and elapsed < limit
        line = f"{'PASS' if ok else 'FAIL'} criterion {number}: {title} ({elapsed:.2f} s, limit {limit} s)"
        RESULTS.append(line)
        print(line)
    assert elapsed < limit, line


def test_criterion_1_maximality_not_convex():
    with criterion(1, "vacuous maximality keeps 0, loses it after the midpoint", 1):
        D = GambleCone.vacuous(X)
        A = OptionSet([X.gamble(v) for v in ((0, 0), (-1, 2), (2, -1))])
        A1 = A | OptionSet([X.gamble((F(1, 2), F(1, 2)))])
        assert X.zero() in choose_maximality(D, A).chosen_set
        assert X.zero() not in choose_maximality(D, A1).chosen_set
        report = check_axioms(maximality(D), GRID, 4, axioms=("C5",))
        w = report["C5"].witness
        assert w.sets["A"] == A and w.sets["A1"] == A1 and w.option == X.zero()


def _sample_gamble(rng):
    # half the samples come from a coarse lattice so that boundary cases occur
    if rng.random() < 0.5:
        return X.gamble((F(rng.randint(-6, 6), rng.choice((1, 2, 3))), F(rng.randint(-6, 6), rng.choice((1, 2, 3)))))
    return X.gamble(rand_vec(rng, 2, 4, 12))


def test_criterion_2_binary_classification():
    with criterion(2, "binary classification and family formulas", 30):
        third = (F(1, 3), F(2, 3))
        cases = [
            ([third], "D_rho(1/3)"),
            ([third, (1, 0)], "D_rho_a(1/3)"),
            ([third, (0, 1)], "D_rho_b(1/3)"),
            ([(0, 1), (1, 0)], "D_0"),
            ([(1, 0), (0, 1)], "D_1"),
        ]
        rng = random.Random(2)
        mismatches = 0
        for layers, label in cases:
            M = LexSystem(X, layers)
            family = classify_binary(M)
            assert str(family) == label
            for _ in range(10_000):
                f = _sample_gamble(rng)
                mismatches += family.contains(f) != M.is_desirable(f)
        assert mismatches == 0


def _post_conditions(D, A, M, trace):
    assert all(M.is_desirable(g) for g in D.all_generators)
    assert not any(M.is_desirable(a) for a in A if not a.is_zero())
    assert not M.savage_null_events()
    assert len(M.layers) <= D.space.n


def test_criterion_3_constructive_round_trip():
    with criterion(3, "convex rule keeps 0 iff an extension is constructed", 60):
        rng = random.Random(3)
        for i in range(200):
            n = rng.randint(1, 5)
            D = rand_coherent_cone(rng, n, max_gens=4, bound=2, maxden=6)
            A = OptionSet([D.space.gamble(rand_vec(rng, n, 2, 6)) for _ in range(rng.randint(1, 5))])
            zero = D.space.zero()
            kept = zero in choose_convex(D, A | OptionSet([zero])).chosen_set
            try:
                M, trace = construct_extension(D, A, "lazy" if i % 2 else "eager")
            except NotSeparable as exc:
                assert not kept
                total = zero
                for a, w in exc.combination.items():
                    assert a in A and w >= 0
                    total = total + a * w
                assert total == exc.gamble and D.contains(total)
            else:
                assert kept
                _post_conditions(D, A, M, trace)


def test_criterion_4_axiom_batteries():
    with criterion(4, "axiom batteries on the 9-point grid, sets of size <= 4", 120):
        lex = LexSystem(X, [(F(1, 3), F(2, 3)), (1, 0)])
        assert check_axioms(lexicographic(lex), GRID, 4).all_passed
        report = check_axioms(maximality(GambleCone.vacuous(X)), GRID, 4)
        assert all(report[a].passed for a in ALL_AXIOMS if a != "C5")
        assert not report["C5"].passed
        rng = random.Random(4)
        for _ in range(10):
            D = GambleCone(X, [g.values for g in rand_coherent_cone(rng, 2, max_gens=3).generators])
            assert check_axioms(convex(D), GRID, 4, axioms=("C5",)).all_passed


def _random_system(rng, n):
    while True:
        M = LexSystem(space(n), [rand_mass(rng, n) for _ in range(rng.randint(1, 3))])
        if not M.savage_null_events():
            return M


def test_criterion_5_linear_prevision():
    with criterion(5, "lower prevision of a system is its first-layer expectation", 30):
        rng = random.Random(5)
        for _ in range(20):
            M = _random_system(rng, rng.randint(2, 4))
            bridge = M.as_cone_oracle()
            Y = M.space
            for _ in range(100):
                f = Y.gamble(rand_vec(rng, Y.n))
                h = Y.gamble(rand_vec(rng, Y.n))
                pf, ph, pfh = (lower_prevision(bridge, x) for x in (f, h, f + h))
                assert pf == M.expectation_vector(f)[0]
                assert ph == M.expectation_vector(h)[0]
                assert pfh == pf + ph


def _random_lottery(rng, S, R):
    return HorseLottery(S, R, [rand_mass(rng, len(R.rewards)) for _ in S.atoms])


def test_criterion_6_lifting():
    with criterion(6, "lottery round trips, lifted choice, worst reward", 30):
        rng = random.Random(6)
        S = PossibilitySpace(["s1", "s2"])
        R = RewardSet(["high", "mid", "low"], "low")
        P = product_space(S, R)
        for _ in range(100):
            p = _random_lottery(rng, S, R)
            assert ungamblify(gamblify(p), S, R) == p
        rules = []
        for i in range(50):
            D = GambleCone(P, [g.values for g in rand_coherent_cone(rng, P.n, max_gens=3).generators])
            rule = convex(D) if i % 2 else maximality(D)
            rules.append(rule)
            A = OptionSet([P.gamble(rand_vec(rng, P.n, 2, 4)) for _ in range(rng.randint(1, 4))])
            _, _, lots = embed_option_set(A, S, R)
            direct = rule(A).chosen_set
            lifted = lift_choice(rule, lots)
            assert [u in direct for u in A] == [q in lifted for q in lots]
        while len(rules) < 60:
            M = _random_system(rng, P.n)
            rules.append(lexicographic(LexSystem(P, [m for m in M.layers])))
        sample = [_random_lottery(rng, S, R) for _ in range(20)]
        sample += [HorseLottery.degenerate(S, R, r) for r in R.rewards]
        assert all(worst_reward_check(rule, sample) for rule in rules)


def test_criterion_7_lp_certificates():
    with criterion(7, "LP certificates and cone/subspace meets", 60):
        rng = random.Random(7)
        feasible = 0
        for _ in range(500):
            m, n = rng.randint(1, 4), rng.randint(1, 5)
            A = [[rand_q(rng, 2, 3) for _ in range(n)] for _ in range(m)]
            b = [rand_q(rng, 2, 3) for _ in range(m)]
            eqs = [(tuple(r), bi) for r, bi in zip(A, b)]
            out = lp_feasible(eqs, range(n))
            assert verify_certificate(eqs, range(n), out)
            assert isinstance(out, FeasibleWitness) == brute_force_feasible(A, b)
            feasible += isinstance(out, FeasibleWitness)
        assert 0 < feasible < 500
        pairs = 0
        while pairs < 100:
            gens = [g for g in (rand_vec(rng, 3, 2, 3) for _ in range(rng.randint(1, 5))) if any(g)]
            if not gens:
                continue
            K = Subspace.span([rand_vec(rng, 3, 2, 2) for _ in range(rng.randint(1, 2))], 3)
            meet = cone_meet_subspace(gens, K)
            for g in meet:
                assert g in K and cone_member(gens, g) is not None
            for p in points_in_meet(rng, gens, K, 3):
                assert p in K and cone_member(meet, p) is not None
            pairs += 1
