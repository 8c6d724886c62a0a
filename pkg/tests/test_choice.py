from fractions import Fraction as F
from itertools import product
import random

import pytest

from lexchoice.choice import (
    choice_relation,
    choose_convex,
    choose_lexicographic,
    choose_maximality,
    convex,
    identity_rule,
    infimum,
    lexicographic,
    maximality,
    rejection,
)
from lexchoice.cones import GambleCone
from lexchoice.descent import construct_extension
from lexchoice.errors import EmptyFamily, Incoherent, NotSeparable, SavageNullPresent
from lexchoice.gambles import OptionSet, PossibilitySpace, scale, translate
from lexchoice.lexsys import LexSystem
from helpers import rand_coherent_cone, rand_mass, rand_vec, space

X = PossibilitySpace(["a", "b"])
VACUOUS = GambleCone.vacuous(X)
THIRD = (F(1, 3), F(2, 3))


def g(*values):
    return X.gamble(values)


def opts(*vecs):
    return OptionSet([X.gamble(v) for v in vecs])


A = opts((0, 0), (-1, 2), (2, -1))
A1 = A | opts(("1/2", "1/2"))


def test_maximality_examples():
    assert choose_maximality(VACUOUS, A).chosen_set == A.as_frozenset()
    res = choose_maximality(VACUOUS, A1)
    assert X.zero() in res.rejected_set
    assert res.witnesses[X.zero()] == g("1/2", "1/2")
    assert choose_maximality(VACUOUS, opts((1, 1))).chosen == (g(1, 1),)


def test_maximality_needs_coherence():
    with pytest.raises(Incoherent):
        choose_maximality(GambleCone(X, [(1, 1), (-1, -1)]), A)


def test_lexicographic_examples():
    M = LexSystem(X, [THIRD, (1, 0)])
    assert choose_lexicographic(M, A).chosen == (g(-1, 2),)
    flat = LexSystem(X, [(F(1, 2), F(1, 2))])
    same = opts((1, -1), (-1, 1), (0, 0))
    assert choose_lexicographic(flat, same).chosen_set == same.as_frozenset()
    assert choose_lexicographic(M, opts((5, 5))).chosen == (g(5, 5),)
    with pytest.raises(SavageNullPresent):
        choose_lexicographic(LexSystem(X, [(1, 0)]), A)


def test_convex_examples():
    res = choose_convex(VACUOUS, A)
    assert X.zero() in res.rejected_set
    w = res.witnesses[X.zero()]
    total = X.zero()
    for v, c in w.items():
        total = total + v * c
    assert VACUOUS.contains(total)
    small = opts((0, 0), (-1, 2))
    assert choose_convex(VACUOUS, small).chosen_set == small.as_frozenset()
    assert choose_convex(VACUOUS, opts((3, -1))).chosen == (g(3, -1),)


def test_rejection_and_relation():
    rule = maximality(VACUOUS)
    assert rejection(rule, A1) == (X.zero(),)
    assert choice_relation(rule, opts((0, 0)), opts(("1/2", "1/2")))
    assert not choice_relation(rule, opts((1, 2)), opts((1, 2)))
    assert not choice_relation(rule, opts((-1, 2)), A)


def test_infimum_examples():
    rule = maximality(VACUOUS)
    assert infimum([rule]) is rule
    B = opts((1, 0), (0, 1))
    inf = infimum([lexicographic(LexSystem(X, [(1, 0), (0, 1)])),
                   lexicographic(LexSystem(X, [(0, 1), (1, 0)]))])
    assert inf(B).chosen_set == B.as_frozenset()
    with pytest.raises(EmptyFamily):
        infimum([])


def random_option_set(rng, X, size, zero=False):
    gs = [X.gamble(rand_vec(rng, X.n, 2, 3)) for _ in range(size)]
    if zero:
        gs.append(X.zero())
    return OptionSet(gs)


def test_maximality_characterised_by_intersection():
    rng = random.Random(8)
    for _ in range(40):
        D = rand_coherent_cone(rng, 3)
        B = random_option_set(rng, D.space, rng.randint(1, 4))
        kept = D.space.zero() in choose_maximality(D, B | OptionSet([D.space.zero()])).chosen_set
        assert kept == (not any(D.contains(f) for f in B))


def test_rules_are_equivariant():
    rng = random.Random(9)
    for _ in range(25):
        D = rand_coherent_cone(rng, 2)
        M = LexSystem(X, [rand_mass(rng, 2), (1, 0), (0, 1)])
        B = random_option_set(rng, X, rng.randint(1, 4))
        lam = F(rng.randint(1, 4), rng.randint(1, 4))
        v = X.gamble(rand_vec(rng, 2))
        for rule in (maximality(D), convex(D), lexicographic(M)):
            moved = translate(scale(B, lam), v)
            expect = {u * lam + v for u in rule(B).chosen}
            assert rule(moved).chosen_set == expect


def test_lexicographic_is_maximality_under_its_order():
    rng = random.Random(10)
    Y = space(3)
    for _ in range(40):
        M = LexSystem(Y, [rand_mass(rng, 3) for _ in range(3)])
        if M.savage_null_events():
            continue
        B = random_option_set(rng, Y, rng.randint(1, 5))
        assert choose_lexicographic(M, B).chosen_set == choose_maximality(M, B).chosen_set


def test_convex_refines_maximality_and_agrees_on_pairs():
    rng = random.Random(12)
    for _ in range(40):
        D = rand_coherent_cone(rng, 3)
        B = random_option_set(rng, D.space, rng.randint(1, 5))
        assert choose_convex(D, B).chosen_set <= choose_maximality(D, B).chosen_set
        pair = random_option_set(rng, D.space, 2)
        assert choose_convex(D, pair).chosen_set == choose_maximality(D, pair).chosen_set


def test_binary_choice_agrees_across_rules():
    M = LexSystem(X, [THIRD, (1, 0)])
    grid = [g(a, b) for a, b in product((-1, 0, 2), repeat=2)]
    for f, h in product(grid, repeat=2):
        if f == h:
            continue
        pair = OptionSet([f, h])
        assert choose_lexicographic(M, pair).chosen_set == choose_maximality(M, pair).chosen_set


def test_dominance_consequences_on_small_instances():
    from lexchoice.axioms import check_axioms

    grid = [g(a, b) for a, b in product((-1, 0, 1), repeat=2)]
    for rule in (maximality(VACUOUS), convex(VACUOUS), lexicographic(LexSystem(X, [THIRD, (1, 0)]))):
        report = check_axioms(rule, grid, 3, axioms=(), dominance=True)
        assert report.all_passed, report.lines()


def test_infimum_of_extensions_equals_convex_rule():
    rng = random.Random(13)
    done = 0
    while done < 50:
        D = rand_coherent_cone(rng, 2, max_gens=2)
        B = random_option_set(rng, X, rng.randint(2, 4))
        # one lexicographic extension per option that the convex rule keeps
        rules = []
        for u in B:
            others = OptionSet([v - u for v in B if v != u] or [X.zero()])
            try:
                M, _ = construct_extension(D, others)
            except NotSeparable:
                continue
            rules.append(lexicographic(M))
        if not rules:
            continue
        inf = infimum(rules)
        assert inf(B).chosen_set == choose_convex(D, B).chosen_set
        done += 1


def test_identity_rule_never_rejects():
    assert identity_rule()(A1).rejected == ()
