from fractions import Fraction as F
import random

import pytest
from hypothesis import given

from lexchoice.choice import choose_maximality
from lexchoice.cones import (
    GambleCone,
    ch_member,
    convexity_counterexample,
    lower_prevision,
    posi_member,
)
from lexchoice.errors import CounterexampleNotFound, Incoherent
from lexchoice.gambles import OptionSet, PossibilitySpace, is_positive
from lexchoice.lexsys import LexSystem
from helpers import rand_coherent_cone, rand_vec, rationals, space, vectors

X = PossibilitySpace(["a", "b"])
VACUOUS = GambleCone.vacuous(X)


def g(*values):
    return X.gamble(values)


def test_vacuous_membership():
    assert VACUOUS.contains(X.indicator("a"))
    assert not VACUOUS.contains(g(-1, 2))
    assert not VACUOUS.contains(X.zero())


def test_generator_rays_are_members():
    assert GambleCone(X, [(-1, 2)]).contains(g(-2, 4))


def test_coherence_examples():
    v = GambleCone(X, [(1, 1), (-1, -1)]).check_coherence()
    assert v.axiom == "D1" and v.coefficients == (F(1, 2), F(1, 2))
    assert VACUOUS.check_coherence() is None
    assert GambleCone(X, [(-1, 2)]).check_coherence() is None


def test_missing_positives_is_a_d2_violation():
    v = GambleCone(X, [(1, 0)], include_positives=False).check_coherence()
    assert v.axiom == "D2" and v.generators == (X.indicator("b"),)


def test_zero_generator_rejected():
    with pytest.raises(ValueError):
        GambleCone(X, [(0, 0)])


def test_hull_membership_examples():
    assert posi_member([g(-1, 2), g(2, -1)], g(1, 1))
    assert ch_member([X.zero(), g(-1, 2), g(2, -1)], g("1/2", "1/2"))
    assert not posi_member([g(1, 0)], g(0, 1))


@given(vectors(2), vectors(2), vectors(2))
def test_convex_hull_inside_positive_hull(p, q, f):
    pts = [X.gamble(p), X.gamble(q)]
    if ch_member(pts, X.gamble(f)) and any(f):
        assert posi_member(pts, X.gamble(f))


@given(vectors(3), vectors(3), rationals)
def test_cone_closed_under_scaling_and_sums(u, v, lam):
    Y = space(3)
    D = GambleCone(Y, [(-1, 2, 0), (0, -1, 3)])
    f, h = Y.gamble(u), Y.gamble(v)
    if lam > 0:
        assert D.contains(f) == D.contains(f * lam)
    if D.contains(f) and D.contains(h):
        assert D.contains(f + h)
    if is_positive(f):
        assert D.contains(f)
    assert not D.contains(Y.zero())


def test_lower_prevision_examples():
    assert lower_prevision(VACUOUS, g(1, 3)) == 1
    D = GambleCone(X, [(-1, 2)])
    assert lower_prevision(D, X.constant(F(7, 3))) == F(7, 3)
    M = LexSystem(X, [(F(1, 3), F(2, 3))])
    assert lower_prevision(M, g(3, 0)) == 1


def test_lower_prevision_needs_coherence():
    with pytest.raises(Incoherent):
        lower_prevision(GambleCone(X, [(1, 1), (-1, -1)]), g(0, 0))


def test_lower_prevision_superadditive():
    rng = random.Random(3)
    D = rand_coherent_cone(rng, 3)
    M = LexSystem(D.space, [(F(1, 6), F(1, 2), F(1, 3)), (1, 0, 0)])
    for _ in range(100):
        f = D.space.gamble(rand_vec(rng, 3))
        h = D.space.gamble(rand_vec(rng, 3))
        assert lower_prevision(D, f + h) >= lower_prevision(D, f) + lower_prevision(D, h)
        assert lower_prevision(M, f + h) == lower_prevision(M, f) + lower_prevision(M, h)


def test_counterexample_on_two_atoms():
    A, A1 = convexity_counterexample(VACUOUS)
    assert A == OptionSet([X.zero(), g(-1, 2), g(2, -1)])
    assert A1 == A | OptionSet([g("1/2", "1/2")])


def test_no_counterexample_on_one_atom():
    with pytest.raises(CounterexampleNotFound):
        convexity_counterexample(GambleCone.vacuous(PossibilitySpace(["only"])), budget=200)


def test_counterexamples_on_random_three_atom_cones():
    rng = random.Random(5)
    for _ in range(15):
        D = rand_coherent_cone(rng, 3)
        A, A1 = convexity_counterexample(D)
        zero = D.space.zero()
        assert A <= A1
        assert all(ch_member(list(A), f) for f in A1)
        assert zero in choose_maximality(D, A).chosen_set
        assert zero not in choose_maximality(D, A1).chosen_set


def test_counterexample_needs_coherence():
    with pytest.raises(Incoherent):
        convexity_counterexample(GambleCone(X, [(1, 1), (-1, -1)]))
