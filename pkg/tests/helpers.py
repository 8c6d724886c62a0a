"""Shared generators of random exact data for the tests."""

from fractions import Fraction
from itertools import combinations
import random

from hypothesis import strategies as st

from lexchoice.cones import GambleCone
from lexchoice.exactlp import combine, dot, rank, rref, solve_lp
from lexchoice.gambles import PossibilitySpace

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 6))
small_ints = st.integers(-3, 3).map(Fraction)


def vectors(n, elements=rationals):
    return st.lists(elements, min_size=n, max_size=n).map(tuple)


def space(n):
    return PossibilitySpace([chr(ord("a") + i) for i in range(n)])


def rand_q(rng: random.Random, bound=3, maxden=6) -> Fraction:
    return Fraction(rng.randint(-bound * maxden, bound * maxden), rng.randint(1, maxden))


def rand_vec(rng, n, bound=3, maxden=6):
    return tuple(rand_q(rng, bound, maxden) for _ in range(n))


def rand_mass(rng, n, zero_prob=0.3):
    while True:
        w = [0 if rng.random() < zero_prob else rng.randint(1, 6) for _ in range(n)]
        if sum(w):
            return tuple(Fraction(x, sum(w)) for x in w)


def rand_coherent_cone(rng, n, max_gens=4, bound=3, maxden=6):
    """A random coherent cone, resampling until coherence holds."""
    X = space(n)
    while True:
        gens = []
        for _ in range(rng.randint(0, max_gens)):
            v = rand_vec(rng, n, bound, maxden)
            if any(v):
                gens.append(v)
        D = GambleCone(X, gens)
        if D.is_coherent():
            return D


def brute_force_feasible(A, b):
    """Is A x = b, x >= 0 solvable?  Checks every basic solution."""
    m, n = len(A), len(A[0])
    for k in range(0, min(m, n) + 1):
        for cols in combinations(range(n), k):
            sub = [[A[i][j] for j in cols] for i in range(m)]
            if rank(sub, k) < k:
                continue
            aug = [row + [b[i]] for i, row in enumerate(sub)]
            red, piv = rref(aug, k + 1)
            if k in piv:
                continue
            x = [Fraction(0)] * k
            for row, p in zip(red, piv):
                x[p] = row[k]
            if all(v >= 0 for v in x):
                return True
    return False


def points_in_meet(rng, gens, K, count):
    """Vertices of the meet, normalised by total weight, for random objectives."""
    n = K.ambient_dimension
    comp = K.complement_rows()
    k = len(gens)
    rows = [tuple(dot(a, g) for g in gens) for a in comp]
    rows.append(tuple(Fraction(1) for _ in gens))
    rhs = [Fraction(0)] * len(comp) + [Fraction(1)]
    pts = []
    for _ in range(count):
        c = [Fraction(rng.randint(-5, 5)) for _ in range(k)]
        res = solve_lp(rows, rhs, c)
        if res.status != "optimal":
            return []
        pts.append(combine(res.x, gens, n))
    # mix vertices to leave the boundary
    mixed = []
    for i in range(len(pts)):
        j = rng.randrange(len(pts))
        mixed.append(tuple((a + b) / 2 for a, b in zip(pts[i], pts[j])))
    return pts + mixed
