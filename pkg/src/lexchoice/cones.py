"""Finitely generated sets of desirable gambles."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import count
from typing import Iterable, Sequence

from .errors import CounterexampleNotFound, Incoherent, SpaceMismatch
from .exactlp import cone_member, format_rational, solve_lp
from .gambles import Gamble, OptionSet, PossibilitySpace


@dataclass(frozen=True)
class Violation:
    """A coherence failure.

    For ``D1`` the coefficients combine ``generators`` into the zero gamble;
    for ``D2`` the single generator listed is a positive gamble the cone
    misses and ``coefficients`` is empty.
    """

    axiom: str
    coefficients: tuple
    generators: tuple

    def __str__(self) -> str:
        if self.axiom == "D2":
            return f"D2: positive gamble {self.generators[0]!r} is not desirable"
        terms = " + ".join(f"{format_rational(c)}*{g!r}" for c, g in zip(self.coefficients, self.generators) if c)
        return f"D1: {terms} = 0"


class GambleCone:
    """The gambles that are non-negative, not all zero, combinations of
    ``generators`` and (by default) the indicators of every atom."""

    def __init__(self, space: PossibilitySpace, generators: Iterable = (), include_positives: bool = True):
        gens = []
        for g in generators:
            if not isinstance(g, Gamble):
                g = Gamble(space, g)
            if g.space != space:
                raise SpaceMismatch("generator lives on another possibility space")
            if g.is_zero():
                raise ValueError("generators must be non-zero")
            gens.append(g)
        self.space = space
        self.generators = tuple(gens)
        self.include_positives = include_positives
        extra = space.indicators() if include_positives else []
        self.all_generators = self.generators + tuple(extra)
        self._vectors = [g.values for g in self.all_generators]
        self._cache: dict = {}
        self._coherence = None

    @classmethod
    def vacuous(cls, space: PossibilitySpace) -> "GambleCone":
        return cls(space, ())

    def __repr__(self) -> str:
        return f"GambleCone({self.space!r}, {list(self.generators)!r}, include_positives={self.include_positives})"

    def contains(self, f: Gamble) -> bool:
        if f.space != self.space:
            raise SpaceMismatch("gamble lives on another possibility space")
        hit = self._cache.get(f)
        if hit is None:
            hit = cone_member(self._vectors, f.values, nonzero=f.is_zero()) is not None
            self._cache[f] = hit
        return hit

    __contains__ = contains

    def __call__(self, f: Gamble) -> bool:
        return self.contains(f)

    def check_coherence(self) -> Violation | None:
        """``None`` when coherent, else the first violation found."""
        if self._coherence is None:
            self._coherence = (_find_violation(self),)
        return self._coherence[0]

    def is_coherent(self) -> bool:
        return self.check_coherence() is None

    def require_coherent(self):
        v = self.check_coherence()
        if v is not None:
            raise Incoherent(v)


def _find_violation(D: GambleCone):
    # a cancellation among the explicit generators reads best, so try it first
    for gens in (D.generators, D.all_generators):
        if gens:
            coeffs = cone_member([g.values for g in gens], D.space.zero().values, nonzero=True)
            if coeffs is not None:
                return Violation("D1", tuple(coeffs), tuple(gens))
    if not D.include_positives:
        for ind in D.space.indicators():
            if not D.contains(ind):
                return Violation("D2", (), (ind,))
    return None


def check_coherence(D: GambleCone) -> Violation | None:
    return D.check_coherence()


def contains(D: GambleCone, f: Gamble) -> bool:
    return D.contains(f)


def _check_points(points: Sequence[Gamble], f: Gamble):
    if not points:
        raise ValueError("at least one point is required")
    if any(p.space != f.space for p in points):
        raise SpaceMismatch("points live on different possibility spaces")


def posi_member(points: Sequence[Gamble], f: Gamble) -> bool:
    """Is ``f`` a non-negative, not all zero, combination of ``points``?"""
    _check_points(points, f)
    return cone_member([p.values for p in points], f.values, nonzero=f.is_zero()) is not None


def ch_member(points: Sequence[Gamble], f: Gamble) -> bool:
    """Is ``f`` a convex combination of ``points``?"""
    _check_points(points, f)
    k = len(points)
    rows = [tuple(p.values[j] for p in points) for j in range(f.space.n)]
    rows.append(tuple(Fraction(1) for _ in range(k)))
    return solve_lp(rows, tuple(f.values) + (Fraction(1),)).status != "infeasible"


def lower_prevision(model, f: Gamble) -> Fraction:
    """Largest ``mu`` with ``f - mu`` in the closure of the desirable set.

    ``model`` is a :class:`GambleCone` (checked for coherence) or any object
    with a ``closure_generators()`` method, such as a lexicographic system.
    """
    if isinstance(model, GambleCone):
        model.require_coherent()
        gens = [g.values for g in model.all_generators]
    else:
        gens = [tuple(g) for g in model.closure_generators()]
    if f.space != model.space:
        raise SpaceMismatch("gamble lives on another possibility space")
    n = f.space.n
    # variables: mu (free), lambda >= 0;  mu * 1 + sum lambda g = f
    rows = [(Fraction(1),) + tuple(g[j] for g in gens) for j in range(n)]
    c = (Fraction(1),) + (Fraction(0),) * len(gens)
    res = solve_lp(rows, f.values, c, free=[0])
    if res.status != "optimal":
        raise Incoherent(f"lower prevision of {f!r} is unbounded")
    return res.value


# ---------------------------------------------------------------------------
# Convexity counterexamples


def _ray_menu(D: GambleCone):
    """Candidate pairs ``k g_i - g_j, k g_j - g_i`` over generator pairs,
    indicators first; their sum is a positive multiple of ``g_i + g_j``."""
    gens = list(D.all_generators[len(D.generators):]) + list(D.generators)
    for k in count(2):
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                gi, gj = gens[i], gens[j]
                yield gi * k - gj, gj * k - gi


def _direction_menu(D: GambleCone):
    space = D.space
    inds = space.indicators()
    dirs = list(inds)
    for i in range(len(inds)):
        for j in range(len(inds)):
            if i != j:
                dirs.append(inds[i] - inds[j])
    dirs += [-d for d in dirs]
    seeds = list(D.all_generators) or [space.constant(1)]
    for t in count(1):
        for d in seeds:
            for v in dirs:
                yield d + v * t, d - v * t


def convexity_counterexample(D: GambleCone, budget: int = 2000):
    """Option sets ``A <= A1 <= ch(A)`` where maximality keeps 0 in ``A`` but
    rejects it from ``A1``.

    Looks for two undesirable gambles whose midpoint is desirable: then
    ``A = {0, f, g}`` and ``A1`` adds the midpoint.  The first stage walks a
    menu built from pairs of generator rays, the second perturbs generators
    along coordinate directions.  Raises :class:`CounterexampleNotFound` after
    ``budget`` candidate pairs.
    """
    D.require_coherent()
    half = Fraction(1, 2)
    tried = 0
    k = len(D.all_generators)
    ray_pairs = k * (k - 1) // 2
    stages = []
    if ray_pairs:
        # multipliers 2..5 of every generator pair
        stages.append((_ray_menu(D), ray_pairs * 4))
    stages.append((_direction_menu(D), budget))
    for menu, limit in stages:
        for _, (f, g) in zip(range(limit), menu):
            if tried >= budget:
                raise CounterexampleNotFound(budget)
            tried += 1
            if f.is_zero() or g.is_zero() or f == g:
                continue
            mid = (f + g) * half
            if D.contains(mid) and not D.contains(f) and not D.contains(g):
                zero = D.space.zero()
                A = OptionSet([zero, f, g])
                return A, OptionSet([zero, f, g, mid])
    raise CounterexampleNotFound(budget)
