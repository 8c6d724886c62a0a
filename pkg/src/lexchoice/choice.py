"""Choice rules on option sets: maximality, lexicographic and convex choice.

Every rule is wrapped in a :class:`ChoiceRule`, a cached callable from
option sets to :class:`ChoiceResult`, so the axiom checker, the infimum
combinator and the lottery lifting treat them alike.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Sequence

from .cones import GambleCone
from .errors import EmptyFamily, SpaceMismatch
from .exactlp import solve_lp
from .gambles import Gamble, OptionSet
from .lexsys import LexSystem, lex_compare


@dataclass(frozen=True)
class ChoiceResult:
    """Chosen and rejected options, both in the order of the option set.

    ``witnesses`` maps each rejected option to the reason it was rejected:
    a dominating option, or for the convex rule a dict of non-negative
    weights on the other options whose weighted differences are desirable.
    """

    chosen: tuple
    rejected: tuple
    witnesses: dict = field(default_factory=dict, compare=False)

    @property
    def chosen_set(self) -> frozenset:
        return frozenset(self.chosen)

    @property
    def rejected_set(self) -> frozenset:
        return frozenset(self.rejected)


class ChoiceRule:
    """A named choice function evaluated through ``decide(options)``.

    ``decide`` receives the options as a tuple and returns ``(chosen,
    witnesses)``; results are cached per option set.
    """

    def __init__(self, name: str, decide: Callable, space=None, model=None):
        self.name = name
        self.space = space
        self.model = model
        self._decide = decide
        self._cache: dict = {}

    def __repr__(self) -> str:
        return f"ChoiceRule({self.name})"

    def __call__(self, A: OptionSet) -> ChoiceResult:
        if self.space is not None and A.space != self.space:
            raise SpaceMismatch("option set lives on another possibility space")
        key = A.as_frozenset()
        hit = self._cache.get(key)
        if hit is None:
            chosen, witnesses = self._decide(A.options)
            hit = (frozenset(chosen), witnesses)
            self._cache[key] = hit
        chosen_set, witnesses = hit
        return ChoiceResult(
            tuple(g for g in A if g in chosen_set),
            tuple(g for g in A if g not in chosen_set),
            witnesses,
        )

    def choose(self, A: OptionSet) -> ChoiceResult:
        return self(A)


# ---------------------------------------------------------------------------
# Maximality


def _coherent_model(model):
    if isinstance(model, GambleCone):
        model.require_coherent()
    elif isinstance(model, LexSystem):
        model.require_no_savage_null()
    return model


def _maximality_decide(D):
    def decide(options):
        chosen, witnesses = [], {}
        for u in options:
            beat = next((v for v in options if v != u and D.contains(v - u)), None)
            if beat is None:
                chosen.append(u)
            else:
                witnesses[u] = beat
        return chosen, witnesses
    return decide


def maximality(D) -> ChoiceRule:
    """Keep the options no other option is strictly preferred to.

    ``D`` is any desirability model with ``contains`` and ``space``:
    a :class:`GambleCone` (checked for coherence) or a :class:`LexSystem`.
    """
    _coherent_model(D)
    return ChoiceRule("maximality", _maximality_decide(D), D.space, D)


def choose_maximality(D, A: OptionSet) -> ChoiceResult:
    return maximality(D)(A)


# ---------------------------------------------------------------------------
# Lexicographic


def lexicographic(M: LexSystem) -> ChoiceRule:
    """Keep the options whose expectation vectors are lexicographically largest."""
    M.require_no_savage_null()

    def decide(options):
        vecs = [M.expectation_vector(u) for u in options]
        best = max(range(len(options)), key=lambda i: _LexKey(vecs[i]))
        top = vecs[best]
        chosen = [u for u, e in zip(options, vecs) if e == top]
        witnesses = {u: options[best] for u, e in zip(options, vecs) if e != top}
        return chosen, witnesses

    return ChoiceRule("lexicographic", decide, M.space, M)


class _LexKey:
    __slots__ = ("v",)

    def __init__(self, v):
        self.v = v

    def __lt__(self, other):
        return lex_compare(self.v, other.v) < 0


def choose_lexicographic(M: LexSystem, A: OptionSet) -> ChoiceResult:
    return lexicographic(M)(A)


# ---------------------------------------------------------------------------
# Convex infimum rule


def convex_rejection_weights(D: GambleCone, u: Gamble, others: Sequence[Gamble]):
    """Weights ``lam >= 0`` on ``others`` with ``sum lam (v - u)`` desirable, or None.

    Solves ``sum lam_v (v - u) = sum mu_g g`` over the cone's generators with
    ``sum mu = 1``; the normalisation rules out the trivial solution.
    """
    if not others:
        return None
    diffs = [(v - u).values for v in others]
    gens = [g.values for g in D.all_generators]
    n = D.space.n
    rows = [tuple(d[j] for d in diffs) + tuple(-g[j] for g in gens) for j in range(n)]
    rows.append((Fraction(0),) * len(diffs) + (Fraction(1),) * len(gens))
    res = solve_lp(rows, (Fraction(0),) * n + (Fraction(1),))
    if res.status == "infeasible":
        return None
    return dict(zip(others, res.x[:len(diffs)]))


def convex(D: GambleCone) -> ChoiceRule:
    """Reject ``u`` when some positive combination of the differences
    ``v - u`` is desirable: the most conservative rule that satisfies the
    convexity axiom and agrees with ``D`` on pairs."""
    D.require_coherent()

    def decide(options):
        chosen, witnesses = [], {}
        for u in options:
            others = [v for v in options if v != u]
            # a single dominating option settles it without the full LP
            beat = next((v for v in others if D.contains(v - u)), None)
            if beat is not None:
                witnesses[u] = {beat: Fraction(1)}
                continue
            w = convex_rejection_weights(D, u, others)
            if w is None:
                chosen.append(u)
            else:
                witnesses[u] = {v: c for v, c in w.items() if c}
        return chosen, witnesses

    return ChoiceRule("convex", decide, D.space, D)


def choose_convex(D: GambleCone, A: OptionSet) -> ChoiceResult:
    return convex(D)(A)


# ---------------------------------------------------------------------------
# Combinators and derived notions


def infimum(rules: Sequence[ChoiceRule]) -> ChoiceRule:
    """The rule choosing, per option set, everything some member chooses."""
    rules = list(rules)
    if not rules:
        raise EmptyFamily("the infimum of an empty family of rules is undefined")
    if len(rules) == 1:
        return rules[0]
    spaces = {r.space for r in rules if r.space is not None}
    if len(spaces) > 1:
        raise SpaceMismatch("rules live on different possibility spaces")

    def decide(options):
        A = OptionSet(options)
        results = [r(A) for r in rules]
        chosen = set().union(*(res.chosen_set for res in results))
        witnesses = {u: results[0].witnesses.get(u) for u in options if u not in chosen}
        return chosen, witnesses

    return ChoiceRule("infimum", decide, spaces.pop() if spaces else None, tuple(rules))


def identity_rule(space=None) -> ChoiceRule:
    """The rule that never rejects anything."""
    return ChoiceRule("identity", lambda options: (list(options), {}), space)


def rejection(C: ChoiceRule, A: OptionSet) -> tuple:
    return C(A).rejected


def choice_relation(C: ChoiceRule, A1: OptionSet, A2: OptionSet) -> bool:
    """Is every option of ``A1`` rejected from ``A1 | A2``?"""
    rejected = C(A1 | A2).rejected_set
    return all(u in rejected for u in A1)
