"""Exhaustive audit of the choice-function axioms over a finite universe.

All option sets up to a given size are drawn from the universe and every
axiom is checked on them.  A pass only says no violation was found among
the enumerated instances; a failure carries a witness that re-verifies by
evaluating the rule again.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import chain, combinations
from typing import Sequence

from .cones import ch_member
from .errors import UniverseTooSmall
from .gambles import Comparison, Gamble, OptionSet, pointwise_compare

ALL_AXIOMS = ("C1", "C2", "C3a", "C3b", "C4a", "C4b", "C5")
DOMINANCE = ("DOMa", "DOMb")
SCALES = (Fraction(1, 2), Fraction(2))


@dataclass(frozen=True)
class Witness:
    """Option sets and the offending option of a violated axiom.

    ``sets`` names the sets involved, e.g. ``{"A": ..., "A1": ...}`` for the
    convexity axiom; ``option`` is the option whose status breaks it and
    ``parameter`` holds a scale factor or translation when relevant.
    """

    axiom: str
    sets: dict
    option: Gamble | None = None
    parameter: object = None

    def verify(self, rule) -> bool:
        """Re-run the rule and confirm the violation."""
        return _CHECKS[self.axiom](rule, self) is not None

    def describe(self) -> str:
        parts = [f"{k}={v!r}" for k, v in self.sets.items()]
        if self.parameter is not None:
            parts.append(f"parameter={self.parameter!r}")
        if self.option is not None:
            parts.append(f"option={self.option!r}")
        return ", ".join(parts)


@dataclass
class AxiomStatus:
    axiom: str
    checked: int = 0
    witness: Witness | None = None

    @property
    def passed(self) -> bool:
        return self.witness is None


@dataclass
class AxiomReport:
    statuses: dict
    universe: tuple
    max_set_size: int
    set_count: int = 0

    @property
    def all_passed(self) -> bool:
        return all(s.passed for s in self.statuses.values())

    def __getitem__(self, axiom: str) -> AxiomStatus:
        return self.statuses[axiom]

    def lines(self) -> list:
        out = []
        for name, s in self.statuses.items():
            if s.passed:
                out.append(f"{name} pass checked={s.checked}")
            else:
                out.append(f"{name} FAIL {s.witness.describe()}")
        return out


# ---------------------------------------------------------------------------
# Per-instance checks; each returns the violating option (or a marker) or None


def _c1(rule, w):
    return True if not rule(w.sets["A"]).chosen else None


def _c2(rule, w):
    A = w.sets["A"]
    u, v = A.options
    if pointwise_compare(u, v) is Comparison.GREATER:
        u, v = v, u
    return u if rule(A).chosen_set != {v} else None


def _c3a(rule, w):
    # Sen's condition: anything rejected from a subset stays rejected
    rejected_small = rule(w.sets["A2"]).rejected_set
    chosen_big = rule(w.sets["A"]).chosen_set
    bad = [u for u in w.sets["A2"] if u in rejected_small and u in chosen_big]
    return bad[0] if bad else None


def _c3b(rule, w):
    # Aizerman: removing rejected options keeps the other rejected ones rejected
    A2, S = w.sets["A2"], w.sets["S"]
    rejected = rule(A2).rejected_set
    rest = A2.without(S)
    chosen = rule(rest).chosen_set
    bad = [u for u in rest if u in rejected and u in chosen]
    return bad[0] if bad else None


def _c4a(rule, w):
    A, lam = w.sets["A"], w.parameter
    scaled = rule(OptionSet([u * lam for u in A])).chosen_set
    bad = [u for u in rule(A).chosen if u * lam not in scaled]
    return bad[0] if bad else None


def _c4b(rule, w):
    A, v = w.sets["A"], w.parameter
    moved = rule(OptionSet([u + v for u in A])).chosen_set
    bad = [u for u in rule(A).chosen if u + v not in moved]
    return bad[0] if bad else None


def _c5(rule, w):
    A, A1 = w.sets["A"], w.sets["A1"]
    big = rule(A1).chosen_set
    bad = [u for u in rule(A).chosen if u not in big]
    return bad[0] if bad else None


def _dom_a(rule, w):
    A, u1, v = w.sets["A"], w.parameter, w.option
    if v in rule(A | OptionSet([u1])).chosen_set:
        return None
    return v if v in rule(A).chosen_set else None


def _dom_b(rule, w):
    A, (u1, u2), v = w.sets["A"], w.parameter, w.option
    if v in rule(A).chosen_set:
        return None
    swapped = OptionSet([u2] + [x for x in A if x != u1])
    return v if v in rule(swapped).chosen_set else None


_CHECKS = {"C1": _c1, "C2": _c2, "C3a": _c3a, "C3b": _c3b, "C4a": _c4a, "C4b": _c4b,
           "C5": _c5, "DOMa": _dom_a, "DOMb": _dom_b}


# ---------------------------------------------------------------------------
# Instance generation


def _nonempty_subsets(options, proper=False):
    top = len(options) - (1 if proper else 0)
    return chain.from_iterable(combinations(options, k) for k in range(1, top + 1))


def convex_witness_points(A: OptionSet, limit: int | None = None) -> list:
    """Midpoints of all pairs, then the barycenter, skipping points already in A."""
    opts = A.options
    half = Fraction(1, 2)
    pts = [(u + v) * half for u, v in combinations(opts, 2)]
    if len(opts) > 2:
        bary = opts[0]
        for u in opts[1:]:
            bary = bary + u
        pts.append(bary * Fraction(1, len(opts)))
    out = []
    for p in pts:
        if p not in A and p not in out:
            out.append(p)
    return out if limit is None else out[:limit]


def _instances(axiom, sets, universe, witness_points):
    for A in sets:
        if axiom == "C1":
            yield Witness("C1", {"A": A})
        elif axiom == "C2":
            if len(A) == 2:
                u, v = A.options
                if pointwise_compare(u, v) in (Comparison.LESS, Comparison.GREATER):
                    yield Witness("C2", {"A": A})
        elif axiom == "C3a":
            for sub in _nonempty_subsets(A.options, proper=True):
                yield Witness("C3a", {"A": A, "A2": OptionSet(sub)})
        elif axiom == "C3b":
            yield from _aizerman(A)
        elif axiom == "C4a":
            for lam in SCALES:
                yield Witness("C4a", {"A": A}, parameter=lam)
        elif axiom == "C4b":
            for v in universe:
                yield Witness("C4b", {"A": A}, parameter=v)
        elif axiom == "C5":
            for w in convex_witness_points(A, witness_points):
                if ch_member(A.options, w):
                    yield Witness("C5", {"A": A, "A1": A | OptionSet([w])})
        elif axiom in DOMINANCE:
            yield from _dominance(axiom, A, universe)


class _Lazy:
    """Placeholder for sets that depend on a rule evaluation."""


def _aizerman(A2):
    # subsets of the rejected part are only known once the rule runs; mark
    # them for the caller to expand
    yield Witness("C3b", {"A2": A2, "S": _Lazy})


def _dominance(axiom, A, universe):
    for u1 in universe:
        for u2 in universe:
            if pointwise_compare(u1, u2) is not Comparison.LESS:
                continue
            if axiom == "DOMa" and u2 in A:
                for v in A:
                    if v not in (u1, u2):
                        yield Witness("DOMa", {"A": A}, option=v, parameter=u1)
            if axiom == "DOMb" and u1 in A:
                for v in A:
                    if v not in (u1, u2):
                        yield Witness("DOMb", {"A": A}, option=v, parameter=(u1, u2))


def _expand(rule, inst):
    if inst.axiom == "C3b" and inst.sets["S"] is _Lazy:
        A2 = inst.sets["A2"]
        rejected = rule(A2).rejected
        for S in _nonempty_subsets(rejected):
            yield Witness("C3b", {"A2": A2, "S": OptionSet(S)})
    else:
        yield inst


def _minimise_c5(rule, w: Witness) -> Witness:
    """Drop options from A while the convexity violation persists."""
    A = w.sets["A"]
    added = [x for x in w.sets["A1"] if x not in A]
    changed = True
    while changed:
        changed = False
        for x in A.options:
            if len(A) <= 1:
                break
            smaller = A.without([x])
            if not all(ch_member(smaller.options, p) for p in added):
                continue
            cand = Witness("C5", {"A": smaller, "A1": smaller | OptionSet(added)})
            opt = _c5(rule, cand)
            if opt is not None:
                A, w = smaller, Witness("C5", cand.sets, option=opt)
                changed = True
                break
    return w


def check_axioms(rule, universe: Sequence[Gamble], max_set_size: int = 3,
                 convex_witness_points: int | None = None,
                 axioms: Sequence[str] = ALL_AXIOMS, dominance: bool = False) -> AxiomReport:
    """Check the selected axioms on every option set of at most
    ``max_set_size`` options drawn from ``universe``.

    Sets are enumerated by size, then by position in the universe; each axiom
    stops at its first violation.  The convexity axiom is tested by adding
    one point at a time: midpoints of pairs and the barycenter, at most
    ``convex_witness_points`` of them per set when given.  ``dominance``
    also checks the two dominance consequences of coherence.
    """
    universe = tuple(universe)
    if len(set(universe)) != len(universe):
        raise ValueError("universe contains duplicate gambles")
    if len(universe) < 2:
        raise UniverseTooSmall("the universe needs at least two gambles")
    if max_set_size < 2:
        raise UniverseTooSmall("max_set_size must be at least 2")
    names = list(axioms) + (list(DOMINANCE) if dominance else [])
    sets = [OptionSet(c) for k in range(1, max_set_size + 1) for c in combinations(universe, k)]
    report = AxiomReport({}, universe, max_set_size, len(sets))
    for name in names:
        status = AxiomStatus(name)
        report.statuses[name] = status
        for inst in _instances(name, sets, universe, convex_witness_points):
            for concrete in _expand(rule, inst):
                status.checked += 1
                opt = _CHECKS[name](rule, concrete)
                if opt is not None:
                    found = Witness(name, concrete.sets, opt if isinstance(opt, Gamble) else None,
                                    concrete.parameter)
                    if name == "C5":
                        found = _minimise_c5(rule, found)
                    status.witness = found
                    break
            if status.witness is not None:
                break
    return report
