"""Possibility spaces, gambles and option sets, ordered pointwise."""

from __future__ import annotations

import enum
from fractions import Fraction
from typing import Iterable, Iterator, Sequence

from .errors import DimensionMismatch, NonpositiveScale, SpaceMismatch
from .exactlp import format_rational, rational, vector


class PossibilitySpace:
    """A finite, ordered set of named atoms.

    Two spaces are equal when they list the same atoms in the same order.
    """

    __slots__ = ("atoms", "_index")

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(str(a) for a in atoms)
        if not atoms:
            raise ValueError("a possibility space needs at least one atom")
        if len(set(atoms)) != len(atoms):
            raise ValueError("atom names must be unique")
        self.atoms = atoms
        self._index = {a: i for i, a in enumerate(atoms)}

    @property
    def n(self) -> int:
        return len(self.atoms)

    def index(self, atom: str) -> int:
        return self._index[atom]

    def __len__(self) -> int:
        return len(self.atoms)

    def __eq__(self, other) -> bool:
        return isinstance(other, PossibilitySpace) and self.atoms == other.atoms

    def __hash__(self) -> int:
        return hash(self.atoms)

    def __repr__(self) -> str:
        return f"PossibilitySpace({list(self.atoms)!r})"

    def gamble(self, values: Sequence) -> "Gamble":
        return Gamble(self, values)

    def zero(self) -> "Gamble":
        return Gamble(self, [0] * self.n)

    def constant(self, c) -> "Gamble":
        return Gamble(self, [c] * self.n)

    def indicator(self, atom: str | int) -> "Gamble":
        i = atom if isinstance(atom, int) else self.index(atom)
        return Gamble(self, [1 if j == i else 0 for j in range(self.n)])

    def indicators(self) -> list:
        return [self.indicator(i) for i in range(self.n)]


class Gamble:
    """An exact rational reward for every atom of a possibility space."""

    __slots__ = ("space", "values", "_hash")

    def __init__(self, space: PossibilitySpace, values: Sequence):
        values = vector(values)
        if len(values) != space.n:
            raise DimensionMismatch(f"gamble has {len(values)} values for {space.n} atoms")
        self.space = space
        self.values = values
        self._hash = hash(values)

    def _check(self, other: "Gamble"):
        if self.space != other.space:
            raise SpaceMismatch("gambles live on different possibility spaces")

    def __eq__(self, other) -> bool:
        return isinstance(other, Gamble) and self.space == other.space and self.values == other.values

    def __hash__(self) -> int:
        return self._hash

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, i):
        return self.values[i]

    def __add__(self, other: "Gamble") -> "Gamble":
        self._check(other)
        return Gamble(self.space, [a + b for a, b in zip(self.values, other.values)])

    def __sub__(self, other: "Gamble") -> "Gamble":
        self._check(other)
        return Gamble(self.space, [a - b for a, b in zip(self.values, other.values)])

    def __neg__(self) -> "Gamble":
        return Gamble(self.space, [-a for a in self.values])

    def __mul__(self, c) -> "Gamble":
        c = rational(c)
        return Gamble(self.space, [c * a for a in self.values])

    __rmul__ = __mul__

    def is_zero(self) -> bool:
        return not any(self.values)

    def __repr__(self) -> str:
        return "(" + ",".join(format_rational(v) for v in self.values) + ")"


class Comparison(enum.Enum):
    """Outcome of comparing two gambles pointwise.

    ``LESS`` means below or equal everywhere and different somewhere.
    """

    EQUAL = "EQ"
    LESS = "StrictLT"
    GREATER = "StrictGT"
    INCOMPARABLE = "Incomparable"

    @property
    def is_le(self) -> bool:
        return self in (Comparison.EQUAL, Comparison.LESS)

    @property
    def is_ge(self) -> bool:
        return self in (Comparison.EQUAL, Comparison.GREATER)


def pointwise_compare(f: Gamble, g: Gamble) -> Comparison:
    f._check(g)
    le = all(a <= b for a, b in zip(f.values, g.values))
    ge = all(a >= b for a, b in zip(f.values, g.values))
    if le and ge:
        return Comparison.EQUAL
    if le:
        return Comparison.LESS
    if ge:
        return Comparison.GREATER
    return Comparison.INCOMPARABLE


def is_positive(f: Gamble) -> bool:
    """Non-negative everywhere and not zero."""
    return pointwise_compare(f.space.zero(), f) is Comparison.LESS


class OptionSet:
    """A non-empty finite set of gambles on one space.

    Duplicates are dropped; iteration follows first insertion, which keeps
    outputs deterministic.  Equality ignores order.
    """

    __slots__ = ("space", "options", "_frozen")

    def __init__(self, options: Iterable[Gamble], space: PossibilitySpace | None = None):
        seen = {}
        for g in options:
            seen.setdefault(g, None)
        opts = tuple(seen)
        if not opts:
            raise ValueError("an option set must not be empty")
        space = space or opts[0].space
        if any(g.space != space for g in opts):
            raise SpaceMismatch("options live on different possibility spaces")
        self.space = space
        self.options = opts
        self._frozen = frozenset(opts)

    def __iter__(self) -> Iterator[Gamble]:
        return iter(self.options)

    def __len__(self) -> int:
        return len(self.options)

    def __contains__(self, g) -> bool:
        return g in self._frozen

    def __eq__(self, other) -> bool:
        return isinstance(other, OptionSet) and self._frozen == other._frozen

    def __hash__(self) -> int:
        return hash(self._frozen)

    def __le__(self, other: "OptionSet") -> bool:
        return self._frozen <= other._frozen

    def __or__(self, other: "OptionSet") -> "OptionSet":
        return OptionSet(self.options + other.options)

    def without(self, removed: Iterable[Gamble]) -> "OptionSet":
        removed = set(removed)
        return OptionSet([g for g in self.options if g not in removed], self.space)

    def as_frozenset(self) -> frozenset:
        return self._frozen

    def __repr__(self) -> str:
        return "{" + ", ".join(map(repr, self.options)) + "}"


def translate(A: OptionSet, v: Gamble) -> OptionSet:
    if A.space != v.space:
        raise SpaceMismatch("translation vector lives on another space")
    return OptionSet([g + v for g in A], A.space)


def scale(A: OptionSet, lam) -> OptionSet:
    lam = rational(lam)
    if lam <= 0:
        raise NonpositiveScale(f"scale factor must be positive, got {lam}")
    return OptionSet([g * lam for g in A], A.space)
