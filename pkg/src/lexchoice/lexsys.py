"""Lexicographic probability systems and the order they induce on gambles."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import LengthMismatch, NotBinary, SavageNullPresent, SpaceMismatch
from .exactlp import Subspace, dot, format_rational, nullspace, rank, vector
from .gambles import Gamble, PossibilitySpace


class LexOrder(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def lex_compare(u: Sequence, v: Sequence) -> LexOrder:
    """Compare two expectation vectors lexicographically."""
    if len(u) != len(v):
        raise LengthMismatch(f"cannot compare vectors of lengths {len(u)} and {len(v)}")
    for a, b in zip(u, v):
        if a < b:
            return LexOrder.LESS
        if a > b:
            return LexOrder.GREATER
    return LexOrder.EQUAL


class LexSystem:
    """A tuple of probability mass functions compared layer by layer.

    A gamble is desirable when its vector of layer expectations is
    lexicographically above zero.
    """

    def __init__(self, space: PossibilitySpace, layers: Iterable[Sequence]):
        rows = []
        for k, layer in enumerate(layers, 1):
            row = vector(layer)
            if len(row) != space.n:
                raise ValueError(f"layer {k}: has {len(row)} masses for {space.n} atoms")
            if any(x < 0 for x in row):
                raise ValueError(f"layer {k}: negative mass")
            if sum(row) != 1:
                raise ValueError(f"layer {k}: masses sum to {format_rational(sum(row))}, not 1")
            rows.append(row)
        if not rows:
            raise ValueError("a lexicographic system needs at least one layer")
        self.space = space
        self.layers = tuple(rows)

    def __repr__(self) -> str:
        body = ", ".join("(" + ",".join(map(format_rational, m)) + ")" for m in self.layers)
        return f"LexSystem({body})"

    def expectation_vector(self, f: Gamble) -> tuple:
        if f.space != self.space:
            raise SpaceMismatch("gamble lives on another possibility space")
        return tuple(dot(m, f.values) for m in self.layers)

    def is_desirable(self, f: Gamble) -> bool:
        return lex_compare((0,) * len(self.layers), self.expectation_vector(f)) is LexOrder.LESS

    contains = is_desirable
    __call__ = is_desirable

    def __contains__(self, f: Gamble) -> bool:
        return self.is_desirable(f)

    def compare(self, f: Gamble, g: Gamble) -> LexOrder:
        return lex_compare(self.expectation_vector(f), self.expectation_vector(g))

    def is_incomparable(self, f: Gamble, g: Gamble) -> bool:
        return self.expectation_vector(f) == self.expectation_vector(g)

    def savage_null_events(self) -> frozenset:
        return frozenset(a for i, a in enumerate(self.space.atoms) if all(m[i] == 0 for m in self.layers))

    def require_no_savage_null(self):
        null = self.savage_null_events()
        if null:
            raise SavageNullPresent(sorted(null, key=self.space.index))

    def is_maximal(self) -> bool:
        self.require_no_savage_null()
        return rank(self.layers, self.space.n) == self.space.n

    def reduced_layers(self) -> tuple:
        """Layers that are not linear combinations of earlier layers; the
        others never decide a comparison."""
        kept = []
        for m in self.layers:
            if rank(kept + [m], self.space.n) > len(kept):
                kept.append(m)
        return tuple(kept)

    def reduced(self) -> "LexSystem":
        return LexSystem(self.space, self.reduced_layers())

    def kernel_flag(self) -> list:
        """Kernels of the first k reduced layers, for k = 0, 1, ..."""
        K = Subspace.full(self.space.n)
        flag = [K]
        for m in self.reduced_layers():
            K = K.meet_kernel(m)
            flag.append(K)
        return flag

    def __eq__(self, other) -> bool:
        """Same induced order: equal flags of kernels, and at every step the
        next layers restricted to the current kernel are positive multiples."""
        if not isinstance(other, LexSystem):
            return NotImplemented
        if other.space != self.space:
            return False
        mine, theirs = self.reduced_layers(), other.reduced_layers()
        if len(mine) != len(theirs):
            return False
        K = Subspace.full(self.space.n)
        for m, p in zip(mine, theirs):
            u = [dot(m, b) for b in K.basis]
            w = [dot(p, b) for b in K.basis]
            i = next(i for i, x in enumerate(u) if x)
            ratio = w[i] / u[i]
            if ratio <= 0 or any(ratio * x != y for x, y in zip(u, w)):
                return False
            K = K.meet_kernel(m)
        return True

    def __hash__(self) -> int:
        return hash((self.space, len(self.reduced_layers())))

    def closure_generators(self) -> list:
        """Generators of the closed half-space where the first layer's
        expectation is non-negative: indicators and both signs of a kernel basis."""
        ker = nullspace([self.layers[0]], self.space.n)
        gens = [g.values for g in self.space.indicators()]
        for b in ker.basis:
            gens.append(b)
            gens.append(tuple(-x for x in b))
        return gens

    def as_cone_oracle(self) -> "LexSystem":
        self.require_no_savage_null()
        return self

    def classify_binary(self) -> "BinaryFamily":
        return classify_binary(self)


def expectation_vector(M: LexSystem, f: Gamble) -> tuple:
    return M.expectation_vector(f)


def is_desirable(M: LexSystem, f: Gamble) -> bool:
    return M.is_desirable(f)


def is_incomparable(M: LexSystem, f: Gamble, g: Gamble) -> bool:
    return M.is_incomparable(f, g)


def savage_null_events(M: LexSystem) -> frozenset:
    return M.savage_null_events()


def is_maximal(M: LexSystem) -> bool:
    return M.is_maximal()


def as_cone_oracle(M: LexSystem):
    return M.as_cone_oracle()


# ---------------------------------------------------------------------------
# Two-atom spaces


@dataclass(frozen=True)
class BinaryFamily:
    """One of the lexicographic desirable sets on a two-atom space.

    ``kind`` is ``"D_rho"``, ``"D_rho_a"``, ``"D_rho_b"``, ``"D_0"`` or
    ``"D_1"``; ``rho`` is the first layer's mass on the first atom.  The
    membership test uses the set descriptions directly, never expectations.
    """

    kind: str
    rho: Fraction

    def __str__(self) -> str:
        if self.kind in ("D_0", "D_1"):
            return self.kind
        return f"{self.kind}({format_rational(self.rho)})"

    def contains(self, f: Gamble) -> bool:
        a, b = f.values
        positive = a >= 0 and b >= 0 and (a or b)
        if self.kind == "D_0":
            return b > 0 or bool(positive)
        if self.kind == "D_1":
            return a > 0 or bool(positive)
        rho = self.rho
        # f = lam * (rho - 1, rho) + p with p >= 0, p != 0, for some real lam
        lo = -a / (1 - rho)
        hi = b / rho
        if lo < hi:
            return True
        # on the line through (rho - 1, rho): f = lam * direction
        lam = b / rho
        on_line = a == lam * (rho - 1) and not (a == 0 and b == 0)
        if not on_line:
            return False
        if self.kind == "D_rho_a":
            return lam < 0
        if self.kind == "D_rho_b":
            return lam > 0
        return False

    __contains__ = contains


def classify_binary(M: LexSystem) -> BinaryFamily:
    if M.space.n != 2:
        raise NotBinary(f"expected a two-atom space, got {M.space.n} atoms")
    M.require_no_savage_null()
    layers = M.reduced_layers()
    rho = layers[0][0]
    if rho == 1:
        return BinaryFamily("D_1", rho)
    if rho == 0:
        return BinaryFamily("D_0", rho)
    if len(layers) == 1:
        return BinaryFamily("D_rho", rho)
    # sign of the second layer on the kernel direction 1_a - rho
    return BinaryFamily("D_rho_a" if layers[1][0] > rho else "D_rho_b", rho)
