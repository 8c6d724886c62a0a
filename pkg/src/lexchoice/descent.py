"""Build a lexicographic system that extends a cone and avoids given options.

Given a coherent finitely generated cone ``D`` and options ``A`` such that
no positive combination of ``A`` is desirable, repeatedly separate the part
of ``D`` inside the current subspace from the part of ``Posi(A)`` inside it,
turn each separating functional into a probability mass, and restrict to
its kernel.  Each round shrinks the subspace, so at most ``n`` rounds run.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .choice import convex_rejection_weights
from .cones import GambleCone
from .errors import ConstructionFailed, ExtensionInfeasible, NotSeparable
from .exactlp import (
    FeasibleWitness,
    SeparationFunctional,
    Subspace,
    canonical,
    combine,
    cone_meet_subspace,
    dot,
    primitive,
    separate,
    solve_lp,
)
from .gambles import OptionSet
from .lexsys import LexSystem


@dataclass(frozen=True)
class DescentStep:
    functional: SeparationFunctional
    kernel: Subspace          # subspace the functional was found on
    mass: tuple
    desirable_rays: tuple     # generators of D inside ``kernel``
    avoided_rays: tuple       # generators of Posi(A) inside ``kernel``


@dataclass(frozen=True)
class DescentTrace:
    layers: tuple
    final_kernel: Subspace

    @property
    def termination_layer(self) -> int:
        return len(self.layers)


def extend_functional(functional, K: Subspace, prior_kernels=()) -> tuple:
    """A probability mass whose expectation, restricted to ``K``, is a positive
    multiple of ``functional``.

    Maximises the multiple ``c`` subject to ``m >= 0``, ``sum m = 1`` and
    ``E_m(b) = c * functional(b)`` for every basis vector ``b`` of ``K``.
    ``prior_kernels`` is accepted for symmetry with the construction and
    plays no role: only the restriction to ``K`` matters.
    """
    coeffs = functional.coefficients if isinstance(functional, SeparationFunctional) else tuple(functional)
    n = K.ambient_dimension
    # variables: m_1..m_n >= 0, c free
    rows = [(Fraction(1),) * n + (Fraction(0),)]
    rhs = [Fraction(1)]
    for b in K.basis:
        rows.append(tuple(b) + (-dot(coeffs, b),))
        rhs.append(Fraction(0))
    res = solve_lp(rows, rhs, (Fraction(0),) * n + (Fraction(1),), free=[n])
    if res.status != "optimal" or res.value <= 0:
        raise ExtensionInfeasible(
            f"functional {tuple(map(str, coeffs))} has no positive normalised extension ({res.status})")
    return res.x[:n]


def _lazy_separator(G, P, K: Subspace):
    """A vertex of ``{L : L(G[0]) = 1, L >= 0 on G, L <= 0 on P}``.

    Basic solutions vanish on as many rays as possible, which postpones
    decisions to later layers.  Falls back to :func:`separate` when the
    system has no solution.
    """
    d, n = K.dim, K.ambient_dimension
    B = K.basis
    rows, rhs = [], []
    first = [dot(b, G[0]) for b in B]
    rows.append(tuple(first) + (Fraction(0),) * (len(G) + len(P)))
    rhs.append(Fraction(1))
    for k, g in enumerate(G):
        r = [dot(b, g) for b in B] + [Fraction(0)] * (len(G) + len(P))
        r[d + k] = Fraction(-1)
        rows.append(tuple(r))
        rhs.append(Fraction(0))
    for k, h in enumerate(P):
        r = [dot(b, h) for b in B] + [Fraction(0)] * (len(G) + len(P))
        r[d + len(G) + k] = Fraction(1)
        rows.append(tuple(r))
        rhs.append(Fraction(0))
    res = solve_lp(rows, rhs, free=range(d))
    if res.status == "infeasible":
        return separate(G, P, K)
    c = combine(res.x[:d], B, n)
    return SeparationFunctional(canonical(c), FeasibleWitness(res.x))


def construct_extension(D: GambleCone, A: OptionSet, strategy: str = "eager"):
    """Return ``(LexSystem, DescentTrace)`` with every generator of ``D``
    desirable and no option of ``A`` desirable.

    ``strategy="eager"`` uses the max-margin separator, so the first layer
    already decides everything strictly decidable; ``"lazy"`` picks vertex
    separators that decide as little as possible per layer.  Raises
    :class:`NotSeparable` when a positive combination of ``A`` is desirable.
    """
    if strategy not in ("eager", "lazy"):
        raise ValueError(f"unknown strategy {strategy!r}")
    D.require_coherent()
    space = D.space
    n = space.n
    avoid = [a for a in A if not a.is_zero()]
    weights = convex_rejection_weights(D, space.zero(), avoid)
    if weights is not None:
        combo = {a: w for a, w in weights.items() if w}
        # rescale to coprime integer weights; membership is scale invariant
        ints = primitive(list(combo.values()))
        combo = dict(zip(combo, ints))
        g = space.zero()
        for a, w in combo.items():
            g = g + a * w
        raise NotSeparable(combo, g)

    gens = [g.values for g in D.all_generators]
    avoided = [a.values for a in avoid]
    K = Subspace.full(n)
    steps = []
    while True:
        G = cone_meet_subspace(gens, K)
        if not G:
            break
        P = cone_meet_subspace(avoided, K)
        if strategy == "lazy":
            lam = _lazy_separator(G, P, K)
        else:
            lam = separate(G, P, K)
        if not isinstance(lam, SeparationFunctional):
            raise ConstructionFailed(f"no separator on a subspace of dimension {K.dim}")
        mass = extend_functional(lam, K, [s.kernel for s in steps])
        steps.append(DescentStep(lam, K, mass, tuple(G), tuple(P)))
        K = K.meet_kernel(lam.coefficients)

    M = LexSystem(space, [s.mass for s in steps])
    trace = DescentTrace(tuple(steps), K)
    _validate(M, trace, D, avoid)
    return M, trace


def _validate(M: LexSystem, trace: DescentTrace, D: GambleCone, avoid):
    for g in D.all_generators:
        if not M.is_desirable(g):
            raise ConstructionFailed(f"generator {g!r} is not desirable under {M!r}")
    for a in avoid:
        if M.is_desirable(a):
            raise ConstructionFailed(f"avoided option {a!r} is desirable under {M!r}")
    if M.savage_null_events():
        raise ConstructionFailed(f"{M!r} has Savage-null atoms")
    if len(M.layers) > D.space.n:
        raise ConstructionFailed(f"{len(M.layers)} layers on {D.space.n} atoms")
    dims = [s.kernel.dim for s in trace.layers] + [trace.final_kernel.dim]
    if any(a <= b for a, b in zip(dims, dims[1:])):
        raise ConstructionFailed(f"kernel dimensions do not decrease: {dims}")
