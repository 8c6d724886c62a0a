"""Exact rational linear algebra and linear programming.

Everything here works on tuples of :class:`fractions.Fraction`.  The simplex
method uses Bland's rule, so it terminates without any tolerance parameter
and every answer comes with a certificate that re-verifies by substitution:
a feasible assignment, or a Farkas ray proving infeasibility.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

from .errors import DimensionMismatch, VectorOutsideSubspace

Vector = tuple  # tuple of Fraction

_ZERO = Fraction(0)
_ONE = Fraction(1)


def rational(x) -> Fraction:
    """Convert an int, Fraction or ``"p/q"`` string to a Fraction.

    Floats are refused: a binary float is rarely the number the user meant.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool) or isinstance(x, float):
        raise TypeError(f"refusing inexact value {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot interpret {x!r} as a rational")


def vector(xs: Iterable) -> Vector:
    return tuple(rational(x) for x in xs)


def format_rational(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def dot(u: Sequence, v: Sequence) -> Fraction:
    return sum((a * b for a, b in zip(u, v) if a and b), _ZERO)


def add(u: Sequence, v: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence, v: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def mul(c, u: Sequence) -> Vector:
    return tuple(c * a for a in u)


def combine(coefficients: Sequence, vectors: Sequence[Sequence], n: int) -> Vector:
    """Linear combination ``sum_i coefficients[i] * vectors[i]`` in dimension n."""
    out = [_ZERO] * n
    for c, v in zip(coefficients, vectors):
        if c:
            for j, a in enumerate(v):
                if a:
                    out[j] += c * a
    return tuple(out)


def is_zero(u: Sequence) -> bool:
    return not any(u)


def primitive(u: Sequence) -> Vector:
    """Positive rescaling of ``u`` to coprime integers (zero stays zero)."""
    if is_zero(u):
        return tuple(_ZERO for _ in u)
    den = lcm(*(a.denominator for a in u))
    ints = [int(a * den) for a in u]
    g = gcd(*ints)
    return tuple(Fraction(a // g) for a in ints)


# ---------------------------------------------------------------------------
# Linear algebra


def rref(rows: Sequence[Sequence], ncols: int):
    """Reduced row echelon form; returns ``(nonzero_rows, pivot_columns)``."""
    m = [list(r) for r in rows]
    pivots = []
    r = 0
    for c in range(ncols):
        if r == len(m):
            break
        p = next((i for i in range(r, len(m)) if m[i][c] != 0), None)
        if p is None:
            continue
        m[r], m[p] = m[p], m[r]
        pv = m[r][c]
        if pv != 1:
            m[r] = [x / pv for x in m[r]]
        for i in range(len(m)):
            if i != r and m[i][c] != 0:
                f = m[i][c]
                m[i] = [a - f * b for a, b in zip(m[i], m[r])]
        pivots.append(c)
        r += 1
    return m[:r], pivots


def rank(rows: Sequence[Sequence], ncols: int | None = None) -> int:
    rows = list(rows)
    if not rows:
        return 0
    return len(rref(rows, ncols if ncols is not None else len(rows[0]))[1])


@dataclass(frozen=True)
class Subspace:
    """A linear subspace of Q^n given by a basis (linearly independent)."""

    basis: tuple
    ambient_dimension: int

    def __post_init__(self):
        basis = tuple(vector(b) for b in self.basis)
        for b in basis:
            if len(b) != self.ambient_dimension:
                raise DimensionMismatch("basis vector has the wrong dimension")
        if rank(basis, self.ambient_dimension) != len(basis):
            raise ValueError("basis vectors are linearly dependent")
        object.__setattr__(self, "basis", basis)

    @classmethod
    def full(cls, n: int) -> "Subspace":
        return cls(tuple(tuple(_ONE if i == j else _ZERO for j in range(n)) for i in range(n)), n)

    @classmethod
    def span(cls, vectors: Sequence[Sequence], n: int) -> "Subspace":
        rows, _ = rref([vector(v) for v in vectors], n)
        return cls(tuple(primitive(r) for r in rows), n)

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coordinates(self, v: Sequence):
        """Coordinates of ``v`` in the basis, or ``None`` when v is outside."""
        v = vector(v)
        if len(v) != self.ambient_dimension:
            raise DimensionMismatch("vector has the wrong dimension")
        d = self.dim
        # solve sum_i a_i basis_i = v: one equation per ambient coordinate
        aug = [[b[j] for b in self.basis] + [v[j]] for j in range(self.ambient_dimension)]
        rows, piv = rref(aug, d + 1)
        if d in piv:
            return None
        coords = [_ZERO] * d
        for row, c in zip(rows, piv):
            coords[c] = row[d]
        return tuple(coords)

    def __contains__(self, v) -> bool:
        return self.coordinates(v) is not None

    def require(self, vectors: Iterable[Sequence]):
        for v in vectors:
            if v not in self:
                raise VectorOutsideSubspace(f"{tuple(map(format_rational, v))} is not in the subspace")

    def complement_rows(self) -> list:
        """A basis of the orthogonal complement (rows whose kernel is this space)."""
        return list(nullspace(self.basis, self.ambient_dimension).basis)

    def project(self, z: Sequence) -> Vector:
        """Orthogonal projection of z; the representative in this space of the
        functional ``v -> z . v`` restricted to it."""
        if not self.basis:
            return tuple(_ZERO for _ in z)
        d = self.dim
        gram = [[dot(bi, bj) for bj in self.basis] + [dot(bi, z)] for bi in self.basis]
        rows, _ = rref(gram, d + 1)
        alpha = [row[d] for row in rows]
        return combine(alpha, self.basis, self.ambient_dimension)

    def meet_kernel(self, c: Sequence) -> "Subspace":
        """Intersection with the hyperplane ``{x : c . x = 0}``."""
        row = [dot(c, b) for b in self.basis]
        inner = nullspace([row], self.dim)
        vecs = [combine(a, self.basis, self.ambient_dimension) for a in inner.basis]
        return Subspace(tuple(primitive(v) for v in vecs), self.ambient_dimension)


def nullspace(rows: Sequence[Sequence], n: int | None = None) -> Subspace:
    """Basis of ``{v : r . v = 0 for every row r}``, scaled to primitive integers."""
    rows = [vector(r) for r in rows]
    if n is None:
        if not rows:
            raise DimensionMismatch("ambient dimension unknown for an empty row list")
        n = len(rows[0])
    if any(len(r) != n for r in rows):
        raise DimensionMismatch("rows have different dimensions")
    red, piv = rref(rows, n) if rows else ([], [])
    free = [c for c in range(n) if c not in piv]
    basis = []
    for f in free:
        v = [_ZERO] * n
        v[f] = _ONE
        for row, p in zip(red, piv):
            v[p] = -row[f]
        basis.append(primitive(v))
    return Subspace(tuple(basis), n)


# ---------------------------------------------------------------------------
# Simplex


@dataclass
class LPResult:
    """Outcome of :func:`solve_lp`.

    ``status`` is ``"optimal"``, ``"infeasible"`` or ``"unbounded"``.  For an
    optimal result ``x`` and ``duals`` satisfy strong duality exactly; for an
    infeasible one ``farkas`` is a ray ``y`` with ``y.A_j >= 0`` on
    non-negative columns, ``y.A_j = 0`` on free columns and ``y.b < 0``.
    """

    status: str
    x: tuple = ()
    value: Fraction | None = None
    duals: tuple = ()
    farkas: tuple = ()


def _pivot(T, basis, obj, i, j):
    prow = T[i]
    pv = prow[j]
    if pv != 1:
        prow = [a / pv for a in prow]
        T[i] = prow
    nz = [k for k, a in enumerate(prow) if a]
    for r, row in enumerate(T):
        if r != i:
            f = row[j]
            if f:
                for k in nz:
                    row[k] -= f * prow[k]
    f = obj[j]
    if f:
        for k in nz:
            obj[k] -= f * prow[k]
    basis[i] = j


def _run_simplex(T, basis, cost, allowed, rhs):
    """Maximise ``cost . x`` over the current tableau with Bland's rule.

    Returns ``(status, obj_row)``; ``obj_row[j]`` is the reduced cost
    ``c_B B^-1 A_j - c_j`` and ``obj_row[rhs]`` the objective value.
    """
    width = rhs + 1
    obj = [-cost[j] if j < rhs else _ZERO for j in range(width)]
    for i, b in enumerate(basis):
        cb = cost[b]
        if cb:
            row = T[i]
            for k in range(width):
                if row[k]:
                    obj[k] += cb * row[k]
    while True:
        enter = next((j for j in allowed if obj[j] < 0), None)
        if enter is None:
            return "optimal", obj
        best = None
        for i, row in enumerate(T):
            a = row[enter]
            if a > 0:
                ratio = row[rhs] / a
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            return "unbounded", obj
        _pivot(T, basis, obj, best[1], enter)


def solve_lp(A: Sequence[Sequence], b: Sequence, c: Sequence | None = None,
             free: Iterable[int] = ()) -> LPResult:
    """Maximise ``c . x`` subject to ``A x = b`` and ``x_j >= 0`` for j not in ``free``.

    With ``c=None`` only feasibility is decided.  Two-phase simplex on a
    dense tableau of Fractions; free variables are split into two
    non-negative parts.
    """
    A = [vector(r) for r in A]
    b = vector(b)
    m = len(A)
    if len(b) != m:
        raise DimensionMismatch("right-hand side length differs from the number of rows")
    nvars = len(A[0]) if m else (len(c) if c is not None else 0)
    if any(len(r) != nvars for r in A):
        raise DimensionMismatch("constraint rows have different lengths")
    c = vector(c) if c is not None else tuple(_ZERO for _ in range(nvars))
    if len(c) != nvars:
        raise DimensionMismatch("objective length differs from the number of variables")
    free = set(free)

    # column layout: one column per non-negative var, two per free var
    cols = []  # (var index, sign)
    for j in range(nvars):
        cols.append((j, 1))
        if j in free:
            cols.append((j, -1))
    N = len(cols)
    signs = [(-1 if bi < 0 else 1) for bi in b]
    rhs = N + m
    T = []
    for i in range(m):
        s = signs[i]
        row = [s * sg * A[i][j] for (j, sg) in cols]
        row += [_ONE if k == i else _ZERO for k in range(m)]
        row.append(s * b[i])
        T.append(row)
    basis = [N + i for i in range(m)]

    # phase 1: maximise minus the sum of artificials
    cost1 = [_ZERO] * N + [-_ONE] * m
    status, obj = _run_simplex(T, basis, cost1, range(N), rhs)
    if obj[rhs] < 0:
        y = [sum((cost1[basis[r]] * T[r][N + i] for r in range(m)), _ZERO) for i in range(m)]
        ray = tuple(signs[i] * y[i] for i in range(m))
        return LPResult("infeasible", farkas=ray)

    # drive zero-level artificials out of the basis where possible
    for i in range(m):
        if basis[i] >= N:
            j = next((j for j in range(N) if T[i][j] != 0), None)
            if j is not None:
                _pivot(T, basis, [_ZERO] * (rhs + 1), i, j)

    cost2 = [sg * c[j] for (j, sg) in cols] + [_ZERO] * m
    status, obj = _run_simplex(T, basis, cost2, range(N), rhs)
    if status == "unbounded":
        return LPResult("unbounded")
    xcol = [_ZERO] * N
    for i, bcol in enumerate(basis):
        if bcol < N:
            xcol[bcol] = T[i][rhs]
    x = [_ZERO] * nvars
    for k, (j, sg) in enumerate(cols):
        x[j] += sg * xcol[k]
    y = [sum((cost2[basis[r]] * T[r][N + i] for r in range(m)), _ZERO) for i in range(m)]
    duals = tuple(signs[i] * y[i] for i in range(m))
    return LPResult("optimal", x=tuple(x), value=obj[rhs], duals=duals)


# ---------------------------------------------------------------------------
# Feasibility with certificates


@dataclass(frozen=True)
class FeasibleWitness:
    assignment: tuple


@dataclass(frozen=True)
class FarkasRay:
    ray: tuple


def lp_feasible(equalities: Sequence[tuple], nonneg_vars: Iterable[int]):
    """Decide ``{x : a.x = beta for each (a, beta)}`` with the flagged variables
    non-negative (the others free).

    Returns a :class:`FeasibleWitness` or a :class:`FarkasRay` ``y`` with
    ``sum_i y_i a_i`` non-negative on flagged variables, zero on free ones and
    ``sum_i y_i beta_i < 0``.
    """
    if not equalities:
        raise DimensionMismatch("at least one equality is required")
    rows = [vector(a) for a, _ in equalities]
    rhs = [rational(beta) for _, beta in equalities]
    n = len(rows[0])
    if n == 0:
        raise DimensionMismatch("at least one variable is required")
    nonneg = set(nonneg_vars)
    if any(j < 0 or j >= n for j in nonneg):
        raise DimensionMismatch("non-negative variable index out of range")
    res = solve_lp(rows, rhs, free=[j for j in range(n) if j not in nonneg])
    if res.status == "infeasible":
        return FarkasRay(res.farkas)
    return FeasibleWitness(res.x)


def verify_certificate(equalities: Sequence[tuple], nonneg_vars: Iterable[int], cert) -> bool:
    """Re-check a certificate from :func:`lp_feasible` by exact substitution."""
    rows = [vector(a) for a, _ in equalities]
    rhs = [rational(beta) for _, beta in equalities]
    nonneg = set(nonneg_vars)
    n = len(rows[0])
    if isinstance(cert, FeasibleWitness):
        x = cert.assignment
        return (all(dot(r, x) == beta for r, beta in zip(rows, rhs))
                and all(x[j] >= 0 for j in nonneg))
    y = cert.ray
    combo = combine(y, rows, n)
    return (all((combo[j] >= 0) if j in nonneg else (combo[j] == 0) for j in range(n))
            and dot(y, rhs) < 0)


def cone_member(generators: Sequence[Sequence], v: Sequence, nonzero: bool = False):
    """Non-negative coefficients expressing ``v`` over ``generators``, or None.

    With ``nonzero`` the coefficients are normalised to sum to one and ``v``
    is only matched up to a positive factor, which is how the zero vector is
    asked for a non-trivial representation.
    """
    v = vector(v)
    n = len(v)
    k = len(generators)
    if k == 0:
        return None if (nonzero or not is_zero(v)) else ()
    if nonzero:
        # sum mu_g g - s v = 0, sum mu = 1, mu >= 0, s >= 0
        eqs = [(tuple(g[j] for g in generators) + (-v[j],), 0) for j in range(n)]
        eqs.append((tuple(_ONE for _ in generators) + (_ZERO,), 1))
        res = solve_lp([a for a, _ in eqs], [bb for _, bb in eqs])
        return None if res.status == "infeasible" else res.x[:k]
    if is_zero(v):
        return tuple(_ZERO for _ in generators)
    eqs = [tuple(g[j] for g in generators) for j in range(n)]
    res = solve_lp(eqs, v)
    return None if res.status == "infeasible" else res.x


# ---------------------------------------------------------------------------
# Separation


@dataclass(frozen=True)
class SeparationFunctional:
    """A linear functional ``v -> coefficients . v`` on a subspace.

    ``coefficients`` is the representative lying in the subspace, scaled by a
    positive factor to coprime integers.  ``certificate`` records how it was
    found: the optimal assignment of the max-margin LP, or the Farkas ray of
    an infeasible representation problem.
    """

    coefficients: tuple
    certificate: FeasibleWitness | FarkasRay = field(compare=False)

    def __call__(self, v: Sequence) -> Fraction:
        return dot(self.coefficients, v)


@dataclass(frozen=True)
class NoSeparator:
    """Proof that only the zero functional satisfies the sign constraints.

    Each entry is ``(direction, nonneg_coefficients, nonpos_coefficients)``
    with ``direction = sum a_i g_i - sum b_j h_j``; directions cover plus and
    minus every basis vector (weak case), or a single zero direction whose
    ``a`` sums to one (strict case).
    """

    certificate: tuple


def canonical(c: Sequence, signed: bool = True) -> Vector:
    p = primitive(c)
    if not signed:
        first = next((a for a in p if a), _ZERO)
        if first < 0:
            p = tuple(-a for a in p)
    return p


def _max_margin(strict, nonpos, K: Subspace):
    """max t s.t. L(g) >= t, L(h) <= 0, |L|_1 <= 1 with L represented in K."""
    n, d = K.ambient_dimension, K.dim
    B = K.basis
    ns, nh = len(strict), len(nonpos)
    # variables: alpha (d, free), t (free), s_g (ns), s_h (nh), cp (n), cm (n), s_norm
    nv = d + 1 + ns + nh + 2 * n + 1
    rows, rhs = [], []

    def row():
        return [_ZERO] * nv

    for k, g in enumerate(strict):
        r = row()
        for i in range(d):
            r[i] = dot(B[i], g)
        r[d] = -_ONE
        r[d + 1 + k] = -_ONE
        rows.append(r)
        rhs.append(_ZERO)
    for k, h in enumerate(nonpos):
        r = row()
        for i in range(d):
            r[i] = dot(B[i], h)
        r[d + 1 + ns + k] = _ONE
        rows.append(r)
        rhs.append(_ZERO)
    off = d + 1 + ns + nh
    for j in range(n):
        r = row()
        for i in range(d):
            r[i] = B[i][j]
        r[off + j] = -_ONE
        r[off + n + j] = _ONE
        rows.append(r)
        rhs.append(_ZERO)
    r = row()
    for j in range(2 * n + 1):
        r[off + j] = _ONE
    rows.append(r)
    rhs.append(_ONE)
    obj = row()
    obj[d] = _ONE
    res = solve_lp(rows, rhs, obj, free=list(range(d + 1)))
    alpha = res.x[:d]
    return res.value, combine(alpha, B, n), res.x


def _gordan_certificate(strict, nonpos, n):
    """Non-negative a (summing to 1) and b with sum a g = sum b h, or None."""
    eqs = [tuple(g[j] for g in strict) + tuple(-h[j] for h in nonpos) for j in range(n)]
    eqs.append(tuple(_ONE for _ in strict) + tuple(_ZERO for _ in nonpos))
    res = solve_lp(eqs, [_ZERO] * n + [_ONE])
    if res.status == "infeasible":
        return None
    return res.x[:len(strict)], res.x[len(strict):]


def _prepare(vectors_a, vectors_b, within):
    a = [vector(v) for v in vectors_a]
    b = [vector(v) for v in vectors_b]
    if within is None:
        dims = {len(v) for v in a + b}
        if len(dims) != 1:
            raise DimensionMismatch("cannot infer the ambient dimension")
        within = Subspace.full(dims.pop())
    if any(len(v) != within.ambient_dimension for v in a + b):
        raise DimensionMismatch("generator dimension differs from the subspace")
    within.require(a + b)
    return a, b, within


def strict_separate(strict_gens, nonpos_gens, within: Subspace | None = None):
    """Functional on ``within`` positive on every strict generator and
    non-positive on every ``nonpos`` generator, or a :class:`NoSeparator`.

    Solved as a max-margin LP; success iff the optimal margin is positive.
    """
    strict, nonpos, K = _prepare(strict_gens, nonpos_gens, within)
    if not strict:
        return separate([], nonpos, K)
    if K.dim == 0:
        return NoSeparator(((tuple(_ZERO for _ in range(K.ambient_dimension)), (_ONE,) + (_ZERO,) * (len(strict) - 1), (_ZERO,) * len(nonpos)),))
    t, c, assignment = _max_margin(strict, nonpos, K)
    if t > 0:
        return SeparationFunctional(canonical(c), FeasibleWitness(assignment))
    cert = _gordan_certificate(strict, nonpos, K.ambient_dimension)
    assert cert is not None, "zero margin without a Gordan certificate"
    a, b = cert
    return NoSeparator(((tuple(_ZERO for _ in range(K.ambient_dimension)), a, b),))


def separate(nonneg_gens, nonpos_gens, within: Subspace | None = None):
    """Non-zero functional on ``within`` that is >= 0 on ``nonneg_gens`` and
    <= 0 on ``nonpos_gens``, or a :class:`NoSeparator` certificate.

    The max-margin functional is preferred when its margin is positive;
    otherwise a weak separator is read off the Farkas ray of the first basis
    direction that is not a difference of the two cones.
    """
    nonneg, nonpos, K = _prepare(nonneg_gens, nonpos_gens, within)
    n = K.ambient_dimension
    if nonneg:
        found = strict_separate(nonneg, nonpos, K)
        if isinstance(found, SeparationFunctional):
            return found
    cert = []
    for b in K.basis:
        for s in (1, -1):
            target = mul(s, b)
            if nonneg or nonpos:
                eqs = [(tuple(g[j] for g in nonneg) + tuple(-h[j] for h in nonpos), target[j])
                       for j in range(n)]
                out = lp_feasible(eqs, range(len(nonneg) + len(nonpos)))
            else:
                out = FarkasRay(tuple(-a for a in target))
            if isinstance(out, FarkasRay):
                c = K.project(out.ray)
                return SeparationFunctional(canonical(c, signed=bool(nonneg or nonpos)), out)
            x = out.assignment
            cert.append((target, x[:len(nonneg)], x[len(nonneg):]))
    return NoSeparator(tuple(cert))


# ---------------------------------------------------------------------------
# Cones meeting subspaces


def _irredundant(rays):
    kept = list(rays)
    i = 0
    while i < len(kept):
        others = kept[:i] + kept[i + 1:]
        if others and cone_member(others, kept[i]) is not None:
            del kept[i]
        else:
            i += 1
    return kept


def cone_meet_subspace(generators: Sequence[Sequence], within: Subspace) -> list:
    """Generators of ``cone(generators) & within``.

    Double-description update: the cone is cut by one hyperplane of the
    orthogonal complement at a time, keeping rays on the hyperplane and
    combining every pair of rays from opposite sides; redundant rays are
    removed by exact cone-membership LPs after every cut.  The empty list
    means the intersection is ``{0}``.
    """
    n = within.ambient_dimension
    rays = []
    for g in generators:
        g = vector(g)
        if len(g) != n:
            raise DimensionMismatch("generator dimension differs from the subspace")
        if not is_zero(g):
            p = primitive(g)
            if p not in rays:
                rays.append(p)
    for a in within.complement_rows():
        zero, pos, neg = [], [], []
        for r in rays:
            s = dot(a, r)
            (zero if s == 0 else pos if s > 0 else neg).append((r, s))
        new = [r for r, _ in zero]
        for p, sp in pos:
            for q, sq in neg:
                v = primitive(sub(mul(sp, q), mul(sq, p)))
                if not is_zero(v) and v not in new:
                    new.append(v)
        rays = _irredundant(new)
    return rays
