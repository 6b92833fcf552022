"""Left ideals, conjugation orbits, and zero-set membership.

Membership of a point in the common zero set V(I) of a left ideal is decided
through the conjugation-orbit closure: multiplying a generator by a monomial
and evaluating equals evaluating the generator at a suffix-conjugated point
times an invertible factor.  Closing the point under suffix conjugations at
nonzero coordinates therefore turns "all left multiples vanish" into "all
generators vanish on the closure".  Orbits can be infinite (irrational
rotation angles), so the verdict is three-valued with explicit budgets.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import ArityMismatch, NotCommuting, ZeroCoordinate
from .linalg import HMatrix, nullspace_left
from .poly import CentralPoly, from_real_quadratic
from .quaternion import Quaternion, commutes, pairwise_commuting


class Verdict(enum.Enum):
    YES = "Yes"
    NO = "No"
    UNKNOWN = "Unknown"


@dataclass(frozen=True)
class LeftIdeal:
    gens: tuple

    def __post_init__(self):
        gens = tuple(self.gens)
        if not gens:
            raise ValueError("ideal needs at least one generator")
        n = gens[0].n
        if any(g.n != n for g in gens):
            raise ArityMismatch("generators of mixed arity")
        if any(not g._terms for g in gens):
            raise ValueError("zero generator")
        object.__setattr__(self, "gens", gens)

    @property
    def arity(self) -> int:
        return self.gens[0].n

    def is_exact(self) -> bool:
        return all(g.is_exact() for g in self.gens)

    def to_float(self) -> "LeftIdeal":
        return LeftIdeal(tuple(g.to_float() for g in self.gens))


@dataclass(frozen=True)
class OrbitResult:
    points: tuple
    saturated: bool


def suffix_conjugate(point, i: int):
    """Conjugate coordinates i+1..n by the i-th coordinate (1-based)."""
    point = tuple(point)
    n = len(point)
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} outside 1..{n - 1}")
    q = point[i - 1]
    if q.is_zero():
        raise ZeroCoordinate(f"coordinate {i} is zero")
    qi = q.inverse()
    return point[:i] + tuple(q * v * qi for v in point[i:])


def _moves(point):
    """Positions whose conjugation acts nontrivially on the suffix."""
    n = len(point)
    out = []
    for i in range(1, n):
        q = point[i - 1]
        if q.is_zero():
            continue
        if all(commutes(q, v) for v in point[i:]):
            continue
        out.append(i)
    return out


class _PointSet:
    """Insert-once set of points; hashing in exact mode, scan in float mode."""

    def __init__(self, exact: bool):
        self._exact = exact
        self._keys = set()
        self._points = []

    def add(self, point) -> bool:
        if self._exact:
            key = tuple(q.key() for q in point)
            if key in self._keys:
                return False
            self._keys.add(key)
        else:
            for other in self._points:
                if all(a == b for a, b in zip(point, other)):
                    return False
        self._points.append(point)
        return True

    def points(self):
        return tuple(self._points)

    def __len__(self):
        return len(self._points)


def orbit_closure(point, max_depth: int = 6, max_points: int = 4096) -> OrbitResult:
    """Breadth-first closure of {point} under suffix conjugations.

    Saturated means a fixed point was certified within the budgets: every
    explored point had all its moves applied and nothing new appeared.
    """
    point = tuple(point)
    exact = all(q.is_exact() for q in point)
    seen = _PointSet(exact)
    seen.add(point)
    frontier = [point]
    truncated = False
    depth = 0
    while frontier and depth < max_depth and not truncated:
        next_frontier = []
        for p in frontier:
            for i in _moves(p):
                q = suffix_conjugate(p, i)
                if seen.add(q):
                    if len(seen) > max_points:
                        truncated = True
                        break
                    next_frontier.append(q)
            if truncated:
                break
        frontier = next_frontier
        depth += 1
    saturated = not frontier and not truncated
    return OrbitResult(seen.points(), saturated)


def in_V(I: LeftIdeal, point, max_depth: int = 6, max_points: int = 4096) -> Verdict:
    """Three-valued membership of point in V(I).

    No is certain (a witnessing left multiple exists); Yes requires a
    saturated orbit; Unknown means the budget ran out with all checks green.
    """
    point = tuple(point)
    if len(point) != I.arity:
        raise ArityMismatch(f"point length {len(point)} != ideal arity {I.arity}")
    orbit = orbit_closure(point, max_depth, max_points)
    for p in orbit.points:
        for g in I.gens:
            if not g.evaluate(p).is_zero():
                return Verdict.NO
    return Verdict.YES if orbit.saturated else Verdict.UNKNOWN


def in_Vc(I: LeftIdeal, point) -> bool:
    """Membership in the commuting zero set V_c(I).

    At a commuting point, vanishing of the generators forces vanishing of
    every left multiple, so checking the generators suffices.
    """
    point = tuple(point)
    if len(point) != I.arity:
        raise ArityMismatch(f"point length {len(point)} != ideal arity {I.arity}")
    if not pairwise_commuting(point):
        return False
    return all(g.evaluate(point).is_zero() for g in I.gens)


def maximal_ideal_gens(point) -> LeftIdeal:
    """The maximal left ideal <x_t - q_t> of a pairwise-commuting point."""
    point = tuple(point)
    if not pairwise_commuting(point):
        raise NotCommuting("maximal ideals correspond to commuting points only")
    n = len(point)
    gens = []
    for t, q in enumerate(point, start=1):
        gens.append(CentralPoly.variable(n, t) - CentralPoly.const(n, q))
    return LeftIdeal(tuple(gens))


def characteristic_ideal(point) -> LeftIdeal:
    """Real quadratics x_t^2 - 2*Re(q_t)*x_t + |q_t|^2, one per coordinate.

    Each generator vanishes exactly on the conjugacy class of its coordinate,
    so V of this ideal is the product of those classes.
    """
    point = tuple(point)
    n = len(point)
    gens = tuple(
        from_real_quadratic(n, t, 2 * q.re(), q.normsq())
        for t, q in enumerate(point, start=1)
    )
    return LeftIdeal(gens)


def monomials_up_to(n: int, degree_bound: int):
    """All exponent tuples of total degree <= bound, canonical descending order."""
    out = []

    def rec(prefix, remaining, slots):
        if slots == 0:
            out.append(tuple(prefix))
            return
        for e in range(remaining, -1, -1):
            prefix.append(e)
            rec(prefix, remaining - e, slots - 1)
            prefix.pop()

    rec([], degree_bound, n)
    out.sort(reverse=True)
    return out


def interpolate_vanishing(points, degree_bound: int, arity: int = None):
    """A nonzero polynomial of total degree <= bound vanishing at all points,
    or None when only the zero polynomial qualifies at this bound.

    Found as a left-nullspace vector of the monomial evaluation matrix;
    normalized so its largest coefficient is 1.
    """
    points = [tuple(p) for p in points]
    if arity is None:
        if not points:
            raise ValueError("arity required when no points are given")
        arity = len(points[0])
    if any(len(p) != arity for p in points):
        raise ArityMismatch("points of mixed arity")
    monos = monomials_up_to(arity, degree_bound)
    maxes = [max(m[t] for m in monos) for t in range(arity)]
    columns = []
    for p in points:
        powers = []
        for q, mx in zip(p, maxes):
            table = [Quaternion.one()]
            for _ in range(mx):
                table.append(table[-1] * q)
            powers.append(table)
        col = []
        for m in monos:
            acc = Quaternion.one()
            for t, e in enumerate(m):
                if e:
                    acc = acc * powers[t][e]
            col.append(acc)
        columns.append(col)
    entries = []
    for t in range(len(monos)):
        for col in columns:
            entries.append(col[t])
    M = HMatrix(len(monos), len(points), entries)
    basis = nullspace_left(M)
    if not basis:
        return None
    vec = basis[0]
    lead_idx = max(range(len(vec)), key=lambda t: vec[t].normsq())
    lead_inv = vec[lead_idx].inverse()
    coeffs = {m: lead_inv * c for m, c in zip(monos, vec)}
    return CentralPoly(arity, coeffs)
