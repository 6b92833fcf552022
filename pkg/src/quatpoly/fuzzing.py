"""Seeded random instance generators and the lemma fuzz suites.

Everything is driven by ``random.Random(seed)`` so identical configurations
reproduce identical trials.  The four suites exercised by the CLI check
theorems, so a failure always means an implementation bug; failures are
shrunk (drop terms, halve exponents) before being reported.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from random import Random

from .errors import QuatpolyError
from .ideals import interpolate_vanishing, suffix_conjugate
from .poly import CentralPoly
from .quaternion import (
    PureDirection,
    QI,
    QJ,
    Quaternion,
    pairwise_commuting,
)
from .scalarmode import exact_sqrt
from .spheres import EmbeddedSphere, affine_coeffs, point_at, vanishes_on_sphere


# -- random value generators ------------------------------------------------------


def rand_fraction(rng: Random, max_num: int = 4, max_den: int = 3, nonzero: bool = False):
    while True:
        v = Fraction(rng.randint(-max_num, max_num), rng.randint(1, max_den))
        if v or not nonzero:
            return v


def rand_quaternion(rng: Random, nonzero: bool = False) -> Quaternion:
    while True:
        q = Quaternion(*(rand_fraction(rng) for _ in range(4)))
        if not q.is_zero() or not nonzero:
            return q


def rand_pure_quaternion(rng: Random) -> Quaternion:
    while True:
        q = Quaternion(0, *(rand_fraction(rng) for _ in range(3)))
        if not q.is_zero():
            return q


def rand_unit_pure(rng: Random) -> Quaternion:
    """Random rational point of the unit pure sphere (exact normsq 1).

    Stereographic parametrization (2s, 2t, 1-s^2-t^2)/(1+s^2+t^2) followed by
    a random signed permutation of the three components.
    """
    s = rand_fraction(rng, 3, 2)
    t = rand_fraction(rng, 3, 2)
    d = 1 + s * s + t * t
    comps = [2 * s / d, 2 * t / d, (1 - s * s - t * t) / d]
    rng.shuffle(comps)
    comps = [v if rng.random() < 0.5 else -v for v in comps]
    return Quaternion(0, *comps)


def rand_norm_rational_direction(rng: Random) -> PureDirection:
    """Random rational pure direction whose length is rational (a scaled
    rational unit vector), so conjugators stay exact."""
    u = rand_unit_pure(rng)
    scale = abs(rand_fraction(rng, 4, 2, nonzero=True))
    return PureDirection(u.x * scale, u.y * scale, u.z * scale)


def rand_exps(rng: Random, n: int, max_degree: int):
    total = rng.randint(0, max_degree)
    exps = [0] * n
    for _ in range(total):
        exps[rng.randrange(n)] += 1
    return tuple(exps)


def rand_poly(
    rng: Random, n: int, max_degree: int = 4, max_terms: int = 5
) -> CentralPoly:
    terms = {}
    for _ in range(rng.randint(1, max_terms)):
        terms[rand_exps(rng, n, max_degree)] = rand_quaternion(rng, nonzero=True)
    return CentralPoly(n, terms)


def rand_point(rng: Random, n: int, nonzero: bool = False):
    return tuple(rand_quaternion(rng, nonzero=nonzero) for _ in range(n))


def rand_commuting_point(rng: Random, n: int):
    """Random point inside one slice (hence pairwise commuting)."""
    J = rand_unit_pure(rng)
    out = []
    for _ in range(n):
        a = rand_fraction(rng)
        b = rand_fraction(rng)
        out.append(Quaternion.from_scalar(a) + J * b)
    return tuple(out)


_AXES = (
    PureDirection(1, 0, 0),
    PureDirection(0, 1, 0),
    PureDirection(0, 0, 1),
)


def rand_saturating_point(rng: Random, n: int, axis_aligned: bool = False):
    """Random noncommuting point whose conjugation orbit saturates.

    Coordinates 1..n-1 are real or pure imaginary: conjugation by a pure
    quaternion is a half turn, so every orbit move is an involution and the
    closure stays finite.  The last coordinate may be a general quaternion.
    With axis_aligned=True all slice directions come from the standard axes,
    which keeps conjugators and sphere radii rational (a fully exact run).
    """
    while True:
        coords = []
        for _ in range(n - 1):
            if rng.random() < 0.25:
                coords.append(
                    Quaternion.from_scalar(rand_fraction(rng, 4, 2, nonzero=True))
                )
            else:
                coords.append(_rand_pure_coordinate(rng, axis_aligned))
        coords.append(_general_coordinate(rng, axis_aligned))
        point = tuple(coords)
        if not pairwise_commuting(point):
            return point


def _rand_pure_coordinate(rng: Random, axis_aligned: bool) -> Quaternion:
    if axis_aligned:
        d = rng.choice(_AXES)
        scale = Fraction(rng.randint(1, 3)) * rng.choice((1, -1))
        return Quaternion(0, d.dx * scale, d.dy * scale, d.dz * scale)
    while True:
        comps = [Fraction(rng.randint(-2, 2)) for _ in range(3)]
        if any(comps):
            return Quaternion(0, *comps)


def _general_coordinate(rng: Random, axis_aligned: bool) -> Quaternion:
    a = rand_fraction(rng, 3, 2)
    b = Fraction(rng.randint(1, 3))
    if axis_aligned:
        d = rng.choice(_AXES)
        return Quaternion(a, d.dx * b, d.dy * b, d.dz * b)
    while True:
        comps = [Fraction(rng.randint(-2, 2)) for _ in range(3)]
        if any(comps):
            return Quaternion(a, *(b * c for c in comps))


def conjugacy_sample_points(point, units=(QI, QJ)):
    """Two points per sign pattern of the commuting zero set of the
    characteristic ideal of ``point``: coordinates Re(q_t) + s_t*|Im(q_t)|*J
    for J in units and every sign pattern s over the nonreal coordinates.

    Radii |Im| are irrational in general; when any of them is, the whole
    sample is produced in float mode.
    """
    point = tuple(point)
    res = [q.re() for q in point]
    radii = []
    exact = True
    for q in point:
        nsq = q.im().normsq()
        if nsq == 0:
            radii.append(None)
            continue
        r = exact_sqrt(Fraction(nsq)) if not isinstance(nsq, float) else None
        if r is None:
            exact = False
            radii.append(math.sqrt(float(nsq)))
        else:
            radii.append(r)
    if not exact:
        res = [float(v) for v in res]
        radii = [None if r is None else float(r) for r in radii]
        units = tuple(u.to_float() for u in units)
    nonreal = [t for t, r in enumerate(radii) if r is not None]
    samples = []
    for mask in range(1 << len(nonreal)):
        signs = {t: (1 if mask >> idx & 1 == 0 else -1) for idx, t in enumerate(nonreal)}
        for J in units:
            coords = []
            for t, (a, r) in enumerate(zip(res, radii)):
                if r is None:
                    coords.append(Quaternion.from_scalar(a))
                else:
                    coords.append(Quaternion.from_scalar(a) + J * (signs[t] * r))
            samples.append(tuple(coords))
    return samples


# -- shrinking ------------------------------------------------------------------


def shrink_poly(f: CentralPoly, still_fails) -> CentralPoly:
    """Greedy minimization: drop terms, then halve exponents, while the
    predicate keeps failing."""
    cur = f
    changed = True
    while changed:
        changed = False
        items = cur.items()
        if len(items) > 1:
            for drop, _ in items:
                cand = CentralPoly(
                    cur.n, {e: c for e, c in items if e != drop}
                )
                if still_fails(cand):
                    cur, changed = cand, True
                    break
        if changed:
            continue
        for exps, coef in cur.items():
            halved = tuple(e // 2 for e in exps)
            if halved == exps:
                continue
            terms = {e: c for e, c in cur.items() if e != exps}
            terms[halved] = terms.get(halved, Quaternion.zero()) + coef
            cand = CentralPoly(cur.n, terms)
            if not cand.is_zero() and still_fails(cand):
                cur, changed = cand, True
                break
    return cur


# -- fuzz suites ------------------------------------------------------------------


@dataclass
class FuzzOutcome:
    lemma: str
    trials: int
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def summary(self) -> str:
        head = f"{self.trials - len(self.failures)}/{self.trials} ok"
        if self.failures:
            head += "\n" + "\n".join(f"FAIL: {msg}" for msg in self.failures)
        return head


def _suite(lemma, trials, seed, one_trial) -> FuzzOutcome:
    rng = Random(seed)
    out = FuzzOutcome(lemma, trials)
    for index in range(trials):
        trial_rng = Random(rng.getrandbits(64))
        try:
            message = one_trial(trial_rng)
        except (QuatpolyError, AssertionError) as exc:
            message = f"trial {index}: {exc}"
        if message:
            out.failures.append(f"trial {index}: {message}")
    return out


def fuzz_conj_root(trials: int = 1000, seed: int = 0) -> FuzzOutcome:
    """Shift-by-a-variable identity: (x_i f)(p) = f(p conjugated past i) * p_i."""

    def one(rng: Random):
        n = rng.randint(2, 4)
        f = rand_poly(rng, n, max_degree=4, max_terms=5)
        p = rand_point(rng, n, nonzero=True)
        i = rng.randint(1, n - 1)
        lhs = (CentralPoly.variable(n, i) * f).evaluate(p)
        rhs = f.evaluate(suffix_conjugate(p, i)) * p[i - 1]
        if lhs == rhs:
            return None
        bad = shrink_poly(
            f,
            lambda g: (CentralPoly.variable(n, i) * g).evaluate(p)
            != g.evaluate(suffix_conjugate(p, i)) * p[i - 1],
        )
        return f"identity fails for f={bad}, p={p}, i={i}"

    return _suite("conj-root", trials, seed, one)


def fuzz_affine_sphere(trials: int = 500, seed: int = 0) -> FuzzOutcome:
    """Polynomials restrict to affine functions q1 + q2*J on embedded spheres."""

    def one(rng: Random):
        n = rng.randint(2, 4)
        plen = rng.randint(1, n - 1)
        S = _rand_sphere(rng, n, plen)
        f = rand_poly(rng, n, max_degree=5, max_terms=6)
        q1, q2 = affine_coeffs(f, S)  # includes the internal check at k
        for _ in range(5):
            J = rand_unit_pure(rng)
            expect = q1 + q2 * J
            got = f.evaluate(point_at(S, J))
            if expect != got:
                bad = shrink_poly(
                    f,
                    lambda g: _affine_mismatch(g, S, J),
                )
                return f"affine fit broken for f={bad} at J={J}"
        return None

    return _suite("affine-sphere", trials, seed, one)


def _affine_mismatch(g, S, J) -> bool:
    try:
        a1, a2 = affine_coeffs(g, S)
    except QuatpolyError:
        return True
    return a1 + a2 * J != g.evaluate(point_at(S, J))


def _rand_sphere(rng: Random, n: int, plen: int) -> EmbeddedSphere:
    prefix = rand_point(rng, plen)
    slen = n - plen
    while True:
        radius = [rand_fraction(rng, 3, 2) for _ in range(slen)]
        if any(radius):
            break
    center = [rand_fraction(rng, 3, 2) for _ in range(slen)]
    return EmbeddedSphere(prefix, center, radius)


def fuzz_two_point(trials: int = 300, seed: int = 0) -> FuzzOutcome:
    """Vanishing at two distinct sphere points forces vanishing everywhere."""

    def one(rng: Random):
        n = rng.randint(2, 4)
        S = _rand_sphere(rng, n, rng.randint(1, n - 1))
        J1 = rand_unit_pure(rng)
        while True:
            J2 = rand_unit_pure(rng)
            if J2 != J1:
                break
        p1, p2 = point_at(S, J1), point_at(S, J2)
        f = interpolate_vanishing([p1, p2], degree_bound=2)
        if f is None or f.is_zero():
            return "interpolation returned no nonzero polynomial"
        if not (f.evaluate(p1).is_zero() and f.evaluate(p2).is_zero()):
            return f"interpolant does not vanish at its own nodes: f={f}"
        if not vanishes_on_sphere(f, S):
            return f"two-point principle violated for f={f}"
        for _ in range(10):
            J = rand_unit_pure(rng)
            if not f.evaluate(point_at(S, J)).is_zero():
                return f"nonzero value on sphere at J={J} for f={f}"
        return None

    return _suite("two-point", trials, seed, one)


def fuzz_mul_ring(trials: int = 300, seed: int = 0) -> FuzzOutcome:
    """Ring axioms plus evaluation rules (additive, left-linear, and the
    left-multiple property at commuting points)."""

    def one(rng: Random):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 3, 4)
        g = rand_poly(rng, n, 3, 4)
        h = rand_poly(rng, n, 3, 4)
        if (f * g) * h != f * (g * h):
            return f"associativity fails: f={f}, g={g}, h={h}"
        if f * (g + h) != f * g + f * h:
            return f"left distributivity fails: f={f}, g={g}, h={h}"
        if (f + g) * h != f * h + g * h:
            return f"right distributivity fails: f={f}, g={g}, h={h}"
        p = rand_point(rng, n)
        if (f + g).evaluate(p) != f.evaluate(p) + g.evaluate(p):
            return f"evaluation is not additive at p={p}"
        a = rand_quaternion(rng)
        if (a * f).evaluate(p) != a * f.evaluate(p):
            return f"evaluation is not left-linear at p={p}"
        cp = rand_commuting_point(rng, n)
        t = rng.randint(1, n)
        vanishing = CentralPoly.variable(n, t) - CentralPoly.const(n, cp[t - 1])
        if not (f * vanishing).evaluate(cp).is_zero():
            return f"left multiple fails to vanish at commuting p={cp}"
        return None

    return _suite("mul-ring", trials, seed, one)


FUZZ_SUITES = {
    "conj-root": fuzz_conj_root,
    "affine-sphere": fuzz_affine_sphere,
    "two-point": fuzz_two_point,
    "mul-ring": fuzz_mul_ring,
}
