"""Embedded spheres and the affine restriction of central polynomials.

An embedded sphere is {(prefix, a1 + b1*J, ..., am + bm*J) : J in S} with a
fixed quaternion prefix and real center/radius vectors (a, b), b != 0.  On
such a set every central polynomial is an affine function q1 + q2*J of the
parameter, so vanishing at two distinct sphere points forces vanishing on the
whole sphere.

Both the prefix and the suffix are required to be nonempty: a sphere with an
empty suffix is a point and carries no two-point content, and the top-level
(empty prefix) case is not needed by any caller.
"""

from __future__ import annotations

import math

from .errors import (
    AllReal,
    ArityMismatch,
    ExactSphereUnavailable,
    NotCommuting,
    NotUnitImaginary,
    VerificationFailed,
)
from .poly import CentralPoly
from .quaternion import QI, QJ, QK, Quaternion, in_S, pairwise_commuting
from .scalarmode import coerce_scalar, exact_sqrt, scalar_is_zero


class EmbeddedSphere:
    __slots__ = ("prefix", "center", "radius")

    def __init__(self, prefix, center, radius):
        prefix = tuple(prefix)
        center = tuple(coerce_scalar(v) for v in center)
        radius = tuple(coerce_scalar(v) for v in radius)
        if not prefix:
            raise ValueError("sphere prefix must be nonempty")
        if not center or len(center) != len(radius):
            raise ValueError("center/radius must be nonempty and equally long")
        if all(scalar_is_zero(b) for b in radius):
            raise ValueError("radius must be nonzero (a sphere, not a point)")
        object.__setattr__(self, "prefix", prefix)
        object.__setattr__(self, "center", center)
        object.__setattr__(self, "radius", radius)

    def __setattr__(self, name, value):
        raise AttributeError("EmbeddedSphere is immutable")

    @property
    def arity(self) -> int:
        return len(self.prefix) + len(self.center)

    def suffix_at(self, J: Quaternion):
        return tuple(
            Quaternion.from_scalar(a) + J * b for a, b in zip(self.center, self.radius)
        )

    def __repr__(self):
        return f"EmbeddedSphere(prefix={self.prefix!r}, center={self.center!r}, radius={self.radius!r})"


def sphere_of(prefix, v2) -> EmbeddedSphere:
    """The conjugation sphere through (prefix, v2).

    v2 must commute pairwise and contain a nonreal coordinate.  The sign
    convention makes the radius entry of the first nonreal coordinate
    positive, so point_at at that coordinate's slice direction recovers v2.
    """
    v2 = tuple(v2)
    if not pairwise_commuting(v2):
        raise NotCommuting("suffix coordinates do not commute pairwise")
    ref = next((q for q in v2 if not q.is_real()), None)
    if ref is None:
        raise AllReal("suffix is real; its conjugation orbit is a point")
    d = ref.im()
    nsq = d.normsq()
    if isinstance(nsq, float):
        b_ref = math.sqrt(nsq)
    else:
        b_ref = exact_sqrt(nsq)
        if b_ref is None:
            raise ExactSphereUnavailable(
                f"|Im|^2 = {nsq} is not a rational square; retry in float mode"
            )
    unit = d / b_ref
    center = tuple(q.re() for q in v2)
    radius = tuple(q.x * unit.x + q.y * unit.y + q.z * unit.z for q in v2)
    return EmbeddedSphere(prefix, center, radius)


def point_at(S: EmbeddedSphere, J: Quaternion):
    if not in_S(J):
        raise NotUnitImaginary(f"{J!r} is not a unit pure quaternion")
    return S.prefix + S.suffix_at(J)


def contains(S: EmbeddedSphere, point) -> bool:
    point = tuple(point)
    if len(point) != S.arity:
        return False
    k = len(S.prefix)
    if any(p != q for p, q in zip(point, S.prefix)):
        return False
    suffix = point[k:]
    t0 = next(t for t, b in enumerate(S.radius) if not scalar_is_zero(b))
    J = (suffix[t0] - S.center[t0]) / S.radius[t0]
    if not in_S(J):
        return False
    return all(q == Quaternion.from_scalar(a) + J * b
               for q, a, b in zip(suffix, S.center, S.radius))


def affine_coeffs(f: CentralPoly, S: EmbeddedSphere):
    """(q1, q2) with f(point_at(S, J)) = q1 + q2*J for every J in S.

    Fitted at the units i and j (their difference is invertible and exact)
    and cross-checked at k; a failed check means a malformed sphere or a bug,
    never a math failure.
    """
    if f.n != S.arity:
        raise ArityMismatch(f"polynomial arity {f.n} != sphere arity {S.arity}")
    g = f.partial_prefix(S.prefix)
    ui = g.evaluate(S.suffix_at(QI))
    uj = g.evaluate(S.suffix_at(QJ))
    q2 = (ui - uj) * (QI - QJ).inverse()
    q1 = ui - q2 * QI
    uk = g.evaluate(S.suffix_at(QK))
    if not (q1 + q2 * QK == uk):
        raise VerificationFailed("affine fit failed its cross-check at k")
    return q1, q2


def vanishes_on_sphere(f: CentralPoly, S: EmbeddedSphere) -> bool:
    q1, q2 = affine_coeffs(f, S)
    return q1.is_zero() and q2.is_zero()
