"""Quaternion arithmetic, slices, and conjugator construction.

Values are immutable; components are exact (Fraction) or float, see
``scalarmode``.  Comparisons go through the scalar-mode equality so the same
code serves both exact certificates and numeric fallback runs.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import NamedTuple

from .errors import (
    DivisionByZero,
    ExactConjugatorUnavailable,
    VerificationFailed,
    ZeroDirection,
)
from .scalarmode import (
    coerce_scalar,
    exact_sqrt,
    is_exact_scalar,
    scalar_eq,
    scalar_is_zero,
)


class Quaternion:
    """An element w + x*i + y*j + z*k of Hamilton's algebra."""

    __slots__ = ("w", "x", "y", "z")

    def __init__(self, w=0, x=0, y=0, z=0):
        object.__setattr__(self, "w", coerce_scalar(w))
        object.__setattr__(self, "x", coerce_scalar(x))
        object.__setattr__(self, "y", coerce_scalar(y))
        object.__setattr__(self, "z", coerce_scalar(z))

    def __setattr__(self, name, value):
        raise AttributeError("Quaternion is immutable")

    # -- construction helpers -------------------------------------------------

    @classmethod
    def zero(cls) -> "Quaternion":
        return cls(0, 0, 0, 0)

    @classmethod
    def one(cls) -> "Quaternion":
        return cls(1, 0, 0, 0)

    @classmethod
    def from_scalar(cls, v) -> "Quaternion":
        return cls(v, 0, 0, 0)

    def components(self):
        return (self.w, self.x, self.y, self.z)

    def key(self):
        """Hashable exact identity (component tuple); use only in exact mode."""
        return (self.w, self.x, self.y, self.z)

    # -- predicates ------------------------------------------------------------

    def is_zero(self) -> bool:
        return all(scalar_is_zero(c) for c in self.components())

    def is_real(self) -> bool:
        return (
            scalar_is_zero(self.x)
            and scalar_is_zero(self.y)
            and scalar_is_zero(self.z)
        )

    def is_exact(self) -> bool:
        return all(is_exact_scalar(c) for c in self.components())

    # -- parts -----------------------------------------------------------------

    def re(self):
        return self.w

    def im(self) -> "Quaternion":
        return Quaternion(0, self.x, self.y, self.z)

    def conjugate(self) -> "Quaternion":
        return Quaternion(self.w, -self.x, -self.y, -self.z)

    def normsq(self):
        return self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return Quaternion(
            self.w + other.w, self.x + other.x, self.y + other.y, self.z + other.z
        )

    __radd__ = __add__

    def __sub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return Quaternion(
            self.w - other.w, self.x - other.x, self.y - other.y, self.z - other.z
        )

    def __rsub__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other - self

    def __neg__(self):
        return Quaternion(-self.w, -self.x, -self.y, -self.z)

    def __mul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        aw, ax, ay, az = self.components()
        bw, bx, by, bz = other.components()
        return Quaternion(
            aw * bw - ax * bx - ay * by - az * bz,
            aw * bx + ax * bw + ay * bz - az * by,
            aw * by - ax * bz + ay * bw + az * bx,
            aw * bz + ax * by - ay * bx + az * bw,
        )

    def __rmul__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return other * self

    def inverse(self) -> "Quaternion":
        n = self.normsq()
        if self.is_zero():
            raise DivisionByZero("inverse of zero quaternion")
        return Quaternion(self.w / n, -self.x / n, -self.y / n, -self.z / n)

    def __truediv__(self, other):
        if isinstance(other, Quaternion):
            return self * other.inverse()
        other = coerce_scalar(other)
        if scalar_is_zero(other):
            raise DivisionByZero("division by zero scalar")
        return Quaternion(self.w / other, self.x / other, self.y / other, self.z / other)

    def __eq__(self, other):
        other = _lift(other)
        if other is None:
            return NotImplemented
        return all(scalar_eq(a, b) for a, b in zip(self.components(), other.components()))

    __hash__ = None  # equality is tolerance-aware in float mode

    def to_float(self) -> "Quaternion":
        return Quaternion(float(self.w), float(self.x), float(self.y), float(self.z))

    def __repr__(self):
        return f"Quaternion({self.w!r}, {self.x!r}, {self.y!r}, {self.z!r})"

    def __str__(self):
        from .exprio import print_quaternion

        return print_quaternion(self)


def _lift(v):
    if isinstance(v, Quaternion):
        return v
    if isinstance(v, (int, Fraction, float)) and not isinstance(v, bool):
        return Quaternion.from_scalar(v)
    return None


ONE = Quaternion(1)
QI = Quaternion(0, 1, 0, 0)
QJ = Quaternion(0, 0, 1, 0)
QK = Quaternion(0, 0, 0, 1)


# -- spec operations ------------------------------------------------------------


def qmul(a: Quaternion, b: Quaternion) -> Quaternion:
    return a * b


def qinv(a: Quaternion) -> Quaternion:
    return a.inverse()


def commutes(a: Quaternion, b: Quaternion) -> bool:
    """ab == ba, i.e. the imaginary parts are parallel (same slice)."""
    cx = a.y * b.z - a.z * b.y
    cy = a.z * b.x - a.x * b.z
    cz = a.x * b.y - a.y * b.x
    return scalar_is_zero(cx) and scalar_is_zero(cy) and scalar_is_zero(cz)


def pairwise_commuting(points) -> bool:
    pts = tuple(points)
    return all(
        commutes(pts[a], pts[b]) for a in range(len(pts)) for b in range(a + 1, len(pts))
    )


def in_S(q: Quaternion) -> bool:
    """Membership in the unit pure sphere, i.e. q*q == -1."""
    return scalar_is_zero(q.w) and scalar_eq(q.normsq(), _one_like(q.normsq()))


def _one_like(v):
    return 1.0 if isinstance(v, float) else Fraction(1)


class SliceForm(NamedTuple):
    """q = re + im with re real and im pure; im is left unnormalized."""

    re: object
    im: Quaternion


def slice_split(q: Quaternion) -> SliceForm:
    return SliceForm(q.re(), q.im())


class PureDirection:
    """A nonzero pure quaternion up to positive rescaling (a slice direction)."""

    __slots__ = ("dx", "dy", "dz")

    def __init__(self, dx, dy, dz):
        object.__setattr__(self, "dx", coerce_scalar(dx))
        object.__setattr__(self, "dy", coerce_scalar(dy))
        object.__setattr__(self, "dz", coerce_scalar(dz))
        if self.is_zero():
            raise ZeroDirection("pure direction must be nonzero")

    def __setattr__(self, name, value):
        raise AttributeError("PureDirection is immutable")

    @classmethod
    def of(cls, q: Quaternion) -> "PureDirection":
        """Direction of the imaginary part of q; q must be nonreal."""
        if q.is_real():
            raise ZeroDirection("quaternion has no imaginary direction")
        return cls(q.x, q.y, q.z)

    def is_zero(self) -> bool:
        return (
            scalar_is_zero(self.dx)
            and scalar_is_zero(self.dy)
            and scalar_is_zero(self.dz)
        )

    def components(self):
        return (self.dx, self.dy, self.dz)

    def as_quaternion(self) -> Quaternion:
        return Quaternion(0, self.dx, self.dy, self.dz)

    def normsq(self):
        return self.dx * self.dx + self.dy * self.dy + self.dz * self.dz

    def dot(self, other: "PureDirection"):
        return self.dx * other.dx + self.dy * other.dy + self.dz * other.dz

    def cross_is_zero(self, other: "PureDirection") -> bool:
        return (
            scalar_is_zero(self.dy * other.dz - self.dz * other.dy)
            and scalar_is_zero(self.dz * other.dx - self.dx * other.dz)
            and scalar_is_zero(self.dx * other.dy - self.dy * other.dx)
        )

    def __neg__(self):
        return PureDirection(-self.dx, -self.dy, -self.dz)

    def to_float(self) -> "PureDirection":
        return PureDirection(float(self.dx), float(self.dy), float(self.dz))

    def __repr__(self):
        return f"PureDirection({self.dx!r}, {self.dy!r}, {self.dz!r})"


def same_direction(u: PureDirection, v: PureDirection) -> bool:
    """Parallel with positive ratio: u x v == 0 and u . v > 0."""
    return u.cross_is_zero(v) and u.dot(v) > 0


def conjugate_point(q: Quaternion, point) -> tuple:
    """Coordinatewise v -> q v q^-1; preserves Re and |Im| of each coordinate."""
    if q.is_zero():
        raise DivisionByZero("conjugation by zero")
    qi = q.inverse()
    return tuple(q * v * qi for v in point)


def _norm_product(u: PureDirection, v: PureDirection):
    """|u|*|v| in the scalar mode of the inputs.

    Exact inputs require |u|^2*|v|^2 to be a rational square; otherwise the
    conjugator has no exact representation.
    """
    s = u.normsq() * v.normsq()
    if isinstance(s, float):
        return math.sqrt(s)
    r = exact_sqrt(s)
    if r is None:
        raise ExactConjugatorUnavailable(
            f"|u|^2*|v|^2 = {s} is not a rational square; retry in float mode"
        )
    return r


def _orthogonal_direction(u: PureDirection) -> PureDirection:
    """Deterministic pure direction orthogonal to u: u x e for the first
    standard basis direction e not parallel to u."""
    for e in (PureDirection(1, 0, 0), PureDirection(0, 1, 0), PureDirection(0, 0, 1)):
        if not u.cross_is_zero(e):
            ux, uy, uz = u.components()
            ex, ey, ez = e.components()
            return PureDirection(
                uy * ez - uz * ey, uz * ex - ux * ez, ux * ey - uy * ex
            )
    raise ZeroDirection("no orthogonal direction for zero input")  # pragma: no cover


def conjugator_pair(u: PureDirection, v: PureDirection):
    """Quaternions (ap, am) with ap u ap^-1 || +v and am u am^-1 || -v.

    Generic formula for target t in {v, -v}: alpha = |u||t| - t*u (quaternion
    product of the pure representatives).  Parallel/antiparallel targets are
    handled by the identity and by a half-turn about a deterministic axis
    orthogonal to u.
    """
    if u.is_zero() or v.is_zero():
        raise ZeroDirection("conjugator endpoints must be nonzero")
    if u.cross_is_zero(v):
        half_turn = _orthogonal_direction(u).as_quaternion()
        if u.dot(v) > 0:
            alpha_plus, alpha_minus = ONE, half_turn
        else:
            alpha_plus, alpha_minus = half_turn, ONE
    else:
        r = _norm_product(u, v)
        tu = v.as_quaternion() * u.as_quaternion()
        alpha_plus = Quaternion.from_scalar(r) - tu
        alpha_minus = Quaternion.from_scalar(r) + tu
    _check_conjugator(alpha_plus, u, v)
    _check_conjugator(alpha_minus, u, -v)
    return alpha_plus, alpha_minus


def _check_conjugator(alpha: Quaternion, u: PureDirection, target: PureDirection):
    image = alpha * u.as_quaternion() * alpha.inverse()
    if not same_direction(PureDirection(image.x, image.y, image.z), target):
        raise VerificationFailed(
            f"conjugator {alpha!r} does not map {u!r} onto {target!r}"
        )
