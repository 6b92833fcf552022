"""Scalar coefficients and the exact/float dual mode.

A scalar is either exact (``fractions.Fraction``, with ``int`` accepted and
coerced) or floating (``float``).  Exact values compare literally; a
comparison involving a float uses the relative tolerance

    |u - v| <= eps * (1 + max(|u|, |v|))

with a per-run global ``eps`` (default 1e-9).  The mode of a value is carried
by its type, so mixed arithmetic degrades to float exactly when Python's
numeric tower does.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction

DEFAULT_EPSILON = 1e-9

_epsilon = DEFAULT_EPSILON


def get_epsilon() -> float:
    return _epsilon


def set_epsilon(eps: float) -> None:
    global _epsilon
    if eps <= 0:
        raise ValueError("epsilon must be positive")
    _epsilon = float(eps)


@contextmanager
def epsilon(eps: float):
    """Temporarily override the float-mode tolerance."""
    global _epsilon
    old = _epsilon
    set_epsilon(eps)
    try:
        yield
    finally:
        _epsilon = old


def coerce_scalar(v):
    """Normalize a scalar: int/Fraction stay exact, float stays float."""
    if isinstance(v, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, (Fraction, float)):
        return v
    raise TypeError(f"unsupported scalar type {type(v).__name__}")


def is_exact_scalar(v) -> bool:
    return isinstance(v, (int, Fraction)) and not isinstance(v, bool)


def scalar_eq(u, v) -> bool:
    if isinstance(u, float) or isinstance(v, float):
        return abs(u - v) <= _epsilon * (1 + max(abs(u), abs(v)))
    return u == v


def scalar_is_zero(u) -> bool:
    if isinstance(u, float):
        return abs(u) <= _epsilon * (1 + abs(u))
    return u == 0


def as_float(v) -> float:
    return float(v)


def exact_sqrt(v: Fraction):
    """Square root of a nonnegative rational, or None if irrational."""
    if v < 0:
        raise ValueError("negative radicand")
    v = Fraction(v)
    pr = math.isqrt(v.numerator)
    qr = math.isqrt(v.denominator)
    if pr * pr == v.numerator and qr * qr == v.denominator:
        return Fraction(pr, qr)
    return None


def scalar_to_json(v):
    """Exact scalars as 'p/q' strings, floats as JSON numbers."""
    if isinstance(v, float):
        return v
    return str(Fraction(v))


def scalar_from_json(v):
    if isinstance(v, str):
        return Fraction(v)
    if isinstance(v, bool):
        raise ValueError("bool is not a scalar")
    if isinstance(v, int):
        return Fraction(v)
    if isinstance(v, float):
        return v
    raise ValueError(f"cannot read scalar from {v!r}")
