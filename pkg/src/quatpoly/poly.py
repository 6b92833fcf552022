"""The central polynomial ring over the quaternions.

Elements are sparse maps from exponent multi-indices to quaternion
coefficients, coefficients collected on the left.  Variables are central, so
monomials multiply by adding exponents while coefficients multiply in ring
order.  Evaluation substitutes coordinates in the fixed descending variable
order x1 > x2 > ... > xn; it is additive and left-linear but NOT
multiplicative, which is the whole point of the theory.
"""

from __future__ import annotations

from array import array

from . import _kernel
from .errors import ArityMismatch
from .quaternion import Quaternion
from .scalarmode import coerce_scalar


def _is_literal_zero(q: Quaternion) -> bool:
    # literal, not tolerance-based: normalization must not depend on eps
    return q.w == 0 and q.x == 0 and q.y == 0 and q.z == 0


def _as_coefficient(v) -> Quaternion:
    if isinstance(v, Quaternion):
        return v
    return Quaternion.from_scalar(coerce_scalar(v))


class CentralPoly:
    """Sparse element of H[x1..xn]."""

    __slots__ = ("n", "_terms", "_items", "_flat")

    def __init__(self, n: int, terms=None):
        if n < 0:
            raise ValueError("arity must be nonnegative")
        object.__setattr__(self, "n", n)
        clean = {}
        for exps, coef in (terms or {}).items():
            exps = tuple(int(e) for e in exps)
            if len(exps) != n:
                raise ArityMismatch(f"exponent tuple {exps} has length != {n}")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            coef = _as_coefficient(coef)
            if not _is_literal_zero(coef):
                clean[exps] = coef
        object.__setattr__(self, "_terms", clean)
        # canonical order: descending lexicographic by exponent tuple
        object.__setattr__(
            self, "_items", tuple(sorted(clean.items(), key=lambda kv: kv[0], reverse=True))
        )
        object.__setattr__(self, "_flat", None)

    def __setattr__(self, name, value):
        raise AttributeError("CentralPoly is immutable")

    # -- constructors ---------------------------------------------------------

    @classmethod
    def zero(cls, n: int) -> "CentralPoly":
        return cls(n, {})

    @classmethod
    def const(cls, n: int, value) -> "CentralPoly":
        return cls(n, {(0,) * n: _as_coefficient(value)})

    @classmethod
    def variable(cls, n: int, index: int) -> "CentralPoly":
        """The monomial x_index (1-based, matching x1..xn)."""
        if not 1 <= index <= n:
            raise ArityMismatch(f"variable index {index} outside 1..{n}")
        exps = tuple(1 if t == index - 1 else 0 for t in range(n))
        return cls(n, {exps: Quaternion.one()})

    @classmethod
    def monomial(cls, coef, exps) -> "CentralPoly":
        exps = tuple(exps)
        return cls(len(exps), {exps: _as_coefficient(coef)})

    # -- access ----------------------------------------------------------------

    def items(self):
        """Terms in canonical (descending lexicographic) order."""
        return self._items

    def coefficient(self, exps) -> Quaternion:
        return self._terms.get(tuple(exps), Quaternion.zero())

    def __len__(self):
        return len(self._terms)

    def is_zero(self) -> bool:
        return all(coef.is_zero() for _, coef in self._items)

    def degree(self):
        """Total degree; -inf sentinel for the zero polynomial."""
        if not self._terms:
            return float("-inf")
        return max(sum(exps) for exps in self._terms)

    def max_variable_index(self) -> int:
        """Highest variable index (1-based) actually referenced; 0 if constant."""
        best = 0
        for exps in self._terms:
            for t in range(self.n - 1, best - 1, -1):
                if exps[t]:
                    best = t + 1
                    break
        return best

    def is_exact(self) -> bool:
        return all(coef.is_exact() for _, coef in self._items)

    def to_float(self) -> "CentralPoly":
        return CentralPoly(self.n, {e: c.to_float() for e, c in self._items})

    # -- ring operations ---------------------------------------------------------

    def _check_arity(self, other: "CentralPoly"):
        if self.n != other.n:
            raise ArityMismatch(f"arity {self.n} vs {other.n}")

    def __add__(self, other):
        other = self._coerce(other)
        self._check_arity(other)
        acc = dict(self._terms)
        for exps, coef in other._items:
            cur = acc.get(exps)
            acc[exps] = coef if cur is None else cur + coef
        return CentralPoly(self.n, acc)

    __radd__ = __add__

    def __neg__(self):
        return CentralPoly(self.n, {e: -c for e, c in self._items})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, CentralPoly):
            # right scalar: sum a_I * c  x^I
            c = _as_coefficient(other)
            return CentralPoly(self.n, {e: coef * c for e, coef in self._items})
        self._check_arity(other)
        acc: dict = {}
        for ea, ca in self._items:
            for eb, cb in other._items:
                key = tuple(x + y for x, y in zip(ea, eb))
                prod = ca * cb
                cur = acc.get(key)
                acc[key] = prod if cur is None else cur + prod
        return CentralPoly(self.n, acc)

    def __rmul__(self, other):
        # left scalar: sum c * a_I  x^I
        c = _as_coefficient(other)
        return CentralPoly(self.n, {e: c * coef for e, coef in self._items})

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        out = CentralPoly.const(self.n, 1)
        base = self
        while k:
            if k & 1:
                out = out * base
            k >>= 1
            if k:
                base = base * base
        return out

    def _coerce(self, other) -> "CentralPoly":
        if isinstance(other, CentralPoly):
            return other
        return CentralPoly.const(self.n, other)

    def __eq__(self, other):
        if not isinstance(other, CentralPoly):
            return NotImplemented
        if self.n != other.n or set(self._terms) != set(other._terms):
            return False
        return all(other._terms[e] == c for e, c in self._items)

    __hash__ = None

    # -- evaluation ----------------------------------------------------------------

    def evaluate(self, point) -> Quaternion:
        """Ordered substitution: sum_I a_I q1^i1 ... qn^in."""
        point = tuple(point)
        if len(point) != self.n:
            raise ArityMismatch(f"point length {len(point)} != arity {self.n}")
        if not self._items:
            return Quaternion.zero()
        if self._all_float() and all(
            isinstance(c, float) for q in point for c in q.components()
        ):
            exps, coefs = self._float_tables()
            flat_point = array("d")
            for q in point:
                flat_point.extend(q.components())
            return Quaternion(*_kernel.eval_poly(exps, coefs, flat_point, self.n))
        powers = [_power_table(q, m) for q, m in zip(point, self._max_exps())]
        acc = Quaternion.zero()
        for exps, coef in self._items:
            term = coef
            for t, e in enumerate(exps):
                if e:
                    term = term * powers[t][e]
            acc = acc + term
        return acc

    def partial_prefix(self, prefix) -> "CentralPoly":
        """Substitute the first len(prefix) coordinates, keeping the rest
        symbolic; prefix power products are absorbed into the coefficients on
        the left of the surviving variables."""
        prefix = tuple(prefix)
        i = len(prefix)
        if not i < self.n:
            raise ArityMismatch(f"prefix length {i} must be < arity {self.n}")
        if not self._items:
            return CentralPoly.zero(self.n - i)
        maxes = self._max_exps()
        powers = [_power_table(q, m) for q, m in zip(prefix, maxes[:i])]
        acc: dict = {}
        for exps, coef in self._items:
            term = coef
            for t in range(i):
                if exps[t]:
                    term = term * powers[t][exps[t]]
            key = exps[i:]
            cur = acc.get(key)
            acc[key] = term if cur is None else cur + term
        return CentralPoly(self.n - i, acc)

    def _max_exps(self):
        maxes = [0] * self.n
        for exps in self._terms:
            for t, e in enumerate(exps):
                if e > maxes[t]:
                    maxes[t] = e
        return maxes

    def _all_float(self) -> bool:
        return all(
            isinstance(c, float) for _, coef in self._items for c in coef.components()
        )

    def _float_tables(self):
        flat = self._flat
        if flat is None:
            exps = array("l")
            coefs = array("d")
            for e, coef in self._items:
                exps.extend(e)
                coefs.extend(coef.components())
            flat = (exps, coefs)
            object.__setattr__(self, "_flat", flat)
        return flat

    def __repr__(self):
        from .exprio import print_poly

        return f"CentralPoly({self.n}, {print_poly(self)!r})"

    def __str__(self):
        from .exprio import print_poly

        return print_poly(self)


def _power_table(q: Quaternion, maxexp: int):
    table = [Quaternion.one()]
    for _ in range(maxexp):
        table.append(table[-1] * q)
    return table


# -- spec operation aliases ---------------------------------------------------------


def poly_mul(f: CentralPoly, g: CentralPoly) -> CentralPoly:
    return f * g


def evaluate(f: CentralPoly, point) -> Quaternion:
    return f.evaluate(point)


def partial_evaluate_prefix(f: CentralPoly, prefix) -> CentralPoly:
    return f.partial_prefix(prefix)


def degree(f: CentralPoly):
    return f.degree()


def is_zero(f: CentralPoly) -> bool:
    return f.is_zero()


def from_real_quadratic(n: int, index: int, trace, norm) -> CentralPoly:
    """x_t^2 - trace*x_t + norm for 1-based t = index (real central coefficients)."""
    sq = tuple(2 if t == index - 1 else 0 for t in range(n))
    lin = tuple(1 if t == index - 1 else 0 for t in range(n))
    cst = (0,) * n
    return CentralPoly(
        n,
        {
            sq: Quaternion.one(),
            lin: Quaternion.from_scalar(-coerce_scalar(trace)),
            cst: Quaternion.from_scalar(coerce_scalar(norm)),
        },
    )
