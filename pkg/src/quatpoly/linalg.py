"""Linear algebra over the quaternions with left-sided unknowns.

Systems have the shape sum_t a_t * M[t, s] = b[s]: the unknowns multiply the
matrix entries from the LEFT.  Elimination therefore combines rows with
multipliers applied on the left; getting the side wrong would silently
corrupt solutions over a noncommutative division ring.

Row reduction runs Gauss-Jordan on the augmented block [M | I].  The identity
block accumulates the invertible E with E*M = R, so left-nullspace generators
are simply the E-rows facing zero R-rows, and solutions of a*M = b are read
off as a = y*E where y solves y*R = b against the pivot structure.
"""

from __future__ import annotations

from .errors import Inconsistent, Underdetermined
from .quaternion import Quaternion


class HMatrix:
    """Dense row-major quaternion matrix."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries):
        entries = tuple(entries)
        if len(entries) != rows * cols:
            raise ValueError(f"expected {rows * cols} entries, got {len(entries)}")
        object.__setattr__(self, "rows", rows)
        object.__setattr__(self, "cols", cols)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("HMatrix is immutable")

    @classmethod
    def from_rows(cls, rows) -> "HMatrix":
        rows = [list(r) for r in rows]
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, [v for r in rows for v in r])

    def entry(self, r: int, c: int) -> Quaternion:
        return self.entries[r * self.cols + c]

    def row(self, r: int):
        return self.entries[r * self.cols : (r + 1) * self.cols]

    def is_exact(self) -> bool:
        return all(v.is_exact() for v in self.entries)


def _reduce(M: HMatrix):
    """Gauss-Jordan on [M | I]; returns (R rows, E rows, pivots as (row, col))."""
    m, ncols = M.rows, M.cols
    exact = M.is_exact()
    work = []
    for r in range(m):
        row = list(M.row(r))
        row.extend(
            Quaternion.one() if t == r else Quaternion.zero() for t in range(m)
        )
        work.append(row)
    pivots = []
    rank = 0
    for c in range(ncols):
        if rank == m:
            break
        best = None
        if exact:
            for rr in range(rank, m):
                if not work[rr][c].is_zero():
                    best = rr
                    break
        else:
            size = None
            for rr in range(rank, m):
                ns = work[rr][c].normsq()
                if not work[rr][c].is_zero() and (size is None or ns > size):
                    best, size = rr, ns
        if best is None:
            continue
        work[rank], work[best] = work[best], work[rank]
        pinv = work[rank][c].inverse()
        work[rank] = [pinv * v for v in work[rank]]
        for rr in range(m):
            if rr == rank:
                continue
            factor = work[rr][c]
            if factor.is_zero():
                continue
            pivot_row = work[rank]
            work[rr] = [v - factor * p for v, p in zip(work[rr], pivot_row)]
        pivots.append((rank, c))
        rank += 1
    R = [row[:ncols] for row in work]
    E = [row[ncols:] for row in work]
    return R, E, pivots


def solve_left(M: HMatrix, b):
    """The unique a with sum_t a_t*M[t,s] = b[s].

    Raises Inconsistent when no solution exists and Underdetermined when the
    solution is not unique (rank below the number of unknowns).
    """
    b = tuple(b)
    if len(b) != M.cols:
        raise ValueError(f"rhs length {len(b)} != {M.cols} equations")
    R, E, pivots = _reduce(M)
    y = [Quaternion.zero()] * M.rows
    pivot_cols = set()
    for r, c in pivots:
        y[r] = b[c]
        pivot_cols.add(c)
    for s in range(M.cols):
        if s in pivot_cols:
            continue
        acc = Quaternion.zero()
        for r, _ in pivots:
            acc = acc + y[r] * R[r][s]
        if not (b[s] - acc).is_zero():
            raise Inconsistent(f"equation {s} unsatisfiable")
    if len(pivots) < M.rows:
        raise Underdetermined(
            f"rank {len(pivots)} < {M.rows} unknowns; use nullspace_left"
        )
    return tuple(
        _row_times(y, [E[r][t] for r in range(M.rows)]) for t in range(M.rows)
    )


def _row_times(y, col):
    acc = Quaternion.zero()
    for yr, er in zip(y, col):
        if not yr.is_zero():
            acc = acc + yr * er
    return acc


def nullspace_left(M: HMatrix):
    """Maximal independent set of row tuples a with a*M = 0 (may be empty)."""
    R, E, _ = _reduce(M)
    out = []
    for r in range(M.rows):
        if all(v.is_zero() for v in R[r]):
            out.append(tuple(E[r]))
    return out


def residual_left(M: HMatrix, a, b=None):
    """sum_t a_t*M[t,s] - b[s] per equation; b defaults to zero."""
    a = tuple(a)
    if len(a) != M.rows:
        raise ValueError(f"solution length {len(a)} != {M.rows} unknowns")
    out = []
    for s in range(M.cols):
        acc = Quaternion.zero()
        for t in range(M.rows):
            acc = acc + a[t] * M.entry(t, s)
        if b is not None:
            acc = acc - b[s]
        out.append(acc)
    return tuple(out)
