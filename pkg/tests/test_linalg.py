from random import Random

import pytest

from quatpoly import (
    HMatrix,
    Inconsistent,
    QI,
    QJ,
    QK,
    Quaternion,
    Underdetermined,
    nullspace_left,
    residual_left,
    solve_left,
)
from quatpoly.fuzzing import rand_quaternion


def _zeros(k):
    return tuple(Quaternion.zero() for _ in range(k))


def test_solve_single_entry():
    M = HMatrix.from_rows([[QI]])
    (a,) = solve_left(M, (QJ,))
    assert a == QK  # j * i^-1
    assert a * QI == QJ


def test_solve_identity():
    rows = [[Quaternion(1 if r == c else 0) for c in range(3)] for r in range(3)]
    b = (QI, Quaternion(2, 0, 3, 0), QK)
    assert solve_left(HMatrix.from_rows(rows), b) == b


def test_solve_unique_zero_solution():
    M = HMatrix.from_rows([[Quaternion(1), QI], [Quaternion(1), QJ]])
    assert solve_left(M, _zeros(2)) == _zeros(2)


def test_solve_inconsistent():
    M = HMatrix.from_rows([[Quaternion(1), Quaternion(1)]])
    with pytest.raises(Inconsistent):
        solve_left(M, (Quaternion(1), Quaternion(2)))


def test_solve_underdetermined():
    M = HMatrix.from_rows([[Quaternion(1)], [QI]])
    with pytest.raises(Underdetermined):
        solve_left(M, (Quaternion(1),))


def test_nullspace_of_zero_matrix():
    M = HMatrix.from_rows([[Quaternion.zero()], [Quaternion.zero()]])
    basis = nullspace_left(M)
    assert len(basis) == 2
    for vec in basis:
        assert all(r.is_zero() for r in residual_left(M, vec))


def test_nullspace_of_identity_is_trivial():
    rows = [[Quaternion(1 if r == c else 0) for c in range(2)] for r in range(2)]
    assert nullspace_left(HMatrix.from_rows(rows)) == []


def test_nullspace_single_relation():
    M = HMatrix.from_rows([[Quaternion(1)], [QI]])
    basis = nullspace_left(M)
    assert len(basis) == 1
    assert all(r.is_zero() for r in residual_left(M, basis[0]))
    assert any(not v.is_zero() for v in basis[0])


def test_random_solvable_systems_have_exact_residuals():
    rng = Random(201)
    done = 0
    while done < 60:
        rows = rng.randint(1, 6)
        cols = rng.randint(rows, 6)  # at least as many equations as unknowns
        M = HMatrix.from_rows(
            [[rand_quaternion(rng) for _ in range(cols)] for _ in range(rows)]
        )
        truth = tuple(rand_quaternion(rng) for _ in range(rows))
        b = tuple(
            sum((truth[t] * M.entry(t, s) for t in range(rows)), Quaternion.zero())
            for s in range(cols)
        )
        try:
            a = solve_left(M, b)
        except Underdetermined:
            continue  # rank-deficient random draw
        assert all(r.is_zero() for r in residual_left(M, a, b))
        done += 1


def test_nullspace_count_is_rows_minus_rank():
    rng = Random(202)
    for _ in range(40):
        rank = rng.randint(1, 3)
        rows = rank + rng.randint(0, 3)
        cols = rng.randint(rank, 4)
        # build a matrix of known rank: random (rows x rank) times (rank x cols)
        A = [[rand_quaternion(rng) for _ in range(rank)] for _ in range(rows)]
        B = [[rand_quaternion(rng) for _ in range(cols)] for _ in range(rank)]
        rows_m = [
            [
                sum((A[r][t] * B[t][c] for t in range(rank)), Quaternion.zero())
                for c in range(cols)
            ]
            for r in range(rows)
        ]
        M = HMatrix.from_rows(rows_m)
        basis = nullspace_left(M)
        assert len(basis) >= rows - rank
        for vec in basis:
            assert all(r.is_zero() for r in residual_left(M, vec))


def test_float_mode_pivoting():
    M = HMatrix.from_rows(
        [
            [Quaternion(1e-14, 0.0, 0.0, 0.0), Quaternion(1.0, 0.0, 0.0, 0.0)],
            [Quaternion(1.0, 0.0, 0.0, 0.0), Quaternion(0.0, 1.0, 0.0, 0.0)],
        ]
    )
    truth = (Quaternion(0.0, 1.0, 0.0, 0.0), Quaternion(2.0, 0.0, 0.0, 0.0))
    b = tuple(
        sum((truth[t] * M.entry(t, s) for t in range(2)), Quaternion.zero())
        for s in range(2)
    )
    a = solve_left(M, b)
    for r in residual_left(M, a, b):
        assert r.is_zero()
