from random import Random

import pytest

from quatpoly import ArityMismatch, CentralPoly, QI, QJ, QK, Quaternion
from quatpoly.exprio import parse_poly
from quatpoly.fuzzing import rand_commuting_point, rand_point, rand_poly, rand_quaternion


def test_mul_variable_collects_coefficient_left():
    x1 = CentralPoly.variable(1, 1)
    f = x1 * CentralPoly.const(1, QJ)
    assert f == QJ * x1
    assert f.coefficient((1,)) == QJ


def test_mul_conjugate_linear_factors():
    x1 = CentralPoly.variable(1, 1)
    prod = (x1 - CentralPoly.const(1, QI)) * (x1 + CentralPoly.const(1, QI))
    assert prod == parse_poly("x1^2+1", 1)


def test_mul_coefficient_order():
    x1 = CentralPoly.variable(1, 1)
    assert (QI * x1) * (QJ * x1) == QK * x1 ** 2
    assert (QJ * x1) * (QI * x1) == -QK * x1 ** 2


def test_mul_arity_mismatch():
    with pytest.raises(ArityMismatch):
        CentralPoly.variable(1, 1) * CentralPoly.variable(2, 1)


def test_evaluate_ordered_product():
    f = parse_poly("x1*x2", 2)
    assert f.evaluate((QI, QJ)) == QK


def test_evaluate_is_not_multiplicative():
    f = parse_poly("j*x1", 1)
    # substitution gives j*i = -k, while value-wise product would be i*j = k
    assert f.evaluate((QI,)) == -QK
    x1 = parse_poly("x1", 1)
    j = parse_poly("j", 1)
    assert x1.evaluate((QI,)) * j.evaluate((QI,)) == QK


def test_evaluate_acceptance_instance():
    f = parse_poly("x1^2*x2^2-1", 2)
    assert f.evaluate((QI, QJ)).is_zero()


def test_evaluate_arity_mismatch():
    with pytest.raises(ArityMismatch):
        parse_poly("x1", 1).evaluate((QI, QJ))


def test_partial_prefix_examples():
    f = parse_poly("x1*x2", 2)
    assert f.partial_prefix((QI,)) == QI * CentralPoly.variable(1, 1)
    g = parse_poly("x2^2+1", 2)
    assert g.partial_prefix((rand_quaternion(Random(7)),)) == parse_poly("x1^2+1", 1)
    h = parse_poly("x1*x2 + k*x1", 2)
    assert h.partial_prefix((QJ,)) == QJ * CentralPoly.variable(1, 1) - CentralPoly.const(1, QI)


def test_partial_prefix_consistency_random():
    rng = Random(301)
    for _ in range(200):
        n = rng.randint(2, 4)
        i = rng.randint(1, n - 1)
        f = rand_poly(rng, n, 4, 5)
        v1 = rand_point(rng, i)
        v2 = rand_point(rng, n - i)
        assert f.partial_prefix(v1).evaluate(v2) == f.evaluate(v1 + v2)


def test_degree_examples():
    assert parse_poly("x1^2*x2", 2).degree() == 3
    assert CentralPoly.zero(2).degree() == float("-inf")
    assert parse_poly("5", 2).degree() == 0
    assert CentralPoly.zero(2).is_zero()
    assert not parse_poly("5", 2).is_zero()


def test_ring_axioms_random():
    rng = Random(302)
    for _ in range(150):
        n = rng.randint(1, 3)
        f, g, h = (rand_poly(rng, n, 3, 4) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
        assert (f + g) * h == f * h + g * h


def test_evaluation_is_additive_and_left_linear():
    rng = Random(303)
    for _ in range(150):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 3, 4)
        g = rand_poly(rng, n, 3, 4)
        p = rand_point(rng, n)
        a = rand_quaternion(rng)
        assert (f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p)
        assert (a * f).evaluate(p) == a * f.evaluate(p)


def test_left_multiples_vanish_at_commuting_zeros():
    # for commuting p: (f*g)(p) = sum_I a_I g(p) p^I, so g(p) = 0 kills f*g
    rng = Random(304)
    for _ in range(100):
        n = rng.randint(1, 3)
        p = rand_commuting_point(rng, n)
        t = rng.randint(1, n)
        g = CentralPoly.variable(n, t) - CentralPoly.const(n, p[t - 1])
        f = rand_poly(rng, n, 3, 4)
        assert g.evaluate(p).is_zero()
        assert (f * g).evaluate(p).is_zero()


def test_ordered_product_formula_at_commuting_points():
    rng = Random(305)
    for _ in range(100):
        n = rng.randint(1, 3)
        p = rand_commuting_point(rng, n)
        f = rand_poly(rng, n, 3, 4)
        g = rand_poly(rng, n, 3, 4)
        expected = Quaternion.zero()
        for exps, coef in f.items():
            power = Quaternion.one()
            for t, e in enumerate(exps):
                for _ in range(e):
                    power = power * p[t]
            expected = expected + coef * g.evaluate(p) * power
        assert (f * g).evaluate(p) == expected


def test_power_cache_matches_naive_product():
    rng = Random(306)
    for _ in range(50):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 5, 4)
        p = rand_point(rng, n)
        naive = Quaternion.zero()
        for exps, coef in f.items():
            acc = coef
            for t, e in enumerate(exps):
                for _ in range(e):
                    acc = acc * p[t]
            naive = naive + acc
        assert f.evaluate(p) == naive


def test_max_variable_index():
    assert parse_poly("x1^2+1", 3).max_variable_index() == 1
    assert parse_poly("x1*x3", 3).max_variable_index() == 3
    assert parse_poly("7", 3).max_variable_index() == 0
    assert CentralPoly.zero(3).max_variable_index() == 0


def test_no_zero_coefficients_stored():
    f = parse_poly("x1 - x1", 1)
    assert len(f) == 0 and f.is_zero()
    g = parse_poly("x1 + i*x1", 1)
    assert len(g) == 1
    assert g.coefficient((1,)) == Quaternion(1, 1, 0, 0)


def test_float_coefficients_use_kernel_path():
    f = parse_poly("x1^2*x2^2-1", 2, exact=False)
    p = (Quaternion(0.0, 1.0, 0.0, 0.0), Quaternion(0.0, 0.0, 1.0, 0.0))
    assert f.evaluate(p).is_zero()
    # kernel path (float coefficients) agrees with the generic path
    g_float = parse_poly("x1*x2+x1", 2, exact=False)
    g_exact = parse_poly("x1*x2+x1", 2)
    pf = tuple(q.to_float() for q in rand_point(Random(8), 2))
    assert g_float.evaluate(pf) == g_exact.evaluate(pf)
