from array import array
from random import Random

import pytest

from quatpoly import KERNEL_BACKEND, Quaternion
from quatpoly import _kernel_py
from quatpoly.exprio import parse_poly
from quatpoly.fuzzing import rand_point, rand_poly

try:
    from quatpoly import _kernel_c
except ImportError:
    _kernel_c = None


def test_backend_selected():
    assert KERNEL_BACKEND in ("compiled", "pure")


@pytest.mark.skipif(_kernel_c is None, reason="compiled kernel not built")
def test_backends_agree_bitwise():
    rng = Random(801)
    for _ in range(300):
        a = tuple(rng.uniform(-3, 3) for _ in range(4))
        b = tuple(rng.uniform(-3, 3) for _ in range(4))
        assert _kernel_py.qmul(a, b) == _kernel_c.qmul(a, b)
        assert _kernel_py.qnormsq(a) == _kernel_c.qnormsq(a)
        assert _kernel_py.qinv(a) == _kernel_c.qinv(a)
        assert _kernel_py.qconj(a, b) == _kernel_c.qconj(a, b)
    for _ in range(200):
        nvars = rng.randint(1, 5)
        nterms = rng.randint(1, 8)
        exps = array("l")
        coefs = array("d")
        for _ in range(nterms):
            exps.extend(rng.randint(0, 5) for _ in range(nvars))
            coefs.extend(rng.uniform(-2, 2) for _ in range(4))
        point = array("d", [rng.uniform(-2, 2) for _ in range(4 * nvars)])
        assert _kernel_py.eval_poly(exps, coefs, point, nvars) == _kernel_c.eval_poly(
            exps, coefs, point, nvars
        )


def test_float_evaluate_matches_exact_evaluation():
    rng = Random(802)
    for _ in range(60):
        n = rng.randint(1, 3)
        f = rand_poly(rng, n, 4, 5)
        p = rand_point(rng, n)
        exact_value = f.evaluate(p)
        float_value = f.to_float().evaluate(tuple(q.to_float() for q in p))
        for e, g in zip(exact_value.components(), float_value.components()):
            assert abs(float(e) - g) <= 1e-9 * (1 + abs(float(e)))


def test_kernel_handles_empty_and_constant_cases():
    f = parse_poly("7", 0, exact=False)
    assert f.evaluate(()) == Quaternion(7.0, 0.0, 0.0, 0.0)
    g = parse_poly("x1-x1", 1, exact=False)
    assert g.evaluate((Quaternion(1.0, 2.0, 3.0, 4.0),)).is_zero()
