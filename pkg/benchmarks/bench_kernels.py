"""Micro-benchmark: compiled float kernels vs the pure-Python twin.

Run:  python benchmarks/bench_kernels.py [--repeat N]

Covers the two hot paths (quaternion product, ordered polynomial evaluation)
plus one macro case (float-mode evaluation through CentralPoly).  Both
backends must agree bit-for-bit; the benchmark asserts that while timing.
"""

import argparse
import random
import time
from array import array

from quatpoly import _kernel_py

try:
    from quatpoly import _kernel_c
except ImportError:
    _kernel_c = None


def _rand_case(rng, nvars, nterms, maxdeg):
    exps = array("l")
    coefs = array("d")
    for _ in range(nterms):
        exps.extend(rng.randint(0, maxdeg) for _ in range(nvars))
        coefs.extend(rng.uniform(-2, 2) for _ in range(4))
    point = array("d", [rng.uniform(-2, 2) for _ in range(4 * nvars)])
    return exps, coefs, point


def bench_qmul(mod, pairs, repeat):
    qmul = mod.qmul
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for a, b in pairs:
            qmul(a, b)
        best = min(best, time.perf_counter() - t0)
    return best


def bench_eval(mod, cases, repeat):
    eval_poly = mod.eval_poly
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        for exps, coefs, point, nvars in cases:
            eval_poly(exps, coefs, point, nvars)
        best = min(best, time.perf_counter() - t0)
    return best


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=0)
    args = parser.parse_args()

    if _kernel_c is None:
        print("compiled kernel not built; nothing to compare")
        return

    rng = random.Random(args.seed)
    pairs = [
        (
            tuple(rng.uniform(-2, 2) for _ in range(4)),
            tuple(rng.uniform(-2, 2) for _ in range(4)),
        )
        for _ in range(20000)
    ]
    cases = [
        (*_rand_case(rng, rng.randint(2, 5), rng.randint(3, 24), 4), None)
        for _ in range(400)
    ]
    cases = [(e, c, p, len(p) // 4) for e, c, p, _ in cases]

    for a, b in pairs[:500]:
        assert _kernel_py.qmul(a, b) == _kernel_c.qmul(a, b)
    for e, c, p, nv in cases:
        assert _kernel_py.eval_poly(e, c, p, nv) == _kernel_c.eval_poly(e, c, p, nv)
    print("backends agree bit-for-bit on the sampled workload")

    t_pure = bench_qmul(_kernel_py, pairs, args.repeat)
    t_comp = bench_qmul(_kernel_c, pairs, args.repeat)
    print(f"qmul      x20000: pure {t_pure * 1e3:7.2f} ms | compiled {t_comp * 1e3:7.2f} ms | speedup {t_pure / t_comp:5.1f}x")

    t_pure = bench_eval(_kernel_py, cases, args.repeat)
    t_comp = bench_eval(_kernel_c, cases, args.repeat)
    print(f"eval_poly x400:   pure {t_pure * 1e3:7.2f} ms | compiled {t_comp * 1e3:7.2f} ms | speedup {t_pure / t_comp:5.1f}x")


if __name__ == "__main__":
    main()
