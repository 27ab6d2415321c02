#!/usr/bin/env python3
"""Benchmark the compiled term-dict kernels against the pure-Python fallback.

Times the raw kernels on representative workloads (dense quantum-integer
squares, the unified Alexander recursion, the HOMFLY recursion) and prints
a side-by-side table.  Runs fine without the extension; it then reports
the pure backend only.
"""

import argparse
import timeit

from knotpoly._kernels import pure

try:
    from knotpoly._kernels import _speedups
except ImportError:
    _speedups = None


def _dense_uni(n):
    """Term dict resembling the n-th quantum integer: n dense half-steps."""
    return {2 * (n - 1) - 4 * i: 1 for i in range(n)}


def _homfly_terms(m):
    from knotpoly import homfly_rec

    return homfly_rec(m)[m].terms


def _walk_unified(kernels, s_max):
    step = {1: 1, -1: -1}
    prev, cur = {0: 1}, dict(step)
    for _ in range(s_max - 2):
        prev, cur = cur, kernels.add_terms(kernels.mul_terms(step, cur), prev)
    return cur


def _walk_homfly(kernels, m_max):
    coeff = {(4, 4): 1, (4, 0): 2}
    a4 = {(8, 0): 1}
    prev, cur = {(0, 0): 1}, {(4, 0): 2, (4, 4): 1, (8, 0): -1}
    for _ in range(m_max - 1):
        prev, cur = cur, kernels.sub_terms(
            kernels.bi_mul_terms(coeff, cur), kernels.bi_mul_terms(a4, prev)
        )
    return cur


def build_workloads(scale):
    big = _dense_uni(400 * scale)
    small = _dense_uni(40 * scale)
    homfly = _homfly_terms(60 * scale)
    return [
        (
            f"univariate mul   ({len(small)} x {len(big)} terms)",
            lambda k: k.mul_terms(small, big),
        ),
        (
            f"univariate square ({len(big)} terms)",
            lambda k: k.mul_terms(big, big),
        ),
        (
            f"bivariate square  ({len(homfly)} terms)",
            lambda k: k.bi_mul_terms(homfly, homfly),
        ),
        (
            f"unified recursion (s = {400 * scale})",
            lambda k: _walk_unified(k, 400 * scale),
        ),
        (
            f"homfly recursion  (m = {60 * scale})",
            lambda k: _walk_homfly(k, 60 * scale),
        ),
    ]


def best_time(func, repeats, number):
    return min(timeit.repeat(func, repeat=repeats, number=number)) / number


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--scale", type=int, default=1, help="workload size multiplier")
    parser.add_argument("--repeats", type=int, default=3)
    parser.add_argument("--number", type=int, default=3, help="calls per timing sample")
    args = parser.parse_args()

    workloads = build_workloads(args.scale)
    print(f"{'workload':<42} {'pure':>10} {'compiled':>10} {'speedup':>8}")
    for name, call in workloads:
        pure_t = best_time(lambda: call(pure), args.repeats, args.number)
        if _speedups is None:
            print(f"{name:<42} {pure_t * 1e3:>8.2f}ms {'n/a':>10} {'n/a':>8}")
            continue
        fast_t = best_time(lambda: call(_speedups), args.repeats, args.number)
        assert call(pure) == call(_speedups), "backends disagree"
        print(
            f"{name:<42} {pure_t * 1e3:>8.2f}ms {fast_t * 1e3:>8.2f}ms "
            f"{pure_t / fast_t:>7.2f}x"
        )
    if _speedups is None:
        print("\ncompiled kernels not built; showing pure backend only")


if __name__ == "__main__":
    main()
