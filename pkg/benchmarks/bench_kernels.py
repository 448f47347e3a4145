#!/usr/bin/env python3
"""Benchmark the compiled kernels against the pure-numpy fallback.

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import time

import numpy as np

from quadspec import Graph
from quadspec.kernels import implementations


def make_graph(rng, n, p):
    tri = np.triu(rng.random((n, n)) < p, 1)
    return Graph.from_dense(tri | tri.T)


def bench(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    rng = np.random.default_rng(0)
    impls = implementations()
    if "compiled" not in impls:
        print("note: compiled lane not built; showing pure lane only")

    cases = []
    g = make_graph(rng, 512, 0.3)
    degs = np.ascontiguousarray(g.degrees(), dtype=np.int64)
    cases.append(("codegree count      n=512", lambda impl, g=g:
                  impl.c4_codegree_count(g.words, g.n)))
    cases.append(("closed 4-walks      n=512", lambda impl, g=g, d=degs:
                  impl.closed_walk4_total(g.words, d, g.n)))
    g20 = make_graph(rng, 20, 0.5)
    cases.append(("4-subset enumeration n=20", lambda impl, g=g20:
                  impl.c4_enum_count(g.words, g.n)))
    g128 = make_graph(rng, 128, 0.2)
    a128 = g128.dense()
    cases.append(("dense eigenvalues   n=128", lambda impl, a=a128:
                  impl.dense_eigvals(a)[0]))

    width = max(len(name) for name, _ in cases)
    header = f"{'kernel':<{width}}"
    for lane in sorted(impls):
        header += f"  {lane:>12}"
    if len(impls) == 2:
        header += f"  {'speedup':>8}"
    print(header)
    print("-" * len(header))
    for name, call in cases:
        times = {}
        values = {}
        for lane, impl in impls.items():
            times[lane], values[lane] = bench(lambda: call(impl), args.repeat)
        line = f"{name:<{width}}"
        for lane in sorted(impls):
            line += f"  {times[lane] * 1e3:>10.2f}ms"
        if len(impls) == 2:
            ratio = times["pure"] / times["compiled"]
            line += f"  {ratio:>7.2f}x" if ratio >= 0.1 else f"  {ratio:>7.3f}x"
        print(line)
        if len(values) == 2:
            a, b = values["pure"], values["compiled"]
            agree = (abs(a - b) < 1e-9) if isinstance(a, float) else a == b
            assert agree, f"lane disagreement on {name}: {a} vs {b}"


if __name__ == "__main__":
    main()
