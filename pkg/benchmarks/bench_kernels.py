"""Time the pure-Python kernels against the compiled ones on identical inputs.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--seed 0]

Every workload is run on both backends; the outputs must agree, so the table
doubles as a consistency check.
"""
from __future__ import annotations

import argparse
import sys
import time

import numpy as np

from rtw._backend import kernels


def _random_w2(rng, t: int) -> list[int]:
    w = rng.integers(0, 3, size=(t, t))
    w = np.triu(w, 1)
    w = w + w.T
    return [int(x) for x in w.ravel()]


def _random_adj(rng, n: int, p: float) -> list[int]:
    adj = [0] * n
    for i in range(n):
        for j in range(i + 1, n):
            if rng.random() < p:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    return adj


def workloads(seed: int):
    rng = np.random.Generator(np.random.PCG64(seed))
    for t in (8, 10, 12):
        w2 = _random_w2(rng, t)
        yield f"kkt_scan t={t}", 0, (w2, t)
    for n, p in ((80, 0.6), (150, 0.5), (200, 0.4)):
        adj = _random_adj(rng, n, p)
        yield f"max_clique n={n} p={p}", 1, (adj,)
    for n, p, k in ((150, 0.5, 14), (300, 0.2, 7)):
        adj = _random_adj(rng, n, p)
        yield f"find_clique n={n} p={p} k={k}", 2, (adj, k)


def best_time(fn, args, repeat: int):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return out, best


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    py = kernels("python")
    try:
        cy = kernels("cython")
    except ImportError:
        print("compiled extension not built; run `pip install -e . --no-build-isolation`", file=sys.stderr)
        return 2
    print(f"{'workload':<34} {'python s':>10} {'cython s':>10} {'speedup':>8}  agree")
    ok = True
    for name, k, wl_args in workloads(args.seed):
        a, ta = best_time(py[k], wl_args, args.repeat)
        b, tb = best_time(cy[k], wl_args, args.repeat)
        same = a == b
        ok &= same
        print(f"{name:<34} {ta:>10.4f} {tb:>10.4f} {ta / max(tb, 1e-9):>8.1f}  {same}")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
