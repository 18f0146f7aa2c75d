"""Compare the numba and numpy BFS kernels on random bitset graphs.

Usage: python benchmarks/bench_backends.py [--sizes 16,32,64] [--repeats 200]
"""

import argparse
import random
import statistics
import time

import numpy as np

from distlab import _kernels
from distlab.graphs import from_edge_list


def random_adj(rng: random.Random, n: int, p: float) -> np.ndarray:
    edges = [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p]
    return from_edge_list(n, edges).adj


def timed(fn, adjs, repeats):
    best = []
    for adj in adjs:
        runs = []
        for _ in range(repeats):
            t0 = time.perf_counter()
            fn(adj)
            runs.append(time.perf_counter() - t0)
        best.append(min(runs))
    return statistics.mean(best)


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--sizes", default="16,32,64")
    parser.add_argument("--repeats", type=int, default=50)
    parser.add_argument("--graphs", type=int, default=20, help="graphs per size")
    parser.add_argument("--density", type=float, default=0.12)
    args = parser.parse_args()

    if _kernels.apd_numba is None:
        print("numba unavailable; nothing to compare")
        return 1

    rng = random.Random(2024)
    sizes = [int(s) for s in args.sizes.split(",")]
    # first call pays the JIT compile, keep it out of the timings
    warm = random_adj(rng, 8, 0.3)
    _kernels.apd_numba(warm)
    _kernels.pair_numba(warm)

    print(f"{'kernel':<14}{'n':>4}{'numba ms':>12}{'numpy ms':>12}{'speedup':>10}")
    for n in sizes:
        adjs = [random_adj(rng, n, args.density) for _ in range(args.graphs)]
        for name, fn_nb, fn_np in (
            ("distances", _kernels.apd_numba, _kernels.apd_numpy),
            ("diameter-pair", _kernels.pair_numba, _kernels.pair_numpy),
        ):
            t_nb = timed(fn_nb, adjs, args.repeats)
            t_np = timed(fn_np, adjs, args.repeats)
            for adj in adjs[:3]:
                a, b = fn_nb(adj), fn_np(adj)
                if name == "distances":
                    assert np.array_equal(a, b)
                else:
                    assert tuple(a) == tuple(b)
            print(
                f"{name:<14}{n:>4}{t_nb * 1e3:>12.3f}{t_np * 1e3:>12.3f}"
                f"{t_np / t_nb:>10.1f}"
            )
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
