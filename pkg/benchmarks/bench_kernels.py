"""Compare the compiled and pure-Python kernels.

    python3 benchmarks/bench_kernels.py [--max-m 6] [--repeat 3]
"""

import argparse
import time

from exotic_springer import kernels
from exotic_springer._kernels_py import character_gram as py_gram, orienting_masks as py_masks


def best_of(fn, repeat: int) -> float:
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("--max-m", type=int, default=6)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    if kernels.BACKEND != "cython":
        print("compiled kernels unavailable; only the Python timings are meaningful")
    print(f"{'kernel':<16}{'m':>3}{'python s':>12}{'compiled s':>12}{'speedup':>10}")
    for m in range(1, args.max_m + 1):
        assert kernels.character_gram(m) == py_gram(m)
        tp = best_of(lambda: py_gram(m), args.repeat)
        tc = best_of(lambda: kernels.character_gram(m), args.repeat)
        print(f"{'character_gram':<16}{m:>3}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.1f}")
    for m in range(8, 8 + 2 * args.max_m, 4):
        pairs = [(i, i + 1) for i in range(0, m - 1, 4)]
        ray_mask = 1 << (m - 1)
        assert kernels.orienting_masks(m, pairs, ray_mask) == py_masks(m, pairs, ray_mask)
        tp = best_of(lambda: py_masks(m, pairs, ray_mask), args.repeat)
        tc = best_of(lambda: kernels.orienting_masks(m, pairs, ray_mask), args.repeat)
        print(f"{'orienting_masks':<16}{m:>3}{tp:>12.4f}{tc:>12.4f}{tp / tc:>10.1f}")


if __name__ == "__main__":
    main()
